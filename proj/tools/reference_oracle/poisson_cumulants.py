# Copyright 2026 The kerrsu Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import sympy as sp
l,g=sp.symbols('l g',positive=True)
n=sp.symbols('n')
# Poisson raw moments via factorial moments
def E(expr):
    p=sp.Poly(sp.expand(expr),n)
    tot=0
    for (k,),c in p.terms():
        # n^k = sum S(k,j) n_(j), E[n_(j)] = l^j
        tot+=c*sum(sp.functions.combinatorial.numbers.stirling(k,j)*l**j for j in range(k+1))
    return sp.expand(tot)
u=4*n*(n-1)**2; w=4*n**2*(n+1)
print('e_w',E(w))
print('cov_nu',sp.expand(E(n*u)-E(n)*E(u)))
print('cov_nw',sp.expand(E(n*w)-E(n)*E(w)))
print('var_u',sp.expand(E(u*u)-E(u)**2))
print('var_w',sp.expand(E(w*w)-E(w)**2))
print('cov_uw',sp.expand(E(u*w)-E(u)*E(w)))
