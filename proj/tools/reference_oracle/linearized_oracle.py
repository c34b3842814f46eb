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

# Linearized-Kerr Heisenberg oracle: K=(1-2i*gamma*n)a, explicit sparse matrices.
import numpy as np, scipy.sparse as sp
from scipy.special import gammaln

def coherent(alpha,N):
    n=np.arange(N+1)
    if alpha==0:
        c=np.zeros(N+1); c[0]=1; return c.astype(complex)
    return np.exp(-alpha**2/2+n*np.log(alpha)-0.5*gammaln(n+1)).astype(complex)

def run(alpha,gamma,r1,r2,th1,th2,phi,mu=1,eta=1,N=None,M=6):
    if N is None: N=int(alpha**2+12*alpha+40)
    lossy=mu<1 or eta<1
    dims=[N+1,M]+([M]*3 if lossy else [])
    def emb(k,op):
        m=sp.identity(1,format='csr',dtype=complex)
        for j,d in enumerate(dims):
            m=sp.kron(m, op if j==k else sp.identity(d,format='csr'),format='csr')
        return m
    low=lambda d: sp.diags(np.sqrt(np.arange(1,d)),1,format='csr').astype(complex)
    a0=low(N+1); n0=sp.diags(np.arange(N+1)).astype(complex)
    K=emb(0,(sp.identity(N+1)-2j*gamma*n0)@a0)
    b=emb(1,low(M))
    H=lambda x: x.conj().T
    ch1,sh1,ch2,sh2=np.cosh(r1),np.sinh(r1),np.cosh(r2),np.sinh(r2)
    a1=ch1*K+np.exp(1j*th1)*sh1*H(b)
    b1=ch1*b+np.exp(1j*th1)*sh1*H(K)
    psi=np.zeros(np.prod(dims),complex); stride=np.prod(dims)//(N+1)
    psi[::stride][:N+1]=coherent(alpha,N)
    c1p=a1@psi; b1p=b1@psi; n1p=H(a1)@c1p; n2p=H(b1)@b1p
    e1=np.vdot(c1p,c1p).real; e2=np.vdot(b1p,b1p).real
    d1=n1p-e1*psi; d2=n2p-e2*psi
    stats=dict(var1=np.vdot(d1,d1).real,var2=np.vdot(d2,d2).real,cov=np.vdot(d1,d2).real)
    if mu<1:
        a1=np.sqrt(mu)*a1+np.sqrt(1-mu)*emb(2,low(M))
        b1=np.sqrt(mu)*b1+np.sqrt(1-mu)*emb(3,low(M))
    a1=np.exp(1j*phi)*a1
    d=ch2*a1+np.exp(1j*th2)*sh2*H(b1)
    if eta<1: d=np.sqrt(eta)*d+np.sqrt(1-eta)*emb(4,low(M))
    v1=d@psi; v2=d@v1
    return dict(m1=np.vdot(psi,v1),m2=np.vdot(psi,v2),n1=np.vdot(v1,v1).real,n2=np.vdot(v2,v2).real,**stats)

if __name__=='__main__':
    pi=np.pi
    cases=[('A',(1,1e-4,0.5,0.5,0,pi,0.3),{}),
           ('L',(0.5,1e-4,0.2,0.2,0,pi,0.3),dict(mu=0.7,eta=0.9)),
           ('L2',(1,1e-4,0.5,0.5,0,pi,0.3),dict(mu=0.7,eta=0.9)),
           ('L3',(1,1e-4,0.5,0.5,0,pi,0.3),dict(mu=0.7)),
           ('B',(2,1e-3,0.8,0.8,0,pi,5.9),{}),
           ('F5',(100,1e-6,2,2,0,pi,6.15),dict(M=8))]
    for name,args,kw in cases:
        r=run(*args,**kw)
        print(name,{k:repr(complex(v)) if isinstance(v,complex) else repr(float(v)) for k,v in r.items()})
