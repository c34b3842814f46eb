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

# Independent Schrodinger-picture oracle (pure states, explicit ancillas).
import numpy as np, scipy.sparse as sp
from scipy.sparse.linalg import expm_multiply
from math import factorial
import sys

def ops(dims):
    mats=[]
    for k,d in enumerate(dims):
        a=sp.diags(np.sqrt(np.arange(1,d)),1,format='csr').astype(complex)
        m=sp.identity(1,format='csr',dtype=complex)
        for j,dj in enumerate(dims):
            m=sp.kron(m, a if j==k else sp.identity(dj,format='csr'),format='csr')
        mats.append(m)
    return mats

def run(alpha,gamma,r1,r2,th1,th2,phi,mu=1,eta=1,N=40,NA=None,kerr='exact'):
    lossy = mu<1 or eta<1
    dims=[N+1,N+1]+([NA+1]*3 if lossy else [])
    A=ops(dims); a,b=A[0],A[1]
    D=np.prod(dims)
    n=np.arange(N+1)
    c=np.array([np.exp(-alpha**2/2)*alpha**k/np.sqrt(float(factorial(k))) for k in n],complex)
    psi=np.zeros(D,complex); stride=D//(N+1)
    psi[::stride][:N+1]=c
    na=(a.conj().T@a)
    if kerr=='exact':
        diag=na.diagonal().real
        psi=np.exp(-1j*gamma*diag*(diag-1))*psi
    def sq(psi,r,th):
        G=r*(np.exp(1j*th)*(a.conj().T@b.conj().T)-np.exp(-1j*th)*(a@b))
        return expm_multiply(G,psi)
    def bs(psi,m,v,T):
        t=np.arccos(np.sqrt(T))
        G=t*(m.conj().T@v-m@v.conj().T)
        return expm_multiply(G,psi)
    psi=sq(psi,r1,th1)
    if mu<1:
        psi=bs(psi,a,A[2],mu); psi=bs(psi,b,A[3],mu)
    psi=np.exp(1j*phi*na.diagonal().real)*psi
    psi=sq(psi,r2,th2)
    if eta<1: psi=bs(psi,a,A[4],eta)
    if kerr=='linearized':
        raise SystemExit('use exact')
    v1=a@psi; v2=a@v1
    return dict(m1=np.vdot(psi,v1),m2=np.vdot(psi,v2),n1=np.vdot(v1,v1).real,n2=np.vdot(v2,v2).real,
                tail=np.sum(np.abs(psi.reshape(dims)[-1])**2))

if __name__=='__main__':
    np.set_printoptions(precision=17)
    for args,kw in [((1,1e-4,0.5,0.5,0,np.pi,0.3),dict(N=40)),((1,1e-4,0.5,0.5,0,np.pi,0.3),dict(N=50)),
                    ((1,0,0.5,0.5,0,np.pi,0.3),dict(N=40)),
                    ((0.5,1e-4,0.2,0.2,0,np.pi,0.3),dict(mu=0.7,eta=0.9,N=12,NA=8)),
                    ((0.5,1e-4,0.2,0.2,0,np.pi,0.3),dict(mu=0.7,eta=0.9,N=14,NA=10))]:
        res=run(*args,**kw)
        print(args,kw,{k:repr(complex(v)) for k,v in res.items()})
