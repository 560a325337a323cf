import numpy as np
from scipy.special import loggamma, gammaln
from scipy.integrate import quad
exec(open('/root/proj/prototype/rg_proto.py').read().split("# quick ML sanity")[0].replace("np.exp(-s**(1/alpha)*x)","np.exp(-(s*x)**(1/alpha))"))
theta, beta, gamma_ = 1.0, 5.0, 2.0
Lam = theta*beta*beta/(4*(beta-1))
# envelope study at alpha=0.7, t=1, x=x0=1: g(k) = E * bjac * psi(x)psi(x0)
def g(k, x, x0, alpha, t):
    lam = Lam + theta*k*k/(beta-1)
    lx, sx = psi_rg(x, k, beta, gamma_); l0, s0 = psi_rg(x0, k, beta, gamma_)
    return sx*s0*np.exp(b_jacobian(k, theta, beta, gamma_) + lx + l0)*ml_neg(alpha, lam*t**alpha)
for K in [20, 40, 80, 160, 320]:
    ks = np.linspace(K/2, K, 400)
    vals = np.array([g(k,1.0,1.0,0.7,1.0) for k in ks])
    env_k2 = np.mean(vals*ks**2)   # fit c2 = mean(g k^2)
    print('octave [%3d,%3d]: mean(g*k^2) = %.4f   tail_est c2/K = %.3e' % (K/2, K, env_k2, env_k2/K))
# full integral to K=320 + tail, compare with K=80 + tail
def cont_int(K, n=6000):
    ks = np.linspace(1e-9, K, n)
    vals = np.array([g(k,1.0,1.0,0.7,1.0) for k in ks])
    c2 = np.mean(vals[ks>K/2]*(ks[ks>K/2])**2)
    return np.trapezoid(vals, ks), c2/K
for K in [40, 80, 160, 320]:
    v, tail = cont_int(K, int(40*K))
    print('K=%3d: int=%.8f tail_est=%.2e  int+tail=%.8f' % (K, v, tail, v+tail))
