import numpy as np
from scipy.special import loggamma, gammaln, erfc
import time

# ---- Kummer 1F1 series (complex a,b, real z>0), returns complex sum ----
def hyp1f1_series(a, b, z, tol=1e-15, max_terms=2000):
    term = 1.0 + 0j; s = 1.0 + 0j
    for j in range(max_terms):
        term *= (a + j) * z / ((b + j) * (j + 1))
        s += term
        if abs(term) < tol * abs(s):
            return s
    raise RuntimeError('1F1 no convergence')

# ---- scaled Whittaker W_{kappa, i k}(z), real result, log-scaled ----
# W = -2*pi*Im(S)/sinh(2 pi k),  S = M_{kappa,ik}(z) / (Gamma(1/2 - ik - kappa) * Gamma(1+2ik))
# ln M = -z/2 + (1/2 + ik) ln z + Log(1F1(-...))
def log_whittaker_w_ik(kappa, k, z):
    """returns (log|W|, sign) for W_{kappa, i k}(z), z>0, k>0"""
    a = 0.5 + 1j*k - kappa
    b = 1.0 + 2j*k
    F = hyp1f1_series(a, b, z)
    lnM = -z/2 + (0.5 + 1j*k)*np.log(z) + np.log(F)
    lnS = lnM - loggamma(0.5 - 1j*k - kappa) - loggamma(1.0 + 2j*k)
    rho, phi = lnS.real, lnS.imag
    # ln sinh(2 pi k) stable
    x = 2*np.pi*k
    lnsinh = x + np.log1p(-np.exp(-2*x)) - np.log(2.0)
    s = np.sin(phi)
    if s == 0.0: return -np.inf, 1.0
    return np.log(2*np.pi) + rho + np.log(abs(s)) - lnsinh, -np.sign(s)

def psi_rg(x, k, beta, gamma_):
    """log-scaled psi(x,-lambda) = x^{(b+1)/2} e^{g/2x} W_{(b+1)/2, ik}(g/x)"""
    lw, sg = log_whittaker_w_ik((beta+1)/2, k, gamma_/x)
    return (beta+1)/2*np.log(x) + gamma_/(2*x) + lw, sg

def b_jacobian(k, theta, beta, gamma_):
    """b(lam(k)) * dlam/dk, log-scaled. |Gamma(2ik)|^2 = pi/(2k sinh(2pi k))."""
    x2 = 2*np.pi*k
    lnsinh = x2 + np.log1p(-np.exp(-2*x2)) - np.log(2.0)
    ln = (np.log(2*theta/(beta-1)) - (beta+1)*np.log(gamma_) + gammaln(beta)
          + 2*loggamma(-beta/2 + 1j*k).real + np.log(2*k) + lnsinh - np.log(np.pi))
    return ln

# Mittag-Leffler E_alpha(-x) via series / integral rep
def ml_neg(alpha, x):
    if alpha == 1.0: return np.exp(-x)
    if x <= 1.0:
        s = 0.0; term = 1.0; j = 0
        while True:
            s += term; j += 1
            term = (-x)**j / np.exp(gammaln(1+alpha*j))
            if abs(term) < 1e-17: break
        return s
    # integral: sin(a pi)/(pi a) * int_0^inf exp(-s^{1/a} x) / (s^2+2 s cos(a pi)+1) ds
    from scipy.integrate import quad
    th = alpha*np.pi
    f = lambda s: np.exp(-s**(1/alpha)*x)/(s*s + 2*s*np.cos(th) + 1)
    v1,_ = quad(f, 0, 1, epsabs=1e-14, epsrel=1e-13, limit=200)
    v2,_ = quad(f, 1, np.inf, epsabs=1e-14, epsrel=1e-13, limit=200)
    return np.sin(th)/(np.pi*alpha)*(v1+v2)

# quick ML sanity
print('ML(0.5,1) =', ml_neg(0.5, 1.0), 'exact =', np.exp(1)*erfc(1))
print('ML(0.7,25) =', ml_neg(0.7, 25.0))

# ---- RG density ----
theta, beta, gamma_ = 1.0, 5.0, 2.0
Lam = theta*beta*beta/(4*(beta-1))
lam_n = np.array([theta/(beta-1)*n*(beta-n) for n in range(3)])
def rg_density(x): return np.exp(beta*np.log(gamma_) - gammaln(beta) - (beta+1)*np.log(x) - gamma_/x)

# normalized Bessel polys for beta=5,gamma=2 via explicit Rodrigues (deg <=2)
# B~0 = 1; B~1 = (1-beta)x + gamma ; B~2: p=2n-b-1=-2: d2/dx2[x^-2 e^-g/x] expand:
# f=x^-2 e^{-g/x}; f' = (-2x^-3 + g x^-4) e; f'' = (6x^-4 -2g x^-5 + (-4g x^-5 + g^2 x^-6) +  ... ) e
# do it symbolically:
import sympy as sp
X = sp.symbols('x', positive=True)
bS, gS = sp.Rational(5), sp.Rational(2)
polys = []
for n in range(3):
    expr = sp.simplify(X**(bS+1)*sp.exp(gS/X)*sp.diff(X**(2*n-bS-1)*sp.exp(-gS/X), X, n))
    Kn = sp.Rational(-1)**n/gS**n * sp.sqrt((bS-2*n)*sp.gamma(bS)/(sp.gamma(n+1)*sp.gamma(bS-n+1)))
    p = sp.expand(Kn*expr)
    polys.append(sp.lambdify(X, p, 'numpy'))
    print('B_%d =' % n, sp.nsimplify(p))

def p_alpha(x, t, x0, alpha, kmax=40.0, nk=4000):
    w = (lambda lam: np.array([ml_neg(alpha, l*t**alpha) for l in np.atleast_1d(lam)])) if alpha < 1 else (lambda lam: np.exp(-lam*t))
    disc = rg_density(x)*sum(w(np.array([lam_n[n]]))[0]*polys[n](x0)*polys[n](x) for n in range(3))
    # continuous: trapezoid in k (prototype)
    ks = np.linspace(1e-9, kmax, nk)
    vals = np.empty_like(ks)
    for i,k in enumerate(ks):
        lam = Lam + theta*k*k/(beta-1)
        lpsi_x, sx = psi_rg(x, k, beta, gamma_)
        lpsi_0, s0 = psi_rg(x0, k, beta, gamma_)
        lb = b_jacobian(k, theta, beta, gamma_)
        vals[i] = sx*s0*np.exp(lb + lpsi_x + lpsi_0)*ml_neg(alpha, lam*t**alpha)
    cont = rg_density(x)/(4*np.pi)*np.trapz(vals, ks)
    return disc, cont, ks, vals

t0 = time.time()
d, c, ks, vals = p_alpha(1.0, 1.0, 1.0, 1.0)
print('alpha=1  x=1: disc=%.8f cont=%.8f tot=%.8f  (%.2fs)' % (d, c, d+c, time.time()-t0))
# inspect integrand envelope decay
for kk in [2,5,10,20,39]:
    i = np.searchsorted(ks, kk)
    print('  k=%4.0f integrand=%.3e' % (kk, vals[i]))

print('--- alpha=0.7 ---')
d, c, ks, vals = p_alpha(1.0, 1.0, 1.0, 0.7, kmax=60.0, nk=6000)
print('alpha=0.7 x=1: disc=%.8f cont=%.8f tot=%.8f' % (d, c, d+c))
for kk in [2,5,10,20,40,59]:
    i = np.searchsorted(ks, kk)
    print('  k=%4.0f integrand=%.3e  envelope*k^3=%.3e' % (kk, vals[i], vals[i]*kk**3))
# tail estimate beyond kmax: integrand ~ A k^-3 (E~1/lam ~ k^-2, weight*psi^2 ~ k^-1)
A = vals[-1]*ks[-1]**3
print('tail est beyond k=60: ~ A/(2 k^2) =', A/(2*60**2))

# normalization over x at alpha=0.7 (coarse x grid + trapezoid)
xs = np.concatenate([np.linspace(0.05, 2, 80), np.linspace(2.05, 12, 60), np.linspace(12.2, 60, 40)])
t0 = time.time()
tot = np.empty_like(xs); dd = np.empty_like(xs); cc = np.empty_like(xs)
for i,x in enumerate(xs):
    d, c, _, _ = p_alpha(x, 1.0, 1.0, 0.7, kmax=40.0, nk=1200)
    tot[i] = d + c; dd[i] = d; cc[i] = c
print('min p_alpha over grid =', tot.min())
print('int p dx (trapz) =', np.trapz(tot, xs), ' int disc =', np.trapz(dd, xs), ' int cont =', np.trapz(cc, xs), '(%.1fs)' % (time.time()-t0))
