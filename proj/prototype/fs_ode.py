import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import loggamma, gammaln, betaln
import mpmath as mp
mp.mp.dps = 25

theta, beta, gam = 1.0, 6.0, 3.0
Lam = theta*beta*beta/(8*(beta-2))
I = 1j

# f1(x,k) via SL ODE:  c2(x) f'' + c1(x) f' + lam f = 0
# c2 = 2 theta x (gam x + beta)/(gam (beta-2)), c1 = -theta(x - beta/(beta-2))
def f1_ode_grid(k, xs, rtol=1e-11):
    lam = Lam + 2*theta*k*k/(beta-2)
    a = -beta/4 + I*k; b = -beta/4 - I*k; c = gam/2
    # start from series at x0 small enough: k^2*|z| <= 0.1 -> x0 = 0.1*beta/(gam*k^2), capped
    x0 = min(0.1*beta/(gam*max(k*k,1.0)), 0.9*xs[0], 0.05)
    # series f = sum (a)_j(b)_j/((c)_j j!) z^j, z = -gam x0/beta ; derivative wrt x
    z = -gam*x0/beta
    term = 1.0+0j; s = 1.0+0j; ds = 0.0+0j
    for j in range(200):
        dterm = term*(j+1)/x0 if False else None
        term_next = term*(a+j)*(b+j)/((c+j)*(j+1))*z
        s += term_next
        ds += term_next*(j+1)/x0
        term = term_next
        if abs(term) < 1e-18*abs(s): break
    f0, df0 = s.real, ds.real
    def rhs(x, y):
        c2 = 2*theta*x*(gam*x+beta)/(gam*(beta-2))
        c1 = -theta*(x - beta/(beta-2))
        return [y[1], -(lam*y[0] + c1*y[1])/c2]
    sol = solve_ivp(rhs, (x0, xs[-1]), [f0, df0], t_eval=xs, rtol=rtol, atol=1e-13, method='RK45', max_step=0.5/max(k,1))
    return sol.y[0]

# validate against mpmath
for (x, k) in [(0.5, 2.0), (2.0, 5.0), (2.0, 15.0), (5.0, 25.0), (10.0, 40.0)]:
    ve = float(mp.re(mp.hyp2f1(-beta/4+mp.mpc(0,1)*k, -beta/4-mp.mpc(0,1)*k, gam/2, -gam*x/beta)))
    vo = f1_ode_grid(k, np.array([x]))[0]
    print('x=%5.2f k=%5.1f  mp=%.12e ode=%.12e rel=%.2e' % (x, k, ve, vo, abs(vo-ve)/abs(ve)))

# ---- FS density normalization at alpha=1, t=1, x0=1 ----
def fs_dens(x):
    return np.exp(beta/2*np.log(beta) - betaln(gam/2, beta/2) + (gam/2-1)*np.log(gam*x)
                  - (gam+beta)/2*np.log(gam*x+beta) + np.log(gam))
# normalized polys: F0=1, F1 = K1*gam*(beta-(beta-2)x)
K1 = -np.sqrt(np.exp(betaln(gam/2,beta/2) - betaln(gam/2+1, beta/2-2))/( (2*beta)**2*(beta/2-1) ))
def F1p(x): return K1*gam*(beta-(beta-2)*x)
lam1 = theta/(beta-2)*1*(beta-2)
print('K1 =', K1, ' check <F1^2 fs> below; lam1 =', lam1)

from scipy.integrate import quad
o11,_ = quad(lambda x: F1p(x)**2*fs_dens(x), 0, np.inf, limit=300)
o01,_ = quad(lambda x: F1p(x)*fs_dens(x), 0, np.inf, limit=300)
print('FS <F1,F1>_m = %.10f  <F0,F1>_m = %.2e' % (o11, o01))

def a_jac(k):  # a(lam)*dlam/dk, scaled via loggamma: 4 theta k^2/(beta-2)|...|^2
    ln = (0.5*betaln(gam/2,beta/2) + loggamma(-beta/4+1j*k).real + loggamma(gam/2+beta/4+1j*k).real
          - gammaln(gam/2) - loggamma(1+2j*k).real)
    return 4*theta*k*k/(beta-2)*np.exp(2*ln)

t = 1.0; x0 = 1.0
xs = np.concatenate([np.linspace(0.02, 2, 120), np.linspace(2.05, 10, 90), np.linspace(10.2, 120, 110)])
ks = np.linspace(1e-8, 8.0, 400)     # e^{-lam t}: lam(k=8)=33 -> weight 4e-15, enough
fx = np.empty((len(ks), len(xs))); f0v = np.empty(len(ks))
import time; t0=time.time()
for i,k in enumerate(ks):
    fx[i] = f1_ode_grid(k, xs, rtol=1e-10)
    f0v[i] = f1_ode_grid(k, np.array([x0]), rtol=1e-10)[0]
print('ODE sweeps: %.1fs' % (time.time()-t0))
lam = Lam + 2*theta*ks**2/(beta-2)
W = np.exp(-lam*t)*np.array([a_jac(k) for k in ks])
cont = fs_dens(xs)/np.pi * np.trapezoid(W[:,None]*fx*f0v[:,None], ks, axis=0)
disc = fs_dens(xs)*(1 + np.exp(-lam1*t)*F1p(xs)*F1p(x0))
tot = disc + cont
print('FS p1(x,1;1) at x=0.4,1,3:', [float(np.interp(v, xs, tot)) for v in (0.4,1.0,3.0)])
print('min p =', tot.min())
print('int p dx ~', np.trapezoid(tot, xs), ' int disc=', np.trapezoid(disc, xs), ' int cont=', np.trapezoid(cont, xs))
# vs mpmath spot value at x=1
def p1_mp(x):
    d = float(fs_dens(x))*(1 + np.exp(-lam1*t)*F1p(x)*F1p(x0))
    integ = lambda k: float(np.exp(-float(Lam + 2*theta*k**2/(beta-2))*t)*a_jac(float(k)))*\
        float(mp.re(mp.hyp2f1(-beta/4+mp.mpc(0,1)*float(k), -beta/4-mp.mpc(0,1)*float(k), gam/2, -gam*x/beta)))*\
        float(mp.re(mp.hyp2f1(-beta/4+mp.mpc(0,1)*float(k), -beta/4-mp.mpc(0,1)*float(k), gam/2, -gam*x0/beta)))
    c = float(fs_dens(x))/np.pi*float(mp.quad(integ, [0, 1, 2, 4, 8]))
    return d + c
v = p1_mp(1.0)
print('mpmath p1(1,1;1) =', v, ' numpy =', float(np.interp(1.0, xs, tot)))
