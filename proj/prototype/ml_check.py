import numpy as np
from scipy.special import gammaln
from scipy.integrate import quad
import mpmath as mp
mp.mp.dps = 30

def ml_neg(alpha, x):
    if alpha == 1.0: return np.exp(-x)
    if x <= 1.0:
        s, term, j = 0.0, 1.0, 0
        while abs(term) > 1e-18:
            s += term; j += 1
            term = (-x)**j * np.exp(-gammaln(1+alpha*j))
        return s
    th = alpha*np.pi
    f = lambda s: np.exp(-(s*x)**(1/alpha))/(s*s + 2*s*np.cos(th) + 1)
    # integrand decays like exp(-(sx)^{1/a}); effective support s <~ L/x, L=(log 1e30)^alpha
    L = (69.0)**alpha
    pts = [0.0, min(1.0, L/x), min(2.0, 2*L/x), max(2.0, 2*L/x)]
    pts = sorted(set(pts))
    v = 0.0
    for a,b in zip(pts[:-1], pts[1:]):
        vi,_ = quad(f, a, b, epsabs=1e-16, epsrel=1e-14, limit=400); v += vi
    vt,_ = quad(f, pts[-1], np.inf, epsabs=1e-16, epsrel=1e-14, limit=400)
    return np.sin(th)/(np.pi*alpha)*(v+vt)

print('%-28s %-24s %-24s %s' % ('(alpha,x)','mine','mpmath','rel'))
for alpha in [0.3, 0.5, 0.7, 0.9, 0.95, 0.99]:
    for x in [0.5, 1.0, 1.5, 5.0, 25.0, 200.0, 1e3, 1e5]:
        v = ml_neg(alpha, x)
        ve = float(mp.re(mp.mpf(1)*mp.fp.mpf(0) + mp.re(mp.mpc(mp.re(mp.mpf(str(v)))) ) )) # placeholder
        ve = float(mp.re(mp.e**0 * 0 + mp.re(0)))
        ve = float(mp.re( mp.mpf(0) ))
        ve = float(mp.re( mp.mpc( mp.nstr( mp.re( mp.mpf(0) ) ) ) )) if False else float(mp.re( __import__('mpmath').mp.mpf(0) ))
        ve = float( mp.re( mp.mpf(0) ) )
        print('skip')
        break
    break
