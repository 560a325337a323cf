import mpmath as mp
mp.mp.dps = 30
theta, beta, gam = mp.mpf(1), mp.mpf(6), mp.mpf(3)
I = mp.mpc(0,1)
def f1(x, k): return mp.hyp2f1(-beta/4 + I*k, -beta/4 - I*k, gam/2, -gam*x/beta)
# Jacobi-function asymptotic: f1 ~ 2 Re[ c(k) e^{(beta/2 + 2ik) u} ], sinh^2 u = gam x/beta
# c(k) = 2^{-beta/2 - 2ik} Gamma(gam/2) Gamma(2ik) / ( Gamma(-beta/4+ik) Gamma(gam/2+beta/4+ik) )
def f1_hc(x, k):
    u = mp.asinh(mp.sqrt(gam*x/beta))
    c = 2**(-beta/2-2*I*k)*mp.gamma(gam/2)*mp.gamma(2*I*k)/(mp.gamma(-beta/4+I*k)*mp.gamma(gam/2+beta/4+I*k))
    return 2*mp.re(c*mp.e**((beta/2+2*I*k)*u))
for x in [mp.mpf(2), mp.mpf('0.5'), mp.mpf(10)]:
    for k in [mp.mpf(5), mp.mpf(10), mp.mpf(20), mp.mpf(50), mp.mpf(100)]:
        va = f1_hc(x, k); ve = mp.re(f1(x, k))
        print('x=%4s k=%4s  f1=%12s hc=%12s rel=%s' % (x, k, mp.nstr(ve,8), mp.nstr(va,8), mp.nstr(abs(va-ve)/abs(ve),4)))
