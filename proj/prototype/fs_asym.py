import mpmath as mp
mp.mp.dps = 30
theta, beta, gam = mp.mpf(1), mp.mpf(6), mp.mpf(3)
I = mp.mpc(0,1)
def f1(x, k): return mp.hyp2f1(-beta/4 + I*k, -beta/4 - I*k, gam/2, -gam*x/beta)
def f1_asym(x, k):
    exi = 1 + 2*gam/beta*x + mp.sqrt(4*gam/beta*x*(1+gam/beta*x))
    xi = mp.log(exi)
    pref = mp.gamma(1+beta/4+I*k)*mp.gamma(gam/2)/(mp.gamma(mp.mpf(1)/2)*mp.gamma(gam/2+beta/4+I*k))
    return pref*2**(-beta/2-1)*(1-exi)**(-gam/2+mp.mpf(1)/2)*(1+exi)**(gam/2+beta/2-mp.mpf(1)/2)\
        *(I*k)**(-mp.mpf(1)/2)*(mp.e**(xi*(beta/4+I*k)) + mp.e**(I*mp.pi*(gam/2-mp.mpf(1)/2))*mp.e**(xi*(beta/4-I*k)))
for x in [mp.mpf(2), mp.mpf('0.5')]:
    for k in [mp.mpf(5), mp.mpf(10), mp.mpf(20), mp.mpf(50), mp.mpf(100)]:
        va = f1_asym(x, k); ve = f1(x, k)
        print('x=%4s k=%4s  f1=%12s asymRe=%12s ratio(Re)=%s |rel|=%s' % (x, k, mp.nstr(mp.re(ve),8), mp.nstr(mp.re(va),8), mp.nstr(mp.re(va)/mp.re(ve),6), mp.nstr(abs(va-ve)/abs(ve),4)))
