import mpmath as mp
mp.mp.dps = 40
I = mp.mpc(0,1)
def fmt(x): return mp.nstr(x, 19, strip_zeros=False)

print('// log_gamma (principal branch)')
for z in [mp.mpc('0.5','10'), mp.mpc('3.7','-2.2'), mp.mpc('-1.5','2.5'), mp.mpc('-4.3','-0.7'), mp.mpc('12','30')]:
    v = mp.loggamma(z)
    print('{{%s, %s}, {%s, %s}},' % (fmt(z.real), fmt(z.imag), fmt(v.real), fmt(v.imag)))

print('// mittag-leffler E_a(-x)')
import sys
for (a, x) in [(0.5, 1.0), (0.7, 0.4), (0.7, 1.0), (0.7, 5.0), (0.7, 48.0), (0.3, 9.0), (0.9, 33.0), (0.95, 2.5), (0.6, 700.0), (0.2, 3.0)]:
    old = mp.mp.dps
    mp.mp.dps = 60 + int(6*x**(1/a)*a) if x**(1/a) < 400 else 60
    s = mp.nsum(lambda j: (-mp.mpf(x))**j/mp.gamma(1+mp.mpf(a)*j), [0, mp.inf], method='d')
    mp.mp.dps = old
    print('{%s, %s, %s},' % (a, x, fmt(mp.mpf(s))))

print('// hyp1f1(a,b,z) complex')
for (a, b, z) in [(mp.mpc(-2.5,3), mp.mpc(1,6), mp.mpf(2)), (mp.mpc(-2.5,12), mp.mpc(1,24), mp.mpf(30)), (mp.mpc(0.5,0), mp.mpc(1.5,0), mp.mpf(-4))]:
    v = mp.hyp1f1(a, b, z)
    print('{{%s,%s},{%s,%s},%s, {%s, %s}},' % (fmt(a.real),fmt(a.imag),fmt(b.real),fmt(b.imag),fmt(z), fmt(v.real), fmt(v.imag)))

print('// hyp2f1 conj pair, real c, z<=0')
for (ar, ai, c, z) in [(-1.25, 2.0, 1.5, -0.6), (-1.25, 2.0, 1.5, -19.0), (-1.5, 7.0, 3.0, -2.0), (0.75, 4.0, 2.5, -120.0)]:
    v = mp.hyp2f1(mp.mpc(ar,ai), mp.mpc(ar,-ai), mp.mpf(c), mp.mpf(z))
    print('{%s, %s, %s, %s, %s},' % (fmt(mp.mpf(ar)), fmt(mp.mpf(ai)), fmt(mp.mpf(c)), fmt(mp.mpf(z)), fmt(v.real)))

print('// whittaker_w W_{kappa, i mu}(z) (real-valued)')
for (kap, mu, z) in [(3.0, 1.0, 2.0), (3.0, 1.0, 0.5), (3.0, 5.0, 2.0), (3.0, 20.0, 2.0), (3.5, 2.0, 6.0), (0.0, 3.0, 1.0)]:
    v = mp.whitw(mp.mpf(kap), I*mp.mpf(mu), mp.mpf(z))
    print('{%s, %s, %s, %s},  // im part %s' % (fmt(mp.mpf(kap)), fmt(mp.mpf(mu)), fmt(mp.mpf(z)), fmt(v.real), mp.nstr(v.imag, 3)))

print('// psi_rg: (theta,beta,gamma)=(1,5,2): psi(x,-lam) = x^3 e^{1/x} W_{3, ik}(2/x), k=sqrt(4 lam - 25/4)... wait k=sqrt(lam(beta-1)/theta - beta^2/4)')
theta, beta, gam = mp.mpf(1), mp.mpf(5), mp.mpf(2)
for (x, lam) in [(mp.mpf(1), mp.mpf(2.5)), (mp.mpf(1), mp.mpf(4)), (mp.mpf('0.4'), mp.mpf(3)), (mp.mpf(3), mp.mpf(2))]:
    k = mp.sqrt(lam*(beta-1)/theta - beta**2/4)
    v = x**((beta+1)/2)*mp.exp(gam/(2*x))*mp.whitw((beta+1)/2, I*k, gam/x)
    print('{%s, %s, %s},  // k=%s im %s' % (fmt(x), fmt(lam), fmt(v.real), fmt(k), mp.nstr(v.imag,3)))

print('// f1_fs: (theta,beta,gamma)=(1,6,3): f1(x,-lam) = 2F1(-1.5+ik,-1.5-ik;1.5;-x/2), k=sqrt(2 lam - 9/4)')
theta, beta, gam = mp.mpf(1), mp.mpf(6), mp.mpf(3)
for (x, lam) in [(mp.mpf(1), mp.mpf(2)), (mp.mpf('0.5'), mp.mpf(3)), (mp.mpf(4), mp.mpf('1.2'))]:
    k = mp.sqrt(lam*(beta-2)/(2*theta) - beta**2/16)
    v = mp.hyp2f1(-beta/4+I*k, -beta/4-I*k, gam/2, -gam*x/beta)
    print('{%s, %s, %s},  // k=%s' % (fmt(x), fmt(lam), fmt(v.real), fmt(k)))

print('// acf_fractional reference: E_a(-theta t^a) + theta a t^a/Gamma(1+a) * int_0^{s/t} E_a(-theta t^a (1-z)^a) z^{a-1} dz')
def ml(a, y):  # E_a(-y), y>=0 moderate
    old = mp.mp.dps; mp.mp.dps = 60 + int(6*y**(1/a)*a)
    s = mp.nsum(lambda j: (-mp.mpf(y))**j/mp.gamma(1+mp.mpf(a)*j), [0, mp.inf], method='d')
    mp.mp.dps = old; return mp.mpf(s)
for (th, a, s, t) in [(1.0, 0.7, 1.0, 2.0), (1.0, 0.7, 1.0, 8.0), (1.0, 0.5, 2.0, 3.0), (2.0, 0.6, 0.5, 4.0)]:
    th_, a_, s_, t_ = mp.mpf(th), mp.mpf(a), mp.mpf(s), mp.mpf(t)
    integ = mp.quad(lambda z: ml(a_, th_*t_**a_*(1-z)**a_)*z**(a_-1), [0, s_/t_/2, s_/t_])
    v = ml(a_, th_*t_**a_) + th_*a_*t_**a_/mp.gamma(1+a_)*integ
    print('{%s, %s, %s, %s, %s},' % (th, a, s, t, fmt(v)))
