import mpmath as mp
mp.mp.dps = 22
theta, beta, gam = mp.mpf(1), mp.mpf(5), mp.mpf(2)
Lam = theta*beta**2/(4*(beta-1))
I = mp.mpc(0,1)
def rg(x): return gam**beta/mp.gamma(beta)*x**(-beta-1)*mp.exp(-gam/x)
B = [lambda x: mp.mpf(1), lambda x: mp.sqrt(3)*(2*x-1), lambda x: mp.sqrt(2)*(mp.mpf(3)/2*x**2-3*x+1)]
lam = [mp.mpf(0), mp.mpf(1), mp.mpf('1.5')]
t = mp.mpf(1); x0 = mp.mpf(1); x = mp.mpf(1)
disc = rg(x)*mp.fsum(mp.e**(-lam[n]*t)*B[n](x0)*B[n](x) for n in range(3))
def integ(k):
    lamk = Lam + theta*k**2/(beta-1)
    w = 2*theta/(beta-1)*gam**(-beta-1)*mp.gamma(beta)*abs(mp.gamma(-beta/2+I*k))**2*2*k*mp.sinh(2*mp.pi*k)/mp.pi
    psix = x**((beta+1)/2)*mp.exp(gam/(2*x))*mp.whitw((beta+1)/2, I*k, gam/x)
    return mp.e**(-lamk*t)*w*mp.re(psix)**2
cont = rg(x)/(4*mp.pi)*mp.quad(integ, [0, 0.5, 1, 2, 3, 4, 5, 6, 8])
print('disc =', mp.nstr(disc, 16))
print('cont =', mp.nstr(cont, 16))
print('p1(1,1;1) =', mp.nstr(disc+cont, 16))
# also alpha=0.7 discrete weights for cross-check of table values later
