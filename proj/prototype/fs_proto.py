import mpmath as mp
import numpy as np
mp.mp.dps = 30

theta, beta, gam = mp.mpf(1), mp.mpf(6), mp.mpf(3)
Lam = theta*beta**2/(8*(beta-2))
print('Lambda =', Lam)  # 36/32 = 1.125
I = mp.mpc(0,1)

def fs(x):
    return beta**(beta/2)/mp.beta(gam/2, beta/2)*(gam*x)**(gam/2-1)/(gam*x+beta)**((gam+beta)/2)*gam

# polys via Rodrigues: Ftil_n = x^{1-g/2}(gx+b)^{(g+b)/2} d^n/dx^n [2^n x^{g/2+n-1}(gx+b)^{n-(g+b)/2}]
def Ftil(n, x):
    f = lambda u: 2**n * u**(gam/2+n-1)*(gam*u+beta)**(n-(gam+beta)/2)
    return x**(1-gam/2)*(gam*x+beta)**((gam+beta)/2)*mp.diff(f, x, n)
def KnFS(n):
    prod = mp.mpf(1)
    for k in range(1, n+1): prod *= (beta/2 + k - 2*n)
    return (-1)**n*mp.sqrt(mp.beta(gam/2,beta/2)/(mp.factorial(n)*(2*beta)**(2*n)*mp.beta(gam/2+n, beta/2-2*n))/prod)
def F(n, x): return KnFS(n)*Ftil(n, x)

for n in range(2):
    for m in range(n+1):
        v = mp.quad(lambda x: F(n,x)*F(m,x)*fs(x), [0, 1, 3, 10, 50, mp.inf])
        print('FS ortho', n, m, mp.nstr(v, 10))

lam_n = [theta/(beta-2)*n*(beta-2*n) for n in range(2)]
print('eigs', lam_n)

def kofl(lam): return mp.sqrt(lam*(beta-2)/(2*theta) - beta**2/16)
def f1(x, k):
    return mp.hyp2f1(-beta/4 + I*k, -beta/4 - I*k, gam/2, -gam*x/beta)
def a_jac(k):  # a(lam)*dlam/dk = 4 theta k^2/(beta-2) |...|^2
    num = mp.sqrt(mp.beta(gam/2,beta/2))*mp.gamma(-beta/4+I*k)*mp.gamma(gam/2+beta/4+I*k)
    den = mp.gamma(gam/2)*mp.gamma(1+2*I*k)
    return 4*theta*k**2/(beta-2)*abs(num/den)**2

t = mp.mpf(1); x0 = mp.mpf(1)
def p1(x):
    disc = fs(x)*mp.fsum(mp.e**(-lam_n[n]*t)*F(n,x0)*F(n,x) for n in range(2))
    def integ(k):
        lam = Lam + 2*theta*k**2/(beta-2)
        return mp.e**(-lam*t)*a_jac(k)*mp.re(f1(x,k))*mp.re(f1(x0,k))
    cont = fs(x)/mp.pi*mp.quad(integ, [0, 0.5, 1, 2, 4])
    return disc, cont

for xs in ['0.4','1','3']:
    d, c = p1(mp.mpf(xs))
    print('x=%s: disc=%s cont=%s tot=%s' % (xs, mp.nstr(d,8), mp.nstr(c,8), mp.nstr(d+c,10)))

def ptot(u):
    d,c = p1(1/u); return (d+c)/u**2
norm = mp.quad(ptot, [0.002, 0.05, 0.2, 0.5, 1, 2.5, 8])   # x from 0.125..500 via u=1/x
print('normalization =', mp.nstr(norm, 8))

# Erdelyi asymptotic check for f1 at large k
def f1_asym(x, k):
    exi = 1 + 2*gam/beta*x + mp.sqrt(4*gam/beta*x*(1+gam/beta*x))
    xi = mp.log(exi)
    pref = mp.gamma(1+beta/4+I*k)*mp.gamma(gam/2)/(mp.gamma(mp.mpf(1)/2)*mp.gamma(gam/2+beta/4+I*k))
    val = pref*2**(-beta/2-1)*(1-exi)**(-gam/2+mp.mpf(1)/2)*(1+exi)**(gam/2+beta/2-mp.mpf(1)/2)\
        *(I*k)**(-mp.mpf(1)/2)*(mp.e**(xi*(beta/4+I*k)) + mp.e**(I*mp.pi*(gam/2-mp.mpf(1)/2))*mp.e**(xi*(beta/4-I*k)))
    return val
for k in [5, 10, 20, 50]:
    va = f1_asym(mp.mpf(2), mp.mpf(k)); ve = f1(mp.mpf(2), mp.mpf(k))
    print('k=%3d f1=%s asym=%s  ratio=%s' % (k, mp.nstr(mp.re(ve),8), mp.nstr(mp.re(va),8), mp.nstr(mp.re(va)/mp.re(ve),8)))
