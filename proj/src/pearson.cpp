#include "fpd/pearson.hpp"

#include <cmath>
#include <map>

#include "fpd/quadrature.hpp"

namespace fpd {

namespace {

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

double falling(double x, int n) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= (x - i);
    return v;
}

double binom(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

// Monomial coefficients of the un-normalized RG Bessel polynomial
//   x^{beta+1} e^{gamma/x} d^n/dx^n [ x^{2n-beta-1} e^{-gamma/x} ].
// Each derivative acting on c x^{p-r} e^{-gamma/x} yields
// (p-r) c x^{p-r-1} + gamma c x^{p-r-2}, so track coefficients by the
// total exponent reduction r; the prefactor turns reduction n+j into the
// monomial x^{n-j}.
std::vector<double> rg_tilde_coeffs(double beta, double gamma, int n) {
    const double p = 2.0 * n - beta - 1.0;
    std::map<int, double> cur{{0, 1.0}};
    for (int step = 0; step < n; ++step) {
        std::map<int, double> next;
        for (auto [r, c] : cur) {
            next[r + 1] += (p - r) * c;
            next[r + 2] += gamma * c;
        }
        cur = std::move(next);
    }
    std::vector<double> mono(n + 1, 0.0);  // ascending powers of x
    for (auto [r, c] : cur) {
        const int power = 2 * n - r;  // in [0, n]
        mono[power] = c;
    }
    return mono;
}

// Monomial coefficients of the un-normalized FS polynomial
//   x^{1-gamma/2} (gamma x + beta)^{(gamma+beta)/2}
//     d^n/dx^n [ 2^n x^{gamma/2+n-1} (gamma x + beta)^{n-(gamma+beta)/2} ]
// via the Leibniz rule.
std::vector<double> fs_tilde_coeffs(double beta, double gamma, int n) {
    const double a0 = gamma / 2.0 + n - 1.0;
    const double b0 = n - (gamma + beta) / 2.0;
    std::vector<double> mono(n + 1, 0.0);
    const double two_n = std::pow(2.0, n);
    for (int m = 0; m <= n; ++m) {
        const double cm =
            two_n * binom(n, m) * falling(a0, n - m) * falling(b0, m) * std::pow(gamma, m);
        // times x^m (gamma x + beta)^{n-m}
        for (int i = 0; i <= n - m; ++i) {
            mono[m + i] +=
                cm * binom(n - m, i) * std::pow(gamma, i) * std::pow(beta, n - m - i);
        }
    }
    return mono;
}

}  // namespace

double log_invariant_density(const DiffusionParams& p, double x) {
    if (!(x > 0.0)) throw DomainError("invariant_density: x must be > 0");
    p.validate();
    if (p.kind == DiffusionKind::ReciprocalGamma) {
        return p.beta * std::log(p.gamma) - std::lgamma(p.beta) -
               (p.beta + 1.0) * std::log(x) - p.gamma / x;
    }
    return 0.5 * p.beta * std::log(p.beta) - log_beta(p.gamma / 2.0, p.beta / 2.0) +
           (p.gamma / 2.0 - 1.0) * std::log(p.gamma * x) -
           0.5 * (p.gamma + p.beta) * std::log(p.gamma * x + p.beta) + std::log(p.gamma);
}

double invariant_density(const DiffusionParams& p, double x) {
    return std::exp(log_invariant_density(p, x));
}

double drift(const DiffusionParams& p, double y) {
    if (!(y > 0.0)) throw DomainError("drift: y must be > 0");
    return -p.theta * (y - p.stationary_mean());
}

double diffusion_sq(const DiffusionParams& p, double y) {
    if (!(y > 0.0)) throw DomainError("diffusion_sq: y must be > 0");
    if (p.kind == DiffusionKind::ReciprocalGamma)
        return 2.0 * p.theta / (p.beta - 1.0) * y * y;
    return 4.0 * p.theta / (p.gamma * (p.beta - 2.0)) * y * (p.gamma * y + p.beta);
}

double generator_apply_fd(const DiffusionParams& p, const std::function<double(double)>& f,
                          double y, double h) {
    if (!(y - 2.0 * h > 0.0)) throw DomainError("generator_apply_fd: stencil leaves (0, inf)");
    const double fm = f(y - h), f0 = f(y), fp = f(y + h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    return drift(p, y) * d1 + 0.5 * diffusion_sq(p, y) * d2;
}

Spectrum spectrum(const DiffusionParams& p) {
    p.validate();
    Spectrum s;
    const bool rg = p.kind == DiffusionKind::ReciprocalGamma;
    s.cutoff = rg ? p.theta * p.beta * p.beta / (4.0 * (p.beta - 1.0))
                  : p.theta * p.beta * p.beta / (8.0 * (p.beta - 2.0));
    const int n_hi = rg ? int(std::floor(p.beta / 2.0)) : int(std::floor(p.beta / 4.0));
    for (int n = 0; n <= n_hi; ++n) {
        const double lam = rg ? p.theta / (p.beta - 1.0) * n * (p.beta - n)
                              : p.theta / (p.beta - 2.0) * n * (p.beta - 2.0 * n);
        // the discrete spectrum sits strictly below the band edge; an index
        // landing on the edge (beta an even integer / multiple of 4) is dropped
        if (lam < s.cutoff * (1.0 - 1e-12)) {
            s.eigenvalues.push_back(lam);
            s.n_max = n;
        }
    }
    return s;
}

PolyBasis poly_basis(const DiffusionParams& p, int n) {
    p.validate();
    const Spectrum s = spectrum(p);
    if (n < 0 || n > s.n_max) throw DomainError("poly_basis: index outside retained spectrum");
    PolyBasis b;
    b.degree = n;
    if (p.kind == DiffusionKind::ReciprocalGamma) {
        b.coeffs = rg_tilde_coeffs(p.beta, p.gamma, n);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        b.norm_const = sgn / std::pow(p.gamma, n) *
                       std::sqrt((p.beta - 2.0 * n) *
                                 std::exp(std::lgamma(p.beta) - std::lgamma(n + 1.0) -
                                          std::lgamma(p.beta - n + 1.0)));
    } else {
        b.coeffs = fs_tilde_coeffs(p.beta, p.gamma, n);
        double prod = 1.0;
        for (int k = 1; k <= n; ++k) prod *= (p.beta / 2.0 + k - 2.0 * n);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        b.norm_const =
            sgn * std::sqrt(std::exp(log_beta(p.gamma / 2.0, p.beta / 2.0) -
                                     std::lgamma(n + 1.0) -
                                     2.0 * n * std::log(2.0 * p.beta) -
                                     log_beta(p.gamma / 2.0 + n, p.beta / 2.0 - 2.0 * n)) /
                            prod);
    }
    for (auto& c : b.coeffs) c *= b.norm_const;
    return b;
}

double invariant_mean(const DiffusionParams& p) { return p.stationary_mean(); }

double invariant_variance(const DiffusionParams& p) {
    if (p.kind == DiffusionKind::ReciprocalGamma) {
        if (!(p.beta > 2.0)) throw DomainError("invariant_variance: rg requires beta > 2");
        return p.gamma * p.gamma / ((p.beta - 1.0) * (p.beta - 1.0) * (p.beta - 2.0));
    }
    if (!(p.beta > 4.0)) throw DomainError("invariant_variance: fs requires beta > 4");
    const double a = p.gamma / 2.0, b = p.beta / 2.0;
    const double var_u = a * (a + b - 1.0) / ((b - 2.0) * (b - 1.0) * (b - 1.0));
    return (p.beta / p.gamma) * (p.beta / p.gamma) * var_u;
}

std::pair<double, double> support_bounds(const DiffusionParams& p, double tail_mass) {
    p.validate();
    const double half = tail_mass / 2.0;
    double lo, hi;
    if (p.kind == DiffusionKind::ReciprocalGamma) {
        // upper tail mass <= gamma^beta/Gamma(beta) X^{-beta} / beta
        hi = std::exp((p.beta * std::log(p.gamma) - std::lgamma(p.beta) - std::log(p.beta) -
                       std::log(half)) /
                      p.beta);
        // lower tail: with u = 1/x, mass = P(Gamma(beta, rate gamma) > 1/delta)
        //            <= c u^{beta-1} e^{-gamma u} (1 + ...) ; halve until small
        lo = p.stationary_mean();
        while (true) {
            const double u = 1.0 / lo;
            const double logb = p.beta * std::log(p.gamma) - std::lgamma(p.beta) +
                                (p.beta - 1.0) * std::log(u) - p.gamma * u - std::log(p.gamma) +
                                std::log(2.0);
            if (logb < std::log(half) || lo < 1e-8) break;
            lo *= 0.5;
        }
    } else {
        // fs(x) <= C2 x^{-beta/2-1} with C2 = beta^{beta/2} gamma^{-beta/2} / B(g/2,b/2)
        const double log_c2 = 0.5 * p.beta * std::log(p.beta) -
                              log_beta(p.gamma / 2.0, p.beta / 2.0) -
                              0.5 * p.beta * std::log(p.gamma);
        hi = std::exp((log_c2 - std::log(p.beta / 2.0) - std::log(half)) / (0.5 * p.beta));
        // fs(x) <= C3 (gamma x)^{gamma/2 - 1} gamma with C3 = beta^{beta/2 }/
        //          (B(g/2,b/2) beta^{(gamma+beta)/2})
        const double log_c3 = 0.5 * p.beta * std::log(p.beta) -
                              log_beta(p.gamma / 2.0, p.beta / 2.0) -
                              0.5 * (p.gamma + p.beta) * std::log(p.beta);
        lo = std::exp((std::log(half) - log_c3 - std::log(2.0 / p.gamma)) / (p.gamma / 2.0)) /
             p.gamma;
        lo = std::min(lo, 0.5 * p.stationary_mean());
    }
    hi = std::max(hi, 4.0 * p.stationary_mean());
    return {lo, hi};
}

double integrate_against_density(const DiffusionParams& p, const std::function<double(double)>& f,
                                 double abs_tol) {
    auto [lo, hi] = support_bounds(p, abs_tol * 1e-2);
    (void)hi;
    auto g = [&](double x) { return f(x) * invariant_density(p, x); };
    // split at the mean; the power-law upper tail is folded to a regular
    // integral by u = 1/x so polynomial integrands need no truncation
    const double mid = p.stationary_mean();
    auto g_inv = [&](double u) {
        const double x = 1.0 / u;
        return f(x) * invariant_density(p, x) / (u * u);
    };
    double v = 0.0;
    v += integrate_adaptive(g, lo, mid, abs_tol / 2.0, 1e-11).value;
    v += integrate_adaptive(g_inv, 0.0, 1.0 / mid, abs_tol / 2.0, 1e-11).value;
    return v;
}

}  // namespace fpd
