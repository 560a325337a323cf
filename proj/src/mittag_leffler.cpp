#include "fpd/mittag_leffler.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "fpd/errors.hpp"
#include "fpd/quadrature.hpp"

namespace fpd {

namespace {

double series_neg(double alpha, double x) {
    // sum_j (-x)^j / Gamma(1 + alpha j); safe for x <= ~1.5 (mild alternation)
    double sum = 1.0, term = 1.0, comp = 0.0;
    for (int j = 1; j < 400; ++j) {
        term = std::pow(-x, j) / std::tgamma(1.0 + alpha * j);
        // Kahan
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300) return sum;
    }
    return sum;
}

// Asymptotic series sum_{m>=1} (-1)^{m-1} x^{-m} / Gamma(1 - alpha m),
// summed through the smallest term, which also sets the error estimate.
// Terms where 1 - alpha m sits at or near a Gamma pole vanish (1/Gamma
// passes through zero) and carry no envelope information, so they are
// excluded from the truncation decision.
std::pair<double, double> asymptotic_neg(double alpha, double x) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> terms;
    double env_min = inf, env_prev = inf;
    int min_idx = -1, rises = 0;
    for (int m = 1; m <= 300; ++m) {
        const double g = 1.0 - alpha * m;
        double term;
        if (g == std::round(g) && g <= 0.0)
            term = 0.0;
        else
            term = (m % 2 == 1 ? 1.0 : -1.0) * std::pow(x, -m) / std::tgamma(g);
        terms.push_back(term);
        const bool near_pole = g < 0.5 && std::fabs(g - std::round(g)) < 0.05;
        if (near_pole) continue;
        const double mag = std::fabs(term);
        if (mag < env_min) {
            env_min = mag;
            min_idx = m;
        }
        if (mag > env_prev) {
            if (++rises >= 2) break;
        } else {
            rises = 0;
        }
        env_prev = mag;
        if (mag < 1e-18) break;
    }
    if (min_idx < 0) return {0.0, inf};
    double sum = 0.0;
    for (int i = 0; i < min_idx; ++i) sum += terms[i];
    return {sum, env_min};
}

// Spectral representation on the negative axis:
// E_alpha(-x) = sin(a pi)/(pi a) * int_0^inf exp(-(s x)^{1/a}) / (s^2 + 2 s cos(a pi) + 1) ds.
double integral_neg(double alpha, double x) {
    const double th = alpha * M_PI;
    const double cth = std::cos(th);
    auto f = [&](double s) {
        return std::exp(-std::pow(s * x, 1.0 / alpha)) / (s * s + 2.0 * s * cth + 1.0);
    };
    // kernel support ends near s ~ L/x with L = log(1/eps)^alpha; the
    // denominator's near-pole sits at s ~ 1 for alpha -> 1
    const double L = std::pow(46.0, alpha);
    double p1 = std::min(1.0, L / x);
    double v = 0.0;
    v += integrate_adaptive(f, 0.0, p1, 1e-16, 1e-14).value;
    if (p1 < 1.0) v += integrate_adaptive(f, p1, 1.0, 1e-16, 1e-14).value;
    v += integrate_adaptive(f, 1.0, 2.0, 1e-16, 1e-14).value;
    v += integrate_to_infinity(f, 2.0, 1e-16, 1e-14).value;
    return std::sin(th) / (M_PI * alpha) * v;
}

double eval_neg(double alpha, double x) {
    if (x <= 1.0) return series_neg(alpha, x);
    auto [asym, err] = asymptotic_neg(alpha, x);
    if (err < 1e-14 * std::fabs(asym)) return asym;
    return integral_neg(alpha, x);
}

std::vector<double> cheb_fit(const std::function<double(double)>& f, double a, double b, int n) {
    std::vector<double> fv(n);
    for (int k = 0; k < n; ++k) {
        const double t = std::cos(M_PI * (k + 0.5) / n);
        fv[k] = f(0.5 * (a + b) + 0.5 * (b - a) * t);
    }
    std::vector<double> c(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += fv[k] * std::cos(M_PI * j * (k + 0.5) / n);
        c[j] = 2.0 / n * s;
    }
    return c;
}

double cheb_clenshaw(const std::vector<double>& c, double a, double b, double x) {
    const double t = (2.0 * x - a - b) / (b - a);
    double b0 = 0.0, b1 = 0.0;
    for (int i = int(c.size()) - 1; i >= 1; --i) {
        double b2 = b1;
        b1 = b0;
        b0 = 2.0 * t * b1 - b2 + c[i];
    }
    return t * b0 - b1 + 0.5 * c[0];
}

}  // namespace

double mittag_leffler(double alpha, double x) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw DomainError("mittag_leffler: alpha must be in (0,1]");
    if (!(x >= 0.0)) throw DomainError("mittag_leffler: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (alpha == 1.0) return std::exp(-x);
    return eval_neg(alpha, x);
}

MittagLefflerCurve::MittagLefflerCurve(double alpha) : alpha_(alpha), exp_mode_(alpha == 1.0) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw DomainError("MittagLefflerCurve: alpha must be in (0,1]");
    if (exp_mode_) {
        n_seg_ = 0;
        u_lo_ = 0.0;
        return;
    }
    u_lo_ = 1.0;
    series_cheb_ = cheb_fit([this](double u) { return series_neg(alpha_, u); }, 0.0, u_lo_, 28);
    n_seg_ = 41;  // dyadic segments [2^j, 2^{j+1}], j = 0..40  (up to ~2.2e12)
    cheb_.resize(n_seg_);
    for (int j = 0; j < n_seg_; ++j) {
        const double a = std::ldexp(1.0, j), b = std::ldexp(1.0, j + 1);
        cheb_[j] = cheb_fit([this](double u) { return eval_neg(alpha_, u); }, a, b, 28);
    }
}

double MittagLefflerCurve::operator()(double u) const {
    if (!(u >= 0.0)) throw DomainError("MittagLefflerCurve: argument must be >= 0");
    if (exp_mode_) return std::exp(-u);
    if (u <= u_lo_) return cheb_clenshaw(series_cheb_, 0.0, u_lo_, u);
    int j = std::min(n_seg_ - 1, int(std::floor(std::log2(u))));
    const double a = std::ldexp(1.0, j), b = std::ldexp(1.0, j + 1);
    if (u <= b) return cheb_clenshaw(cheb_[j], a, b, u);
    return eval_neg(alpha_, u);  // beyond the table: direct (asymptotic regime)
}

}  // namespace fpd
