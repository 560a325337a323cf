#include "fpd/whittaker.hpp"

#include <cmath>
#include <limits>

#include "fpd/complex_gamma.hpp"
#include "fpd/errors.hpp"

namespace fpd {

namespace {

double log_sinh(double x) {
    // x > 0
    return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2;
}

}  // namespace

Complex whittaker_m(Complex kappa, Complex mu, double z, const SeriesConfig& cfg) {
    if (!(z > 0.0)) throw DomainError("whittaker_m: z must be > 0");
    const Complex a = mu - kappa + 0.5;
    const Complex b = 1.0 + 2.0 * mu;
    return std::exp(-0.5 * z + (mu + 0.5) * std::log(z)) * hyp1f1(a, b, z, cfg);
}

LogScaled whittaker_w_imag_log(double kappa, double k, double z, const SeriesConfig& cfg) {
    if (!(z > 0.0)) throw DomainError("whittaker_w: z must be > 0");
    if (!(k > 0.0)) throw DomainError("whittaker_w: k must be > 0");
    const Complex ik{0.0, k};
    const Complex a = ik - kappa + 0.5;
    const Complex b = 1.0 + 2.0 * ik;
    const Complex f = hyp1f1(a, b, z, cfg);
    // ln M_{kappa,ik}(z), then divide by the two gammas in log space
    const Complex ln_m = -0.5 * z + (0.5 + ik) * std::log(z) + std::log(f);
    const Complex ln_s = ln_m - log_gamma(0.5 - ik - kappa) - log_gamma(b);
    const double rho = ln_s.real();
    const double phi = ln_s.imag();
    const double s = std::sin(phi);
    LogScaled r;
    if (s == 0.0) {
        r.log_abs = -std::numeric_limits<double>::infinity();
        r.sign = 0.0;
        return r;
    }
    r.log_abs = std::log(2.0 * M_PI) + rho + std::log(std::fabs(s)) - log_sinh(2.0 * M_PI * k);
    r.sign = s > 0.0 ? -1.0 : 1.0;  // W = -2 pi Im(S)/sinh(...)
    return r;
}

Complex whittaker_w(double kappa, Complex mu, double z, const SeriesConfig& cfg) {
    if (mu.real() != 0.0) throw DomainError("whittaker_w: mu must be purely imaginary");
    const double k = std::fabs(mu.imag());
    // the connection formula degenerates as sinh(2 pi k) -> 0
    if (std::sinh(2.0 * M_PI * k) < 1e-12)
        throw DegenerateParameterError("whittaker_w: sin pole (k too close to 0)");
    LogScaled w = whittaker_w_imag_log(kappa, k, z, cfg);
    return {w.value(), 0.0};
}

}  // namespace fpd
