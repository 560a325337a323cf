#include "fpd/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>

#include "fpd/complex_gamma.hpp"
#include "fpd/hypergeometric.hpp"
#include "fpd/pearson.hpp"

namespace fpd {

namespace {

double log_sinh(double x) { return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2; }

double log_beta_fn(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Digits cancelled by the conjugate-pair 2F1 series at argument
// z = -gamma x / beta grow like 2 k atan(sqrt(|z|)) / ln 10.
bool fs_series_safe(double x, double k, const DiffusionParams& p) {
    const double z = p.gamma * x / p.beta;
    return 2.0 * k * std::atan(std::sqrt(z)) < 4.0 * M_LN10;
}

double fs_series(double x, double k, const DiffusionParams& p) {
    const Complex a{-p.beta / 4.0, k};
    return hyp2f1(a, std::conj(a), p.gamma / 2.0, -p.gamma * x / p.beta).real();
}

// Series value and derivative at a start point small enough that the
// terms decay from the first one on (k^2 |z| well below c).
void fs_series_with_derivative(double x, double k, const DiffusionParams& p, double& f,
                               double& df) {
    const Complex a{-p.beta / 4.0, k};
    const Complex b = std::conj(a);
    const double c = p.gamma / 2.0;
    const double z = -p.gamma * x / p.beta;
    Complex term{1.0, 0.0}, s{1.0, 0.0}, ds{0.0, 0.0};
    for (int j = 0; j < 300; ++j) {
        term *= (a + double(j)) * (b + double(j)) * z / ((c + j) * double(j + 1));
        s += term;
        ds += term * double(j + 1) / x;
        if (std::abs(term) < 1e-18 * std::abs(s)) break;
    }
    f = s.real();
    df = ds.real();
}

// Cash-Karp RK45 for the second-order Sturm-Liouville equation
//   c2(x) f'' + c1(x) f' = -lambda f
// integrated rightward with dense landing on the requested grid points.
class FsOdeSweep {
public:
    FsOdeSweep(double k, const DiffusionParams& p)
        : p_(p),
          lambda_(lambda_of_k(p, k)),
          mean_(p.stationary_mean()),
          c2_scale_(2.0 * p.theta / (p.gamma * (p.beta - 2.0))) {}

    void rhs(double x, const double y[2], double dy[2]) const {
        const double c2 = c2_scale_ * x * (p_.gamma * x + p_.beta);
        const double c1 = -p_.theta * (x - mean_);
        dy[0] = y[1];
        dy[1] = -(lambda_ * y[0] + c1 * y[1]) / c2;
    }

    // advance from (x, y) to x_end, adaptive steps with the error measured
    // against the oscillation envelope of each component (a pointwise scale
    // collapses at the zero crossings and stalls the stepper)
    void advance(double& x, double y[2], double x_end) {
        double h = std::min(1e-3, (x_end - x));
        while (x < x_end) {
            if (x + h > x_end) h = x_end - x;
            double y_new[2], e[2];
            step(x, y, h, y_new, e);
            amp0_ = std::max(amp0_, std::fabs(y[0]));
            amp1_ = std::max(amp1_, std::fabs(y[1]));
            const double err = std::max(std::fabs(e[0]) / (amp0_ + 1e-300),
                                        std::fabs(e[1]) / (amp1_ + 1e-300));
            const double rtol = 1e-11;
            if (err <= rtol || h <= 1e-12 * x_end) {
                x += h;
                y[0] = y_new[0];
                y[1] = y_new[1];
                h *= std::clamp(0.9 * std::pow(rtol / (err + 1e-300), 0.2), 0.5, 4.0);
            } else {
                h *= std::clamp(0.9 * std::pow(rtol / err, 0.25), 0.02, 0.9);
            }
        }
    }

private:
    void step(double x, const double y[2], double h, double y_out[2], double e_out[2]) const {
        static constexpr double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
        static constexpr double b21 = 0.2;
        static constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
        static constexpr double b41 = 0.3, b42 = -0.9, b43 = 1.2;
        static constexpr double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0,
                                b54 = 35.0 / 27.0;
        static constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0,
                                b63 = 575.0 / 13824.0, b64 = 44275.0 / 110592.0,
                                b65 = 253.0 / 4096.0;
        static constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0,
                                c6 = 512.0 / 1771.0;
        static constexpr double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                                d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0,
                                d6 = c6 - 0.25;
        double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], yt[2];
        rhs(x, y, k1);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * b21 * k1[i];
        rhs(x + a2 * h, yt, k2);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (b31 * k1[i] + b32 * k2[i]);
        rhs(x + a3 * h, yt, k3);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
        rhs(x + a4 * h, yt, k4);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
        rhs(x + a5 * h, yt, k5);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] +
                    h * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] + b65 * k5[i]);
        rhs(x + a6 * h, yt, k6);
        for (int i = 0; i < 2; ++i) {
            y_out[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
            e_out[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
        }
    }

    const DiffusionParams& p_;
    double lambda_;
    double mean_;
    double c2_scale_;
    double amp0_ = 0.0, amp1_ = 0.0;
};

}  // namespace

double band_scale(const DiffusionParams& p) {
    return p.kind == DiffusionKind::ReciprocalGamma ? p.theta / (p.beta - 1.0)
                                                    : 2.0 * p.theta / (p.beta - 2.0);
}

double k_of_lambda(const DiffusionParams& p, double lambda) {
    const double cutoff = spectrum(p).cutoff;
    if (!(lambda > cutoff)) throw DomainError("k_of_lambda: lambda must exceed the cutoff");
    return std::sqrt((lambda - cutoff) / band_scale(p));
}

double lambda_of_k(const DiffusionParams& p, double k) {
    return spectrum(p).cutoff + band_scale(p) * k * k;
}

LogScaled psi_rg_log(double x, double k, const DiffusionParams& p) {
    if (!(x > 0.0)) throw DomainError("psi_rg: x must be > 0");
    LogScaled w = whittaker_w_imag_log((p.beta + 1.0) / 2.0, k, p.gamma / x);
    w.log_abs += 0.5 * (p.beta + 1.0) * std::log(x) + 0.5 * p.gamma / x;
    return w;
}

double psi_rg(double x, double lambda, const DiffusionParams& p) {
    if (p.kind != DiffusionKind::ReciprocalGamma) throw DomainError("psi_rg: rg params required");
    return psi_rg_log(x, k_of_lambda(p, lambda), p).value();
}

double f1_fs(double x, double lambda, const DiffusionParams& p) {
    if (p.kind != DiffusionKind::FisherSnedecor) throw DomainError("f1_fs: fs params required");
    if (!(x > 0.0)) throw DomainError("f1_fs: x must be > 0");
    const double k = k_of_lambda(p, lambda);
    const double xs[1] = {x};
    return f1_fs_grid(std::span<const double>(xs, 1), k, p)[0];
}

std::vector<double> f1_fs_grid(std::span<const double> xs, double k, const DiffusionParams& p) {
    if (p.kind != DiffusionKind::FisherSnedecor)
        throw DomainError("f1_fs_grid: fs params required");
    std::vector<double> out(xs.size());
    if (xs.empty()) return out;
    const double x_max = xs.back();
    if (fs_series_safe(x_max, k, p)) {
        for (size_t i = 0; i < xs.size(); ++i) out[i] = fs_series(xs[i], k, p);
        return out;
    }
    // ODE sweep from a series start point
    double x0 = std::min(0.15 * p.beta / (k * k + p.beta * p.beta / 16.0), 0.05);
    x0 = std::min(x0, 0.9 * xs.front());
    double y[2];
    fs_series_with_derivative(x0, k, p, y[0], y[1]);
    FsOdeSweep sweep(k, p);
    double x = x0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sweep.advance(x, y, xs[i]);
        out[i] = y[0];
    }
    return out;
}

double band_weight_jacobian_log(double k, const DiffusionParams& p) {
    if (!(k > 0.0)) throw DomainError("band_weight_jacobian_log: k must be > 0");
    const Complex ik{0.0, k};
    if (p.kind == DiffusionKind::ReciprocalGamma) {
        // b(lambda) dlambda/dk, with |Gamma(2ik)|^{-2} = 2 k sinh(2 pi k)/pi
        return std::log(2.0 * p.theta / (p.beta - 1.0)) - (p.beta + 1.0) * std::log(p.gamma) +
               std::lgamma(p.beta) + log_abs_gamma_sq(Complex{-p.beta / 2.0, k}) +
               std::log(2.0 * k) + log_sinh(2.0 * M_PI * k) - std::log(M_PI);
    }
    return std::log(4.0 * p.theta / (p.beta - 2.0)) + 2.0 * std::log(k) +
           log_beta_fn(p.gamma / 2.0, p.beta / 2.0) +
           log_abs_gamma_sq(Complex{-p.beta / 4.0, k}) +
           log_abs_gamma_sq(Complex{p.gamma / 2.0 + p.beta / 4.0, k}) -
           2.0 * std::lgamma(p.gamma / 2.0) - log_abs_gamma_sq(Complex{1.0, 2.0 * k});
}

}  // namespace fpd
