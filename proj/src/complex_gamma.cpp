#include "fpd/complex_gamma.hpp"

#include <cmath>

#include "fpd/errors.hpp"

namespace fpd {

namespace {

// Lanczos, g = 607/128, 15 coefficients (Godfrey).  Good to ~15 digits
// for Re z >= 0.5.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2 pi))

bool is_nonpositive_integer(Complex z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

Complex log_gamma_lanczos(Complex z) {
    // valid for Re z >= 0.5
    Complex sum = kLanczos[0];
    for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (z + double(i - 1));
    Complex t = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(sum);
}

}  // namespace

Complex log_sin_pi(Complex z) {
    // Factor out the exponentially large half of sin(pi z) = (e^{i pi z} -
    // e^{-i pi z})/(2i) so the log never overflows for large |Im z|.
    const Complex ipz = Complex(0.0, M_PI) * z;
    if (z.imag() >= 0.0) {
        return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / Complex(0.0, 2.0));
    }
    return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / Complex(0.0, 2.0));
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw DomainError("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(M_PI) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

double log_abs_gamma_sq(Complex z) { return 2.0 * log_gamma(z).real(); }

}  // namespace fpd
