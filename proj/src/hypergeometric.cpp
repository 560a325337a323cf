#include "fpd/hypergeometric.hpp"

#include <cmath>
#include <sstream>

#include "fpd/errors.hpp"

namespace fpd {

namespace {

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Extended-precision accumulation buys back the digits the conjugate-pair
// cancellation eats for moderately large imaginary parameters.
Complex hyp_series(Complex a, Complex b, Complex c, double z, bool gauss,
                   const SeriesConfig& cfg, const char* name) {
    using CLD = std::complex<long double>;
    const CLD al(a.real(), a.imag()), bl(b.real(), b.imag()), cl(c.real(), c.imag());
    CLD term{1.0L, 0.0L}, sum{1.0L, 0.0L};
    const long double zl = z;
    for (int j = 0; j < cfg.max_terms; ++j) {
        CLD num = (al + (long double)j) * zl;
        if (gauss) num *= (bl + (long double)j);
        term *= num / ((cl + (long double)j) * (long double)(j + 1));
        sum += term;
        if (std::abs(term) <= (long double)cfg.rel_tol * std::abs(sum))
            return {double(sum.real()), double(sum.imag())};
    }
    std::ostringstream os;
    os << name << ": no convergence after " << cfg.max_terms << " terms; |last term| = "
       << double(std::abs(term)) << ", partial sum = (" << double(sum.real()) << ","
       << double(sum.imag()) << ")";
    throw NumericError(os.str(), double(sum.real()), double(std::abs(term)));
}

}  // namespace

Complex hyp1f1(Complex a, Complex b, double z, const SeriesConfig& cfg) {
    if (is_nonpositive_integer(b)) throw DomainError("hyp1f1: b is a non-positive integer");
    if (std::fabs(z) > 100.0) throw DomainError("hyp1f1: |z| > 100 unsupported");
    if (z == 0.0) return {1.0, 0.0};
    return hyp_series(a, Complex{}, b, z, /*gauss=*/false, cfg, "hyp1f1");
}

Complex hyp2f1(Complex a, Complex b, double c, double z, const SeriesConfig& cfg) {
    if (!(c > 0.0)) throw DomainError("hyp2f1: c must be > 0");
    if (z > 0.0) throw DomainError("hyp2f1: z must be <= 0");
    const bool conj_pair = (a == std::conj(b));
    const bool both_real = (a.imag() == 0.0 && b.imag() == 0.0);
    if (!conj_pair && !both_real)
        throw DomainError("hyp2f1: (a,b) must be a conjugate pair or real");
    if (z == 0.0) return {1.0, 0.0};
    if (z > -1.0) return hyp_series(a, b, Complex{c, 0.0}, z, /*gauss=*/true, cfg, "hyp2f1");
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)), w in (0,1)
    const double w = z / (z - 1.0);
    Complex f = hyp_series(a, Complex{c, 0.0} - b, Complex{c, 0.0}, w, /*gauss=*/true, cfg,
                           "hyp2f1(pfaff)");
    Complex pref = std::exp(-a * std::log(1.0 - z));  // 1-z > 0, principal log
    return pref * f;
}

}  // namespace fpd
