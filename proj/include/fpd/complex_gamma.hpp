#pragma once

#include <complex>

namespace fpd {

using Complex = std::complex<double>;

/// Log-gamma for complex argument, analytic branch (real on the positive
/// real axis, continuous off the negative real axis).  Lanczos for
/// Re z >= 0.5, reflection otherwise.  Throws DomainError at the poles.
Complex log_gamma(Complex z);

/// |Gamma(z)|^2 = exp(2 Re log_gamma(z)), but returned as the log to
/// keep ratios of rapidly decaying gamma values representable.
double log_abs_gamma_sq(Complex z);

/// log(sin(pi z)) with the branch handling needed by the reflection
/// formula for large |Im z|.
Complex log_sin_pi(Complex z);

}  // namespace fpd
