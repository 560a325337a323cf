#pragma once

#include <complex>

#include "fpd/hypergeometric.hpp"

namespace fpd {

/// sign * exp(log_abs); keeps products of exponentially large/small
/// factors representable.  sign is -1, 0 or +1.
struct LogScaled {
    double log_abs;
    double sign;
    double value() const { return sign * std::exp(log_abs); }
};

/// Whittaker M_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} 1F1(mu-kappa+1/2; 1+2mu; z).
Complex whittaker_m(Complex kappa, Complex mu, double z, const SeriesConfig& cfg = {});

/// W_{kappa, i k}(z) for real kappa, purely imaginary parameter mu = i k,
/// z > 0.  Real-valued; evaluated through the connection formula
///   W = -2 pi Im[M_{kappa,ik}(z) / (Gamma(1/2 - ik - kappa) Gamma(1+2ik))]
///       / sinh(2 pi k)
/// in log scale so it stays finite out to k of several hundred.
LogScaled whittaker_w_imag_log(double kappa, double k, double z, const SeriesConfig& cfg = {});

/// Spec-facing wrapper: mu must be purely imaginary with |Im mu| large
/// enough that sinh(2 pi Im mu) is resolvable (degenerate-parameter error
/// otherwise).  Returns a complex with zero imaginary part.
Complex whittaker_w(double kappa, Complex mu, double z, const SeriesConfig& cfg = {});

}  // namespace fpd
