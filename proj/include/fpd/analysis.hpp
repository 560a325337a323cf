#pragma once

#include "fpd/params.hpp"
#include "fpd/spectral.hpp"

namespace fpd {

struct AcfQuery {
    double theta = 1.0;
    double alpha = 1.0;
    double s = 1.0;  // earlier time, > 0
    double t = 1.0;  // later time, >= s
};

/// Stationary autocorrelation of the time-changed diffusion:
///   E_a(-theta t^a) + theta a t^a / Gamma(1+a) *
///       int_0^{s/t} E_a(-theta t^a (1-z)^a) z^{a-1} dz,
/// the z^{a-1} endpoint removed by substituting z = u^{1/a}.
double acf_fractional(const AcfQuery& q);

/// Leading long-time term (1/theta + s^a/Gamma(1+a)) / (t^a Gamma(1-a)).
double acf_asymptote(double theta, double alpha, double s, double t);

/// |p_alpha(x, t; y) - m(x)|.
double stationary_gap(const DiffusionParams& p, double alpha, double x, double y, double t,
                      const QuadConfig& cfg = {});

}  // namespace fpd
