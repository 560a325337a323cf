#pragma once

#include <span>
#include <vector>

#include "fpd/params.hpp"
#include "fpd/whittaker.hpp"

namespace fpd {

/// Band parametrization lambda = Lambda + band_scale * k^2, k > 0.
double band_scale(const DiffusionParams& p);           // theta/(beta-1) RG, 2 theta/(beta-2) FS
double k_of_lambda(const DiffusionParams& p, double lambda);  // positive root
double lambda_of_k(const DiffusionParams& p, double k);

/// Sturm-Liouville solution psi(x, -lambda) of the RG generator,
/// evaluated through the Whittaker-W identity
///   psi = x^{(beta+1)/2} e^{gamma/(2x)} W_{(beta+1)/2, i k}(gamma/x).
double psi_rg(double x, double lambda, const DiffusionParams& p);
LogScaled psi_rg_log(double x, double k, const DiffusionParams& p);

/// Sturm-Liouville solution f1(x, -lambda) of the FS generator,
/// f1 = 2F1(-beta/4 + ik, -beta/4 - ik; gamma/2; -gamma x / beta).
double f1_fs(double x, double lambda, const DiffusionParams& p);

/// Batch evaluation of f1 over an ascending grid for one k.  Uses the
/// hypergeometric series while the conjugate-pair cancellation stays
/// within budget and switches to integrating the Sturm-Liouville ODE
/// from a series start point otherwise.
std::vector<double> f1_fs_grid(std::span<const double> xs, double k, const DiffusionParams& p);

/// log of the continuous-band spectral weight times the Jacobian
/// d(lambda)/dk of the band substitution:
///   RG: b(lambda) * 2 theta k/(beta-1), with |Gamma(2ik)|^2 folded in
///       analytically as pi / (2k sinh(2 pi k));
///   FS: a(lambda) * 4 theta k/(beta-2).
/// Smooth and vanishing at k = 0.
double band_weight_jacobian_log(double k, const DiffusionParams& p);

}  // namespace fpd
