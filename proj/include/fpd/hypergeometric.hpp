#pragma once

#include <complex>

namespace fpd {

using Complex = std::complex<double>;

struct SeriesConfig {
    double rel_tol = 1e-12;
    int max_terms = 10000;
};

/// Kummer 1F1(a; b; z) by direct series, complex parameters, real z with
/// |z| <= 100.  b must stay off the non-positive integers.
Complex hyp1f1(Complex a, Complex b, double z, const SeriesConfig& cfg = {});

/// Gauss 2F1(a, b; c; z) for z <= 0, c > 0, with (a,b) a complex-conjugate
/// pair or both real.  Direct series on (-1, 0], Pfaff transformation
/// w = z/(z-1) in (0,1) for z < -1.
Complex hyp2f1(Complex a, Complex b, double c, double z, const SeriesConfig& cfg = {});

}  // namespace fpd
