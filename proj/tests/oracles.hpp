#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: brute-force series, Stirling asymptotics, finite differences.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// Stirling series for log Gamma, valid for large |z| with Re z > 0;
// cross-checks the Lanczos path on a disjoint algorithm.
inline Complex log_gamma_stirling(Complex z) {
    // push into the well-convergent region, then recur back down
    int shifts = 0;
    while (std::abs(z) < 40.0) {
        z += 1.0;
        ++shifts;
    }
    static const double b[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
                               -691.0 / 360360, 1.0 / 156, -3617.0 / 122400};
    Complex s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI);
    Complex zp = z;
    for (double bn : b) {
        s += bn / zp;
        zp *= z * z;
    }
    for (int i = 0; i < shifts; ++i) {
        z -= 1.0;
        s -= std::log(z);
    }
    return s;
}

// Truncated power series sum_j (-x)^j / Gamma(1 + a j) in long double;
// trustworthy for x up to ~2.
inline double mittag_leffler_series(double alpha, double x) {
    long double sum = 0.0L, term = 1.0L;
    for (int j = 0; j < 500 && fabsl(term) > 1e-24L; ++j) {
        sum += term;
        term = powl(-(long double)x, j + 1) / tgammal(1.0L + alpha * (j + 1));
    }
    return (double)sum;
}

// Kummer series with explicit conjugate pairing: sums the real part of
// paired terms directly, so the imaginary rounding residue never enters.
inline double hyp2f1_conjugate_series(double ar, double ai, double c, double z) {
    // 2F1(ar+i ai, ar-i ai; c; z), |z|<1
    std::complex<long double> a(ar, ai);
    std::complex<long double> term = 1.0L, sum = 1.0L;
    for (int j = 0; j < 100000; ++j) {
        const std::complex<long double> num = (a + (long double)j) * (std::conj(a) + (long double)j);
        term *= num * (long double)z / (((long double)c + j) * (long double)(j + 1));
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum)) break;
    }
    return (double)sum.real();
}

// Central-difference generator application on a fine stencil (the test
// oracle; the library has its own FD routine with a caller-chosen h).
inline double generator_fd(const std::function<double(double)>& mu,
                           const std::function<double(double)>& sigma_sq,
                           const std::function<double(double)>& f, double y, double h) {
    const double d1 = (f(y + h) - f(y - h)) / (2.0 * h);
    const double d2 = (f(y + h) - 2.0 * f(y) + f(y - h)) / (h * h);
    return mu(y) * d1 + 0.5 * sigma_sq(y) * d2;
}

// trapezoid over a sampled grid
inline double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (size_t i = 1; i < x.size(); ++i) s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return s;
}

}  // namespace oracle
