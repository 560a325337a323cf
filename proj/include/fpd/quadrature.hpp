#pragma once

#include <array>
#include <functional>

namespace fpd {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // absolute error estimate
    int n_evals = 0;
};

/// One (7,15) Gauss-Kronrod panel on [a,b].
QuadResult gauss_kronrod_15(const std::function<double(double)>& f, double a, double b);

/// Globally adaptive Gauss-Kronrod on a finite interval.  Bisects the
/// worst panel until the summed error estimate meets the tolerance or the
/// panel budget runs out (then throws NumericError with the best value).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol = 1e-12, int max_panels = 4000);

/// Adaptive integral over [a, inf) via the map t in (0,1], x = a + t/(1-t).
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double abs_tol, double rel_tol = 1e-12, int max_panels = 4000);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1]
/// (computed once per n by Newton iteration on the Legendre recurrence).
const std::pair<std::array<double, 64>, std::array<double, 64>>& gauss_legendre_64();

/// Fixed-order Gauss-Legendre on [a,b] with 64 nodes.
double gauss_legendre_64_integrate(const std::function<double(double)>& f, double a, double b);

}  // namespace fpd
