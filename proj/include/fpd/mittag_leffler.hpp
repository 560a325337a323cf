#pragma once

#include <memory>
#include <vector>

namespace fpd {

/// E_alpha(-x) for alpha in (0,1], x >= 0.  Power series for x <= 1,
/// optimally truncated asymptotic series for large x, and the
/// completely-monotone spectral integral in between.  Result in (0,1].
double mittag_leffler(double alpha, double x);

/// Relaxation curve u -> E_alpha(-u) with fixed alpha, tabulated once
/// into piecewise Chebyshev segments so spectral quadratures can query
/// it cheaply.  Accuracy ~1e-12 relative over u in [0, 1e12]; direct
/// evaluation beyond the table.
class MittagLefflerCurve {
public:
    explicit MittagLefflerCurve(double alpha);
    double operator()(double u) const;  // E_alpha(-u)
    double alpha() const { return alpha_; }

private:
    double alpha_;
    bool exp_mode_;                      // alpha == 1
    std::vector<std::vector<double>> cheb_;  // per dyadic segment, Chebyshev coeffs
    int n_seg_;
    double u_lo_;                        // first segment covers [0, u_lo_]
    std::vector<double> series_cheb_;    // Chebyshev on [0, u_lo_]
};

}  // namespace fpd
