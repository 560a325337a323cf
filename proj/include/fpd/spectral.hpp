#pragma once

#include <functional>
#include <vector>

#include "fpd/params.hpp"
#include "fpd/pearson.hpp"

namespace fpd {

struct QuadConfig {
    double abs_tol = 1e-8;     // target absolute error of the band integral
    double k_max_init = 8.0;   // first band truncation (in k units)
    int max_refinements = 14;  // K doublings before giving up
};

/// Time factor of one spectral mode: e^{-lambda t} at alpha = 1,
/// E_alpha(-lambda t^alpha) for alpha < 1.
struct TimeWeight {
    enum class Mode { Exp, ML };
    Mode mode = Mode::Exp;
    double alpha = 1.0;
    static TimeWeight make(double alpha);
};

struct DensityEval {
    double value = 0.0;           // clamped to >= 0
    double discrete_part = 0.0;   // raw
    double continuous_part = 0.0; // raw (signed; includes the tail estimate)
    double quad_error = 0.0;
    int n_quad_nodes = 0;
};

/// Transition density p_alpha(x, t; x0) of the (possibly time-changed)
/// diffusion by its spectral representation.
DensityEval transition_density(const DiffusionParams& p, double alpha, double x, double t,
                               double x0, const QuadConfig& cfg = {});

/// Same, over an ascending x grid with one shared set of band nodes.
std::vector<DensityEval> transition_density_grid(const DiffusionParams& p, double alpha,
                                                 const std::vector<double>& xs, double t,
                                                 double x0, const QuadConfig& cfg = {});

/// p_alpha(x, t_j; y_i) tabulated over grids (t ascending, y ascending),
/// x fixed; one shared node set, one Mittag-Leffler table.
std::vector<std::vector<double>> transition_density_table(const DiffusionParams& p, double alpha,
                                                          double x,
                                                          const std::vector<double>& t_grid,
                                                          const std::vector<double>& y_grid,
                                                          const QuadConfig& cfg = {});

/// Integrand of the continuous spectral part,
///   h(lambda) = w(lambda, t) weight(lambda) u(x,-lambda) u(x0,-lambda),
/// (without the m(x)/(4 pi) resp. m(x)/pi prefactor).
double continuous_integrand(const DiffusionParams& p, double alpha, double x, double x0, double t,
                            double lambda);

/// Solution q(t; y) of the backward Cauchy problem with initial data g,
/// via the mode expansion: discrete inner products <g, P_n>_m plus the
/// band term with <g, u(.,-lambda)>_m.
double backward_solution(const DiffusionParams& p, double alpha,
                         const std::function<double(double)>& g, double t, double y,
                         const QuadConfig& cfg = {});

/// L2 solution q(x, t) of the fractional Fokker-Planck problem with
/// initial density f (compact support):  q = integral p_alpha(x,t;y) f(y) dy.
double fokker_planck_solution(const DiffusionParams& p, double alpha,
                              const std::function<double(double)>& f, double x, double t,
                              const QuadConfig& cfg = {});

struct CaputoResidual {
    double residual = 0.0;   // max |D_t^alpha p - G_y p| over the checked grid
    bool inconclusive = false;  // discretization error estimate exceeded the residual
};

/// Residual of the backward equation on a tabulated (t, y) grid: Caputo
/// derivative by the L1 scheme (uniform t grid extended back to 0) vs
/// the generator applied by central differences in y.  alpha = 1 uses
/// plain central time differences.
CaputoResidual caputo_residual(const DiffusionParams& p, double alpha, double x,
                               const std::vector<double>& t_grid,
                               const std::vector<double>& y_grid, const QuadConfig& cfg = {});

}  // namespace fpd
