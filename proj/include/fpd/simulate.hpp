#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpd/params.hpp"

namespace fpd {

enum class PathKind { Subordinator, InverseSubordinator, Diffusion, Fractional };

struct Path {
    std::vector<double> times;   // strictly increasing
    std::vector<double> values;  // same length
    std::uint64_t seed = 0;
    PathKind kind = PathKind::Diffusion;
    std::int64_t truncation_events = 0;  // positivity-floor hits (diffusion paths)
};

struct SimConfig {
    double dt = 1e-3;
    int n_paths = 1;
    // scheme: Euler-Maruyama; positivity: full truncation (the only
    // implemented choices, kept explicit for config files)
    std::string scheme = "euler-maruyama";
    std::string positivity = "full-truncation";
};

/// Deterministic stream splitting: sub-stream `which` of a master seed.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t which);

/// One-sided alpha-stable variate with Laplace transform exp(-s^alpha)
/// (Kanter's trigonometric sampler), driven by two uniforms.
double stable_positive_sample(double alpha, double u_angle, double u_exp);

/// Standard stable subordinator path on the grid {0, dt, 2dt, ...} up to
/// t_end: D_0 = 0, i.i.d. increments dt^{1/alpha} S_i.
Path stable_subordinator_path(double alpha, double t_end, double dt, std::uint64_t seed);

/// Inverse subordinator E_t on the given time grid by first-passage
/// inversion of a simulated D path with linear interpolation of the
/// crossing; extends the D path and retries if it has not yet passed
/// max(t_grid).
Path inverse_subordinator_path(double alpha, const std::vector<double>& t_grid, double dt_inner,
                               std::uint64_t seed);

/// Euler-Maruyama path of the Pearson diffusion with full-truncation
/// positivity handling.
Path pearson_path(const DiffusionParams& p, const std::vector<double>& t_grid, double x0,
                  const SimConfig& cfg, std::uint64_t seed);

/// Time-changed path X(E_t) on t_grid: independent subordinator and
/// diffusion streams derived from the master seed.
Path fractional_path(const DiffusionParams& p, double alpha, const std::vector<double>& t_grid,
                     double x0, const SimConfig& cfg, std::uint64_t seed);

/// Draw from the stationary law by inverse CDF (numeric tabulation).
class InvariantSampler {
public:
    explicit InvariantSampler(const DiffusionParams& p);
    double sample(double u01) const;  // quantile function

private:
    std::vector<double> xs_, cdf_;
};

struct AcfEstimate {
    std::vector<double> lag;
    std::vector<double> acf;
    std::vector<double> stderr_;
};

/// Unbiased sample autocorrelation across a path ensemble at the given
/// lags; requires all paths on one common grid and stationary starts.
AcfEstimate empirical_acf(const std::vector<Path>& paths, const std::vector<double>& lags);

struct Histogram {
    std::vector<double> edges;    // n_bins + 1
    std::vector<double> density;  // normalized to unit mass
    std::vector<double> stderr_;
    std::size_t n_samples = 0;
};

/// Normalized histogram of path values at time t (nearest grid point).
Histogram empirical_density(const std::vector<Path>& paths, double t,
                            const std::vector<double>& edges);

/// Export: CSV (t,value) and a little-endian binary dump with a small header.
void write_path_csv(const Path& path, const std::string& filename);
void write_path_binary(const Path& path, const std::string& filename);
Path read_path_binary(const std::string& filename);

/// Ensemble of end-point values X_T for n_paths fractional paths,
/// deterministic in (seed, config), generated in parallel chunks with a
/// fixed reduction order.
std::vector<double> fractional_endpoints(const DiffusionParams& p, double alpha, double t_end,
                                         double x0_or_stationary, bool stationary_start,
                                         const SimConfig& cfg, std::uint64_t seed);

}  // namespace fpd
