#include "fpd/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <future>
#include <random>
#include <thread>

#include "fpd/pearson.hpp"
#include "fpd/quadrature.hpp"

namespace fpd {

namespace {

constexpr double kPositivityFloor = 1e-10;

// splitmix64; used to derive independent sub-stream seeds
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa, open interval (0,1)
    return (double(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double normal_sample(std::mt19937_64& rng) {
    // Box-Muller; two uniforms per draw keeps the stream layout fixed
    const double u1 = uniform01(rng), u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t which) {
    std::uint64_t s = master ^ (0xd1b54a32d192ed03ULL * (which + 1));
    return splitmix64(s);
}

double stable_positive_sample(double alpha, double u_angle, double u_exp) {
    // Kanter: S = (A(U)/E)^{(1-a)/a},
    // A(u) = sin(a u)^{a/(1-a)} sin((1-a)u) / sin(u)^{1/(1-a)}, u in (0,pi)
    const double u = u_angle * M_PI;
    const double e = -std::log(u_exp);
    const double a = alpha;
    const double log_a_u = a / (1.0 - a) * std::log(std::sin(a * u)) +
                           std::log(std::sin((1.0 - a) * u)) -
                           1.0 / (1.0 - a) * std::log(std::sin(u));
    return std::exp((1.0 - a) / a * (log_a_u - std::log(e)));
}

Path stable_subordinator_path(double alpha, double t_end, double dt, std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("stable_subordinator_path: alpha must be in (0,1)");
    if (!(dt > 0.0 && t_end > 0.0)) throw DomainError("stable_subordinator_path: dt, t_end > 0");
    std::mt19937_64 rng(seed);
    const double scale = std::pow(dt, 1.0 / alpha);
    Path path;
    path.kind = PathKind::Subordinator;
    path.seed = seed;
    const std::size_t n = std::size_t(std::ceil(t_end / dt)) + 1;
    path.times.reserve(n);
    path.values.reserve(n);
    path.times.push_back(0.0);
    path.values.push_back(0.0);
    double d = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        d += scale * stable_positive_sample(alpha, uniform01(rng), uniform01(rng));
        path.times.push_back(i * dt);
        path.values.push_back(d);
    }
    return path;
}

Path inverse_subordinator_path(double alpha, const std::vector<double>& t_grid, double dt_inner,
                               std::uint64_t seed) {
    if (t_grid.empty() || !std::is_sorted(t_grid.begin(), t_grid.end()))
        throw DomainError("inverse_subordinator_path: t_grid must be ascending");
    const double t_max = t_grid.back();
    std::mt19937_64 rng(seed);
    const double scale = std::pow(dt_inner, 1.0 / alpha);

    // grow the D path until it passes t_max
    std::vector<double> d{0.0};
    auto extend = [&](std::size_t n_steps) {
        for (std::size_t i = 0; i < n_steps; ++i)
            d.push_back(d.back() +
                        scale * stable_positive_sample(alpha, uniform01(rng), uniform01(rng)));
    };
    extend(std::size_t(std::ceil(std::max(t_max, dt_inner) / dt_inner)));
    int retries = 0;
    while (d.back() <= t_max) {
        if (++retries > 64)
            throw NumericError("inverse_subordinator_path: subordinator failed to pass the level",
                               d.back(), t_max);
        extend(d.size());
    }

    Path path;
    path.kind = PathKind::InverseSubordinator;
    path.seed = seed;
    path.times = t_grid;
    path.values.reserve(t_grid.size());
    std::size_t j = 0;
    for (double t : t_grid) {
        while (d[j] <= t) ++j;  // first j with D_{x_j} > t; d.back() > t_max guarantees exit
        if (j == 0) {
            path.values.push_back(0.0);
            continue;
        }
        // crossing between x_{j-1} and x_j: linear interpolation in the level
        const double x_lo = (j - 1) * dt_inner, x_hi = j * dt_inner;
        const double frac = (t - d[j - 1]) / (d[j] - d[j - 1]);
        path.values.push_back(x_lo + frac * (x_hi - x_lo));
    }
    return path;
}

Path pearson_path(const DiffusionParams& p, const std::vector<double>& t_grid, double x0,
                  const SimConfig& cfg, std::uint64_t seed) {
    p.validate();
    if (!(x0 > 0.0)) throw DomainError("pearson_path: x0 must be > 0");
    if (t_grid.empty() || !std::is_sorted(t_grid.begin(), t_grid.end()))
        throw DomainError("pearson_path: t_grid must be ascending");
    std::mt19937_64 rng(seed);
    Path path;
    path.kind = PathKind::Diffusion;
    path.seed = seed;
    path.times = t_grid;
    path.values.reserve(t_grid.size());
    double x = x0;
    double t = 0.0;
    if (t_grid.front() == 0.0) {
        path.values.push_back(x);
    }
    std::size_t start = (t_grid.front() == 0.0) ? 1 : 0;
    for (std::size_t i = start; i < t_grid.size(); ++i) {
        double target = t_grid[i];
        while (t < target - 1e-15) {
            const double h = std::min(cfg.dt, target - t);
            const double z = normal_sample(rng);
            // full truncation: coefficients evaluated at the positive part
            const double xp = std::max(x, kPositivityFloor);
            double x_new =
                x + drift(p, xp) * h + std::sqrt(diffusion_sq(p, xp) * h) * z;
            if (x_new < kPositivityFloor) {
                x_new = kPositivityFloor;
                ++path.truncation_events;
            }
            x = x_new;
            t += h;
        }
        t = target;
        path.values.push_back(x);
    }
    return path;
}

Path fractional_path(const DiffusionParams& p, double alpha, const std::vector<double>& t_grid,
                     double x0, const SimConfig& cfg, std::uint64_t seed) {
    // independent streams for the clock and the diffusion
    const std::uint64_t seed_clock = substream_seed(seed, 1);
    const std::uint64_t seed_diff = substream_seed(seed, 2);
    const double dt_inner =
        std::min(cfg.dt, t_grid.back() / std::max<std::size_t>(t_grid.size(), 10) / 10.0);
    Path clock = inverse_subordinator_path(alpha, t_grid, dt_inner, seed_clock);
    // inner diffusion simulated on the range of E values
    const double e_max = clock.values.back();
    std::vector<double> inner_grid = clock.values;
    // pearson_path wants strictly ascending times; E is nondecreasing with
    // plateaus, so simulate on the sorted unique grid and map back
    std::vector<double> uniq = inner_grid;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.front() > 0.0) uniq.insert(uniq.begin(), 0.0);
    if (e_max == 0.0) uniq = {0.0};
    Path inner;
    if (uniq.size() > 1) {
        inner = pearson_path(p, uniq, x0, cfg, seed_diff);
    } else {
        inner.times = {0.0};
        inner.values = {x0};
    }
    Path path;
    path.kind = PathKind::Fractional;
    path.seed = seed;
    path.times = t_grid;
    path.truncation_events = inner.truncation_events;
    path.values.reserve(t_grid.size());
    for (double e : clock.values) {
        const auto it = std::lower_bound(inner.times.begin(), inner.times.end(), e);
        path.values.push_back(inner.values[std::size_t(it - inner.times.begin())]);
    }
    return path;
}

InvariantSampler::InvariantSampler(const DiffusionParams& p) {
    auto [lo, hi] = support_bounds(p, 1e-10);
    // log-spaced abscissae resolve both the peak and the power tail
    const int n = 4000;
    xs_.resize(n);
    cdf_.resize(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) xs_[i] = std::exp(llo + (lhi - llo) * i / (n - 1.0));
    cdf_[0] = 0.0;
    for (int i = 1; i < n; ++i) {
        const double a = xs_[i - 1], b = xs_[i];
        // Simpson on the log-hat is plenty at this resolution
        const double m = 0.5 * (a + b);
        cdf_[i] = cdf_[i - 1] + (b - a) / 6.0 *
                                    (invariant_density(p, a) + 4.0 * invariant_density(p, m) +
                                     invariant_density(p, b));
    }
    const double z = cdf_.back();
    for (auto& c : cdf_) c /= z;
}

double InvariantSampler::sample(double u01) const {
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u01);
    if (it == cdf_.begin()) return xs_.front();
    if (it == cdf_.end()) return xs_.back();
    const std::size_t i = std::size_t(it - cdf_.begin());
    const double c0 = cdf_[i - 1], c1 = cdf_[i];
    const double f = c1 > c0 ? (u01 - c0) / (c1 - c0) : 0.0;
    return xs_[i - 1] + f * (xs_[i] - xs_[i - 1]);
}

AcfEstimate empirical_acf(const std::vector<Path>& paths, const std::vector<double>& lags) {
    if (paths.size() < 100) throw DomainError("empirical_acf: need at least 100 paths");
    const auto& t = paths.front().times;
    AcfEstimate est;
    est.lag = lags;
    for (double lag : lags) {
        // pair every grid point with the point lag later
        std::vector<double> prods;
        double sx = 0.0, sxx = 0.0;
        std::size_t n_base = 0;
        // time indices: use t[0] as the base point (stationary start)
        const auto it = std::lower_bound(t.begin(), t.end(), t.front() + lag - 1e-12);
        if (it == t.end()) throw DomainError("empirical_acf: lag beyond the grid");
        const std::size_t j = std::size_t(it - t.begin());
        prods.reserve(paths.size());
        for (const auto& path : paths) {
            const double a = path.values.front(), b = path.values[j];
            prods.push_back(a * b);
            sx += a + b;
            sxx += a * a + b * b;
            n_base += 2;
        }
        const double mean = sx / double(n_base);
        const double var = sxx / double(n_base) - mean * mean;
        double m = 0.0;
        for (double v : prods) m += v;
        m /= double(prods.size());
        double s2 = 0.0;
        for (double v : prods) s2 += (v - m) * (v - m);
        s2 /= double(prods.size()) * double(prods.size() - 1);
        est.acf.push_back((m - mean * mean) / var);
        est.stderr_.push_back(std::sqrt(s2) / var);
    }
    return est;
}

Histogram empirical_density(const std::vector<Path>& paths, double t,
                            const std::vector<double>& edges) {
    if (paths.size() < 100) throw DomainError("empirical_density: need at least 100 paths");
    if (edges.size() < 3 || !std::is_sorted(edges.begin(), edges.end()))
        throw DomainError("empirical_density: bad bin edges");
    const auto& times = paths.front().times;
    const auto it = std::lower_bound(times.begin(), times.end(), t - 1e-12);
    if (it == times.end()) throw DomainError("empirical_density: t beyond the grid");
    const std::size_t j = std::size_t(it - times.begin());
    Histogram h;
    h.edges = edges;
    h.density.assign(edges.size() - 1, 0.0);
    h.stderr_.assign(edges.size() - 1, 0.0);
    h.n_samples = paths.size();
    for (const auto& path : paths) {
        const double v = path.values[j];
        const auto bin = std::upper_bound(edges.begin(), edges.end(), v);
        if (bin == edges.begin() || bin == edges.end()) continue;
        h.density[std::size_t(bin - edges.begin()) - 1] += 1.0;
    }
    for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
        const double width = edges[b + 1] - edges[b];
        const double phat = h.density[b] / double(paths.size());
        h.density[b] = phat / width;
        h.stderr_[b] = std::sqrt(std::max(phat * (1.0 - phat), 0.0) / double(paths.size())) / width;
    }
    return h;
}

void write_path_csv(const Path& path, const std::string& filename) {
    std::FILE* f = std::fopen(filename.c_str(), "wb");
    if (!f) throw std::runtime_error("write_path_csv: cannot open " + filename);
    std::fputs("t,value\n", f);
    for (std::size_t i = 0; i < path.times.size(); ++i)
        std::fprintf(f, "%.17g,%.17g\n", path.times[i], path.values[i]);
    std::fclose(f);
}

namespace {
constexpr char kPathMagic[8] = {'F', 'P', 'D', 'P', 'A', 'T', 'H', '1'};
}

void write_path_binary(const Path& path, const std::string& filename) {
    std::ofstream f(filename, std::ios::binary);
    if (!f) throw std::runtime_error("write_path_binary: cannot open " + filename);
    f.write(kPathMagic, 8);
    const std::uint64_t n = path.times.size();
    const std::uint64_t kind = std::uint64_t(path.kind);
    f.write(reinterpret_cast<const char*>(&n), 8);
    f.write(reinterpret_cast<const char*>(&path.seed), 8);
    f.write(reinterpret_cast<const char*>(&kind), 8);
    f.write(reinterpret_cast<const char*>(path.times.data()), std::streamsize(8 * n));
    f.write(reinterpret_cast<const char*>(path.values.data()), std::streamsize(8 * n));
}

Path read_path_binary(const std::string& filename) {
    std::ifstream f(filename, std::ios::binary);
    if (!f) throw std::runtime_error("read_path_binary: cannot open " + filename);
    char magic[8];
    f.read(magic, 8);
    if (std::memcmp(magic, kPathMagic, 8) != 0)
        throw std::runtime_error("read_path_binary: bad magic");
    std::uint64_t n = 0, kind = 0;
    Path path;
    f.read(reinterpret_cast<char*>(&n), 8);
    f.read(reinterpret_cast<char*>(&path.seed), 8);
    f.read(reinterpret_cast<char*>(&kind), 8);
    path.kind = PathKind(kind);
    path.times.resize(n);
    path.values.resize(n);
    f.read(reinterpret_cast<char*>(path.times.data()), std::streamsize(8 * n));
    f.read(reinterpret_cast<char*>(path.values.data()), std::streamsize(8 * n));
    return path;
}

std::vector<double> fractional_endpoints(const DiffusionParams& p, double alpha, double t_end,
                                         double x0_or_stationary, bool stationary_start,
                                         const SimConfig& cfg, std::uint64_t seed) {
    const std::vector<double> grid{t_end};
    std::vector<double> out(std::size_t(cfg.n_paths));
    std::unique_ptr<InvariantSampler> sampler;
    if (stationary_start) sampler = std::make_unique<InvariantSampler>(p);
    const unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunk = (out.size() + n_threads - 1) / n_threads;
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < n_threads; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(out.size(), lo + chunk);
        if (lo >= hi) break;
        jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                const std::uint64_t ps = substream_seed(seed, 1000 + i);
                double x0 = x0_or_stationary;
                if (stationary_start) {
                    std::mt19937_64 r(substream_seed(ps, 3));
                    x0 = sampler->sample(uniform01(r));
                }
                out[i] = (alpha < 1.0)
                             ? fractional_path(p, alpha, grid, x0, cfg, ps).values.back()
                             : pearson_path(p, {0.0, t_end}, x0, cfg, ps).values.back();
            }
        }));
    }
    for (auto& j : jobs) j.get();
    return out;
}

}  // namespace fpd
