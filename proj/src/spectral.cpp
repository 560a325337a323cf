#include "fpd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <memory>
#include <mutex>

#include "fpd/mittag_leffler.hpp"
#include "fpd/quadrature.hpp"
#include "fpd/sturm_liouville.hpp"

namespace fpd {

namespace {

// Kronrod-15 nodes/weights and embedded Gauss-7 weights (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

std::shared_ptr<const MittagLefflerCurve> ml_for(double alpha) {
    static std::mutex mu;
    static std::map<double, std::shared_ptr<const MittagLefflerCurve>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
    auto c = std::make_shared<const MittagLefflerCurve>(alpha);
    cache.emplace(alpha, c);
    return c;
}

struct BandContext {
    DiffusionParams p;
    bool rg;
    Spectrum spec;
    double alpha;
    std::shared_ptr<const MittagLefflerCurve> ml;  // present iff alpha < 1

    explicit BandContext(const DiffusionParams& params, double a) : p(params), alpha(a) {
        if (!(a > 0.0) || a > 1.0) throw DomainError("spectral: alpha must be in (0,1]");
        p.validate_for_spectral();
        rg = p.kind == DiffusionKind::ReciprocalGamma;
        spec = spectrum(p);
        if (a < 1.0) ml = ml_for(a);
    }

    // prefactor of the continuous part apart from m(x): 1/(4 pi) or 1/pi
    double band_prefactor() const { return rg ? 1.0 / (4.0 * M_PI) : 1.0 / M_PI; }

    double time_weight(double lambda, double t) const {
        if (alpha == 1.0) return std::exp(-lambda * t);
        return (*ml)(lambda * std::pow(t, alpha));
    }
};

// Evaluates the time-independent node geometry
//   geo_x(k) = [weight(lambda) dlambda/dk] * u(x, k) * u(x0, k)
// for every x of an ascending evaluation grid.
class NodeGeometry {
public:
    NodeGeometry(const BandContext& ctx, std::vector<double> xs, double x0)
        : ctx_(ctx), xs_(std::move(xs)), x0_(x0) {}

    const std::vector<double>& xs() const { return xs_; }

    // local oscillation rate d(phase)/dk of the band integrand, maximized
    // over the evaluation points; used to size quadrature panels
    double phase_rate(double k) const {
        if (rate_x_ < 0.0) {
            double m = 0.0;
            if (ctx_.rg) {
                for (double x : xs_) m = std::max(m, std::fabs(std::log(ctx_.p.gamma / x)));
                m = std::max(m, std::fabs(std::log(ctx_.p.gamma / x0_)));
            } else {
                double xm = std::max(xs_.empty() ? x0_ : xs_.back(), x0_);
                m = 2.0 * std::asinh(std::sqrt(ctx_.p.gamma * xm / ctx_.p.beta));
            }
            rate_x_ = m;
        }
        return ctx_.rg ? rate_x_ + 2.0 * std::log(2.0 * k + 2.0) : rate_x_ + 0.5;
    }

    void eval(double k, std::vector<double>& out) const {
        out.resize(xs_.size());
        const double lw = band_weight_jacobian_log(k, ctx_.p);
        if (ctx_.rg) {
            const LogScaled u0 = psi_rg_log(x0_, k, ctx_.p);
            for (size_t i = 0; i < xs_.size(); ++i) {
                const LogScaled ux = psi_rg_log(xs_[i], k, ctx_.p);
                out[i] = u0.sign * ux.sign * std::exp(lw + u0.log_abs + ux.log_abs);
            }
            return;
        }
        // FS: one ODE/series sweep covers the grid and x0
        if (grid_with_x0_.empty()) {
            grid_with_x0_ = xs_;
            auto pos = std::lower_bound(grid_with_x0_.begin(), grid_with_x0_.end(), x0_);
            if (pos == grid_with_x0_.end() || *pos != x0_) {
                x0_index_ = size_t(pos - grid_with_x0_.begin());
                grid_with_x0_.insert(pos, x0_);
                x0_inserted_ = true;
            } else {
                x0_index_ = size_t(pos - grid_with_x0_.begin());
            }
        }
        const std::vector<double> f1 = f1_fs_grid(grid_with_x0_, k, ctx_.p);
        const double w = std::exp(lw);
        const double u0 = f1[x0_index_];
        size_t src = 0;
        for (size_t i = 0; i < grid_with_x0_.size(); ++i) {
            if (x0_inserted_ && i == x0_index_) continue;
            out[src++] = w * u0 * f1[i];
        }
    }

private:
    const BandContext& ctx_;
    std::vector<double> xs_;
    double x0_;
    mutable std::vector<double> grid_with_x0_;
    mutable size_t x0_index_ = 0;
    mutable bool x0_inserted_ = false;
    mutable double rate_x_ = -1.0;
};

struct BandCapture {
    std::vector<double> k, wq;             // Kronrod nodes and weights
    std::vector<std::vector<double>> geo;  // [node][x]
};

struct BandResult {
    std::vector<double> integral;  // per x, tail correction included
    std::vector<double> error;    // per x
    int n_nodes = 0;
};

// Octave-resolved accumulation so the power-law tail can be extrapolated
// geometrically per evaluation point.
struct OctaveSums {
    // index 0 holds [0, 1); octave j >= 1 holds [2^{j-1}, 2^j)
    std::vector<std::vector<double>> sums;  // [octave][x]
    void add(double k, const std::vector<double>& v, double w, size_t nx) {
        int j = k < 1.0 ? 0 : 1 + int(std::floor(std::log2(k)));
        if (int(sums.size()) <= j) sums.resize(j + 1, std::vector<double>(nx, 0.0));
        for (size_t i = 0; i < nx; ++i) sums[j][i] += w * v[i];
    }
};

// Geometric tail extrapolation from the last dyadic octaves.  The octave
// ratio of a power-law-times-relaxation integrand is nearly constant; its
// drift across consecutive octaves gauges the extrapolation error.
std::pair<double, double> extrapolate_tail(double s_prev2, double s_prev, double s_last) {
    const double tiny = 1e-300;
    if (std::fabs(s_last) < tiny) return {0.0, 0.0};
    const double r2 = s_last / (s_prev == 0.0 ? tiny : s_prev);
    if (!(r2 > 0.0 && r2 < 0.85)) return {0.0, std::fabs(s_last)};
    const double tail = s_last * r2 / (1.0 - r2);
    const double r1 = (s_prev2 != 0.0) ? s_prev / s_prev2 : 0.0;
    if (r1 > 0.0 && r1 < 0.85) {
        const double drift = std::fabs(r2 - r1) / (1.0 - r2);
        return {tail, std::fabs(tail) * std::min(1.0, drift + 0.005)};
    }
    return {tail, 0.30 * std::fabs(tail) + 0.02 * std::fabs(s_last)};
}

// Adaptive band integration in the k variable.  The integrand per x is
//   g_x(k) = time_weight(lambda(k)) * geo_x(k).
// tol_x: per-evaluation-point absolute tolerance in raw band units (the
// caller divides out its prefactors).
BandResult integrate_band(const BandContext& ctx, const NodeGeometry& geom, double t,
                          const QuadConfig& cfg, const std::vector<double>& tol_x,
                          BandCapture* capture) {
    const size_t nx = geom.xs().size();
    BandResult res;
    res.integral.assign(nx, 0.0);
    res.error.assign(nx, 0.0);
    OctaveSums octaves;

    struct PanelData {
        std::vector<double> node_k;                // 15 Kronrod abscissae
        std::vector<std::vector<double>> node_g;   // [node][x], time weight included
        std::vector<double> pk, pg;                // per-x Kronrod / Gauss sums
        double max_err = 0.0;
        double h = 0.0;
    };

    std::vector<double> node_vals(nx);
    auto eval_panel = [&](double a, double b, PanelData& pd) {
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        pd.h = h;
        pd.node_k.clear();
        pd.node_g.clear();
        pd.pk.assign(nx, 0.0);
        pd.pg.assign(nx, 0.0);
        for (int i = 0; i < 8; ++i) {
            for (int sgn = (i == 7 ? 1 : 0); sgn < 2; ++sgn) {
                const double kq = c + (sgn == 0 ? -1.0 : 1.0) * h * kXgk[i];
                geom.eval(kq, node_vals);
                const double tw = ctx.time_weight(lambda_of_k(ctx.p, kq), t);
                pd.node_k.push_back(kq);
                if (capture) pd.node_g.push_back(node_vals);
                for (size_t j = 0; j < nx; ++j) {
                    const double g = tw * node_vals[j];
                    pd.pk[j] += kWgk[i] * g;
                    if (i % 2 == 1) pd.pg[j] += kWg[i / 2] * g;
                }
            }
        }
        pd.max_err = 0.0;
        for (size_t j = 0; j < nx; ++j)
            pd.max_err = std::max(pd.max_err, h * std::fabs(pd.pk[j] - pd.pg[j]));
    };

    auto commit_panel = [&](double a, double b, PanelData& pd) {
        for (size_t j = 0; j < nx; ++j) {
            res.integral[j] += pd.h * pd.pk[j];
            res.error[j] += pd.h * std::fabs(pd.pk[j] - pd.pg[j]);
        }
        octaves.add(0.5 * (a + b), pd.pk, pd.h, nx);
        res.n_nodes += int(pd.node_k.size());
        if (capture) {
            for (size_t n = 0; n < pd.node_k.size(); ++n) {
                capture->k.push_back(pd.node_k[n]);
                capture->geo.push_back(std::move(pd.node_g[n]));
            }
            // Kronrod weights in node evaluation order
            for (int i = 0; i < 8; ++i)
                for (int sgn = (i == 7 ? 1 : 0); sgn < 2; ++sgn)
                    capture->wq.push_back(kWgk[i] * pd.h);
        }
    };

    // adaptive processing of [lo, hi) with an error budget; initial panels
    // sized to a couple of oscillation periods so bisection only polishes
    auto process_range = [&](double lo, double hi, double budget, double min_width) {
        std::deque<std::pair<double, double>> work;
        const double w0 =
            std::clamp(9.0 / geom.phase_rate(std::max(lo, 1.0)), min_width, hi - lo);
        const int n0 = std::max(1, int(std::ceil((hi - lo) / w0)));
        for (int i = 0; i < n0; ++i)
            work.push_back({lo + (hi - lo) * i / n0, lo + (hi - lo) * (i + 1) / n0});
        const double per_unit = budget / (hi - lo);
        PanelData pd;
        while (!work.empty()) {
            auto [a, b] = work.front();
            work.pop_front();
            eval_panel(a, b, pd);
            if (pd.max_err <= per_unit * (b - a) || (b - a) <= min_width) {
                commit_panel(a, b, pd);
            } else {
                const double m = 0.5 * (a + b);
                work.push_back({a, m});
                work.push_back({m, b});
            }
        }
    };

    const double tol = *std::min_element(tol_x.begin(), tol_x.end());
    // power-of-two band cap keeps panels aligned with the dyadic octaves
    double k_cap = std::pow(2.0, std::ceil(std::log2(std::max(cfg.k_max_init, 4.0))));
    auto octave_budget = [tol](int j) { return tol / (4.0 * (j + 1.0) * (j + 2.0)); };
    process_range(0.0, 1.0, tol / 8.0, 1e-3);
    int oct = 0;
    for (double lo = 1.0; lo < k_cap; lo *= 2.0, ++oct)
        process_range(lo, 2.0 * lo, octave_budget(oct), std::max(1e-3, lo / 512.0));

    for (int refine = 0; refine <= cfg.max_refinements; ++refine) {
        // tail from the last dyadic octaves, judged per evaluation point
        bool tail_ok = true;
        std::vector<double> tails(nx, 0.0), tail_errs(nx, 0.0);
        const int n_oct = int(octaves.sums.size());
        for (size_t j = 0; j < nx; ++j) {
            const double s_last = n_oct >= 1 ? octaves.sums[n_oct - 1][j] : 0.0;
            const double s_prev = n_oct >= 2 ? octaves.sums[n_oct - 2][j] : 0.0;
            const double s_prev2 = n_oct >= 3 ? octaves.sums[n_oct - 3][j] : 0.0;
            auto [tl, te] = extrapolate_tail(s_prev2, s_prev, s_last);
            tails[j] = tl;
            tail_errs[j] = te;
            if (te > tol_x[j] / 3.0) tail_ok = false;
        }
        if (tail_ok || refine == cfg.max_refinements) {
            for (size_t j = 0; j < nx; ++j) {
                res.integral[j] += tails[j];
                res.error[j] += tail_errs[j];
            }
            if (!tail_ok) {
                double worst_total = 0.0;
                for (size_t j = 0; j < nx; ++j)
                    worst_total = std::max(worst_total, res.error[j]);
                throw NumericError("spectral band integral: tolerance not met", res.integral[0],
                                   worst_total);
            }
            return res;
        }
        process_range(k_cap, 2.0 * k_cap, octave_budget(oct + refine),
                      std::max(1e-3, k_cap / 512.0));
        k_cap *= 2.0;
    }
    return res;  // unreachable
}

std::vector<PolyBasis> poly_family(const DiffusionParams& p, const Spectrum& s) {
    std::vector<PolyBasis> fam;
    for (size_t n = 0; n < s.eigenvalues.size(); ++n) fam.push_back(poly_basis(p, int(n)));
    return fam;
}

}  // namespace

TimeWeight TimeWeight::make(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw DomainError("TimeWeight: alpha must be in (0,1]");
    TimeWeight w;
    w.alpha = alpha;
    w.mode = (alpha == 1.0) ? Mode::Exp : Mode::ML;
    return w;
}

std::vector<DensityEval> transition_density_grid(const DiffusionParams& p, double alpha,
                                                 const std::vector<double>& xs, double t,
                                                 double x0, const QuadConfig& cfg) {
    if (!(t > 0.0)) throw DomainError("transition_density: t must be > 0");
    if (!(x0 > 0.0)) throw DomainError("transition_density: x0 must be > 0");
    for (double x : xs)
        if (!(x > 0.0)) throw DomainError("transition_density: x must be > 0");
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw DomainError("transition_density_grid: xs must be ascending");

    BandContext ctx(p, alpha);
    const auto polys = poly_family(ctx.p, ctx.spec);
    NodeGeometry geom(ctx, xs, x0);
    // the requested density tolerance maps to a looser raw-band tolerance
    // wherever the stationary density prefactor is small
    std::vector<double> tol_x(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        const double scale = ctx.band_prefactor() * invariant_density(p, xs[i]);
        tol_x[i] = cfg.abs_tol / std::max(scale, 1e-12);
    }
    BandResult band = integrate_band(ctx, geom, t, cfg, tol_x, nullptr);

    std::vector<DensityEval> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        const double m = invariant_density(p, xs[i]);
        double disc = 0.0;
        for (size_t n = 0; n < polys.size(); ++n)
            disc += ctx.time_weight(ctx.spec.eigenvalues[n], t) * polys[n].eval(x0) *
                    polys[n].eval(xs[i]);
        disc *= m;
        const double cont = m * ctx.band_prefactor() * band.integral[i];
        DensityEval& e = out[i];
        e.discrete_part = disc;
        e.continuous_part = cont;
        e.quad_error = m * ctx.band_prefactor() * band.error[i];
        e.n_quad_nodes = band.n_nodes;
        e.value = std::max(0.0, disc + cont);
    }
    return out;
}

DensityEval transition_density(const DiffusionParams& p, double alpha, double x, double t,
                               double x0, const QuadConfig& cfg) {
    return transition_density_grid(p, alpha, {x}, t, x0, cfg)[0];
}

std::vector<std::vector<double>> transition_density_table(const DiffusionParams& p, double alpha,
                                                          double x,
                                                          const std::vector<double>& t_grid,
                                                          const std::vector<double>& y_grid,
                                                          const QuadConfig& cfg) {
    if (t_grid.empty() || y_grid.empty()) throw DomainError("density_table: empty grid");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()) ||
        !std::is_sorted(y_grid.begin(), y_grid.end()))
        throw DomainError("density_table: grids must be ascending");
    if (!(t_grid.front() > 0.0)) throw DomainError("density_table: t must be > 0");

    BandContext ctx(p, alpha);
    const auto polys = poly_family(ctx.p, ctx.spec);
    NodeGeometry geom(ctx, y_grid, x);
    // the table is read as a function of the backward argument y at fixed
    // x, so the error budget carries the single prefactor m(x)
    const double scale = ctx.band_prefactor() * invariant_density(p, x);
    std::vector<double> tol_x(y_grid.size(), cfg.abs_tol / std::max(scale, 1e-12));
    BandCapture cap;
    // build nodes at the smallest t: slowest mode decay, widest band needed
    integrate_band(ctx, geom, t_grid.front(), cfg, tol_x, &cap);

    const size_t ny = y_grid.size();
    const double m = invariant_density(p, x);
    std::vector<std::vector<double>> table(t_grid.size(), std::vector<double>(ny, 0.0));
    std::vector<double> sums(ny), oct_last(ny), oct_prev(ny), oct_prev2(ny);
    for (size_t it = 0; it < t_grid.size(); ++it) {
        const double t = t_grid[it];
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(oct_last.begin(), oct_last.end(), 0.0);
        std::fill(oct_prev.begin(), oct_prev.end(), 0.0);
        std::fill(oct_prev2.begin(), oct_prev2.end(), 0.0);
        double k_hi = 0.0;
        for (double kq : cap.k) k_hi = std::max(k_hi, kq);
        const double oct_edge = std::pow(2.0, std::ceil(std::log2(std::max(k_hi, 2.0))));
        for (size_t n = 0; n < cap.k.size(); ++n) {
            const double tw = ctx.time_weight(lambda_of_k(ctx.p, cap.k[n]), t);
            const double w = cap.wq[n] * tw;
            const auto& geo = cap.geo[n];
            for (size_t j = 0; j < ny; ++j) sums[j] += w * geo[j];
            if (cap.k[n] >= oct_edge / 2.0)
                for (size_t j = 0; j < ny; ++j) oct_last[j] += w * geo[j];
            else if (cap.k[n] >= oct_edge / 4.0)
                for (size_t j = 0; j < ny; ++j) oct_prev[j] += w * geo[j];
            else if (cap.k[n] >= oct_edge / 8.0)
                for (size_t j = 0; j < ny; ++j) oct_prev2[j] += w * geo[j];
        }
        for (size_t j = 0; j < ny; ++j) {
            auto [tail, terr] = extrapolate_tail(oct_prev2[j], oct_prev[j], oct_last[j]);
            (void)terr;
            double disc = 0.0;
            for (size_t n = 0; n < polys.size(); ++n)
                disc += ctx.time_weight(ctx.spec.eigenvalues[n], t) * polys[n].eval(x) *
                        polys[n].eval(y_grid[j]);
            table[it][j] = m * (disc + ctx.band_prefactor() * (sums[j] + tail));
        }
    }
    return table;
}

double continuous_integrand(const DiffusionParams& p, double alpha, double x, double x0, double t,
                            double lambda) {
    BandContext ctx(p, alpha);
    if (!(lambda > ctx.spec.cutoff))
        throw DomainError("continuous_integrand: lambda must exceed the cutoff");
    const double k = k_of_lambda(p, lambda);
    // weight(lambda) = [weight * dlambda/dk] / (2 c k)
    const double lw =
        band_weight_jacobian_log(k, p) - std::log(2.0 * band_scale(p) * k);
    double uu;
    if (ctx.rg) {
        const LogScaled ux = psi_rg_log(x, k, p), u0 = psi_rg_log(x0, k, p);
        uu = ux.sign * u0.sign * std::exp(lw + ux.log_abs + u0.log_abs);
    } else {
        uu = std::exp(lw) * f1_fs(x, lambda, p) * f1_fs(x0, lambda, p);
    }
    return ctx.time_weight(lambda, t) * uu;
}

namespace {

// Composite fixed inner grid for x-inner products: dense Gauss panels over
// the effective support of the stationary law.
struct InnerGrid {
    std::vector<double> x, w;
};

InnerGrid make_inner_grid(const DiffusionParams& p) {
    auto [lo, hi] = support_bounds(p, 1e-13);
    const double mean = p.stationary_mean();
    std::vector<double> cuts{lo, 0.5 * mean, mean, 2.0 * mean, 4.0 * mean, 8.0 * mean};
    cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [&](double c) { return c >= hi; }),
               cuts.end());
    cuts.push_back(hi);
    InnerGrid g;
    const auto& [xs, ws] = gauss_legendre_64();
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (int j = 0; j < 64; ++j) {
            g.x.push_back(c + h * xs[j]);
            g.w.push_back(h * ws[j]);
        }
    }
    return g;
}

// Shared implementation of the two Cauchy-problem solutions.  With
// weight_by_density the inner products are against m(x) dx (backward
// problem); without, against plain dx (Fokker-Planck), and the caller
// multiplies by m(eval point).
double cauchy_solution(const BandContext& ctx, const std::function<double(double)>& data,
                       double t, double eval_point, bool weight_by_density,
                       const QuadConfig& cfg) {
    if (!(t > 0.0)) throw DomainError("cauchy solution: t must be > 0");
    if (!(eval_point > 0.0)) throw DomainError("cauchy solution: evaluation point must be > 0");
    const auto polys = poly_family(ctx.p, ctx.spec);
    InnerGrid grid = make_inner_grid(ctx.p);
    const size_t ng = grid.x.size();
    std::vector<double> fw(ng);  // data(x) * weight at inner nodes
    for (size_t i = 0; i < ng; ++i) {
        const double dens = weight_by_density ? invariant_density(ctx.p, grid.x[i]) : 1.0;
        fw[i] = data(grid.x[i]) * dens * grid.w[i];
    }
    // discrete modes
    double value = 0.0;
    for (size_t n = 0; n < polys.size(); ++n) {
        double ip = 0.0;
        for (size_t i = 0; i < ng; ++i) ip += fw[i] * polys[n].eval(grid.x[i]);
        value += ctx.time_weight(ctx.spec.eigenvalues[n], t) * polys[n].eval(eval_point) * ip;
    }
    // band term: geo(k) = wjac(k) u(eval,k) <data, u(.,k)>
    std::vector<double> xs_eval = grid.x;
    xs_eval.push_back(eval_point);
    std::sort(xs_eval.begin(), xs_eval.end());
    xs_eval.erase(std::unique(xs_eval.begin(), xs_eval.end()), xs_eval.end());
    std::vector<size_t> idx(ng);
    for (size_t i = 0; i < ng; ++i)
        idx[i] = size_t(std::lower_bound(xs_eval.begin(), xs_eval.end(), grid.x[i]) -
                        xs_eval.begin());
    const size_t eval_idx = size_t(
        std::lower_bound(xs_eval.begin(), xs_eval.end(), eval_point) - xs_eval.begin());

    // integrate adaptively in k; the inner product drives the decay
    auto integrand = [&](double k) {
        const double lw = band_weight_jacobian_log(k, ctx.p);
        double ip = 0.0, ueval = 0.0;
        if (ctx.rg) {
            const double w = std::exp(lw);
            for (size_t i = 0; i < ng; ++i) {
                const LogScaled u = psi_rg_log(grid.x[i], k, ctx.p);
                ip += fw[i] * u.value();
            }
            ueval = psi_rg_log(eval_point, k, ctx.p).value();
            return w * ueval * ip;
        }
        const std::vector<double> f1 = f1_fs_grid(xs_eval, k, ctx.p);
        for (size_t i = 0; i < ng; ++i) ip += fw[i] * f1[idx[i]];
        return std::exp(lw) * f1[eval_idx] * ip;
    };
    auto banded = [&](double k) {
        return ctx.time_weight(lambda_of_k(ctx.p, k), t) * integrand(k);
    };
    // the inner product against smooth data decays rapidly in k; adaptive
    // panels with geometric extension
    const double pref = ctx.band_prefactor();
    const double tol_raw = cfg.abs_tol / pref;
    double band = 0.0, err = 0.0;
    double lo = 0.0, width = 1.0;
    double o_last = 0.0, o_prev = 0.0, o_prev2 = 0.0;
    int stall = 0;
    for (int j = 0; j < 12 + cfg.max_refinements; ++j) {
        QuadResult q = integrate_adaptive(banded, lo, lo + width, tol_raw / 16.0, 1e-12, 1200);
        band += q.value;
        err += q.error;
        o_prev2 = o_prev;
        o_prev = o_last;
        o_last = q.value;
        lo += width;
        if (lo >= 2.0) width = lo;  // dyadic extension
        if (std::fabs(o_last) < tol_raw / 8.0 && std::fabs(o_prev) < tol_raw / 8.0 &&
            ++stall >= 2)
            break;
    }
    auto [tail, terr] = extrapolate_tail(o_prev2, o_prev, o_last);
    band += tail;
    err += terr;
    (void)err;
    return value + pref * band;
}

}  // namespace

double backward_solution(const DiffusionParams& p, double alpha,
                         const std::function<double(double)>& g, double t, double y,
                         const QuadConfig& cfg) {
    BandContext ctx(p, alpha);
    return cauchy_solution(ctx, g, t, y, /*weight_by_density=*/true, cfg);
}

double fokker_planck_solution(const DiffusionParams& p, double alpha,
                              const std::function<double(double)>& f, double x, double t,
                              const QuadConfig& cfg) {
    BandContext ctx(p, alpha);
    const double v = cauchy_solution(ctx, f, t, x, /*weight_by_density=*/false, cfg);
    return invariant_density(p, x) * v;
}

CaputoResidual caputo_residual(const DiffusionParams& p, double alpha, double x,
                               const std::vector<double>& t_grid,
                               const std::vector<double>& y_grid, const QuadConfig& cfg) {
    if (t_grid.size() < 4 || y_grid.size() < 5)
        throw DomainError("caputo_residual: grids too small");
    const double dt = t_grid[1] - t_grid[0];
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (std::fabs(t_grid[i] - t_grid[i - 1] - dt) > 1e-9 * dt)
            throw DomainError("caputo_residual: t grid must be uniform");
    const double dy = y_grid[1] - y_grid[0];
    for (size_t i = 1; i < y_grid.size(); ++i)
        if (std::fabs(y_grid[i] - y_grid[i - 1] - dy) > 1e-9 * dy)
            throw DomainError("caputo_residual: y grid must be uniform");
    if (!(t_grid.front() > 0.0)) throw DomainError("caputo_residual: t must start above 0");
    for (double y : y_grid)
        if (std::fabs(y - x) < 1e-9)
            throw DomainError("caputo_residual: y grid must exclude the source point x");

    // extend the t grid back to dt so the memory integral starts at 0;
    // p(x, 0; y) -> 0 for y != x
    const int n0 = int(std::llround(t_grid.front() / dt));
    if (std::fabs(n0 * dt - t_grid.front()) > 1e-9 * dt)
        throw DomainError("caputo_residual: t grid must be commensurate with its start");
    std::vector<double> ladder;
    for (int j = 1; j <= n0 - 1; ++j) ladder.push_back(j * dt);
    for (double t : t_grid) ladder.push_back(t);

    const auto table = transition_density_table(p, alpha, x, ladder, y_grid, cfg);
    const size_t ny = y_grid.size();
    const size_t nt = ladder.size();

    // Caputo L1 (alpha<1) or central differences (alpha=1) in t at the
    // requested grid points, generator by central differences in y.
    auto caputo_l1 = [&](size_t j, size_t n) {  // at ladder index n (t = (n+1) dt)
        // sum over increments from t=0 with p(0) = 0
        double acc = 0.0;
        for (size_t i = 0; i <= n; ++i) {
            const double p_hi = table[n - i][j];
            const double p_lo = (n - i == 0) ? 0.0 : table[n - i - 1][j];
            const double b = std::pow(double(i + 1), 1.0 - alpha) -
                             std::pow(double(i), 1.0 - alpha);
            acc += b * (p_hi - p_lo);
        }
        return acc / (std::tgamma(2.0 - alpha) * std::pow(dt, alpha));
    };

    CaputoResidual out;
    double max_resid = 0.0, max_gp = 0.0;
    const size_t first_checked = size_t(n0 - 1);
    for (size_t n = first_checked; n < nt; ++n) {
        const bool interior_t = (alpha == 1.0) ? (n > 0 && n + 1 < nt) : true;
        if (!interior_t) continue;
        for (size_t j = 2; j + 2 < ny; ++j) {
            const double d1 = (table[n][j + 1] - table[n][j - 1]) / (2.0 * dy);
            const double d2 =
                (table[n][j + 1] - 2.0 * table[n][j] + table[n][j - 1]) / (dy * dy);
            const double gp =
                drift(p, y_grid[j]) * d1 + 0.5 * diffusion_sq(p, y_grid[j]) * d2;
            double dta;
            if (alpha == 1.0) {
                dta = (table[n + 1][j] - table[n - 1][j]) / (2.0 * dt);
            } else {
                dta = caputo_l1(j, n);
            }
            max_resid = std::max(max_resid, std::fabs(dta - gp));
            max_gp = std::max(max_gp, std::fabs(gp));
        }
    }
    out.residual = max_resid;
    // crude scheme-error gauge: quadratic y-stencil on a quartic scale
    const double disc_est = 1e-3 * max_gp;
    out.inconclusive = disc_est > max_resid;
    return out;
}

}  // namespace fpd
