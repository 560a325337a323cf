#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fpd/analysis.hpp"
#include "fpd/mittag_leffler.hpp"
#include "fpd/quadrature.hpp"
#include "fpd/spectral.hpp"
#include "oracles.hpp"

using fpd::DiffusionKind;
using fpd::DiffusionParams;
using fpd::QuadConfig;

namespace {
const DiffusionParams kRg{DiffusionKind::ReciprocalGamma, 1.0, 5.0, 2.0};
const DiffusionParams kFs{DiffusionKind::FisherSnedecor, 1.0, 6.0, 3.0};

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1.0));
    return xs;
}

double grid_mass(const DiffusionParams& p, double alpha, double t, double x0, double tol) {
    const auto xs = log_grid(0.02, 80.0, 220);
    QuadConfig cfg;
    cfg.abs_tol = tol;
    const auto evals = fpd::transition_density_grid(p, alpha, xs, t, x0, cfg);
    std::vector<double> vals(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) vals[i] = evals[i].value;
    return oracle::trapezoid(xs, vals);
}
}  // namespace

TEST_CASE("transition density: fixed-point cross-implementation references") {
    // independent 22-digit evaluation of the same spectral formulas
    const auto rg = fpd::transition_density(kRg, 1.0, 1.0, 1.0, 1.0);
    CHECK(rg.value == doctest::Approx(0.4069602448139).epsilon(2e-6));
    const auto fs = fpd::transition_density(kFs, 1.0, 1.0, 1.0, 1.0);
    CHECK(fs.value == doctest::Approx(0.384096737053652).epsilon(2e-6));
    CHECK(rg.value == doctest::Approx(rg.discrete_part + rg.continuous_part));
    CHECK(rg.quad_error < 1e-6);
    CHECK(rg.n_quad_nodes > 100);
}

TEST_CASE("transition density: normalization across alpha and kinds") {
    for (const auto& p : {kRg, kFs}) {
        for (double alpha : {1.0, 0.7}) {
            const double mass = grid_mass(p, alpha, 1.0, 1.0, 1e-6);
            CHECK(mass == doctest::Approx(1.0).epsilon(2e-3));
        }
    }
}

TEST_CASE("transition density: long-time limit is the stationary density (alpha=1)") {
    for (const auto& p : {kRg, kFs}) {
        for (double x : {0.5, 1.0, 2.5}) {
            const auto e = fpd::transition_density(p, 1.0, x, 50.0, 2.0);
            CHECK(e.value == doctest::Approx(fpd::invariant_density(p, x)).epsilon(1e-2));
        }
    }
}

TEST_CASE("transition density: domain errors") {
    CHECK_THROWS_AS((void)fpd::transition_density(kRg, 1.0, 1.0, -1.0, 1.0), fpd::DomainError);
    CHECK_THROWS_AS((void)fpd::transition_density(kRg, 1.0, -1.0, 1.0, 1.0), fpd::DomainError);
    CHECK_THROWS_AS((void)fpd::transition_density(kRg, 1.3, 1.0, 1.0, 1.0), fpd::DomainError);
    DiffusionParams bad = kFs;
    bad.gamma = 4.0;  // excluded lattice point
    CHECK_THROWS_AS((void)fpd::transition_density(bad, 1.0, 1.0, 1.0, 1.0),
                    fpd::DegenerateParameterError);
}

TEST_CASE("continuous integrand: symmetry and decay order") {
    for (const auto& p : {kRg, kFs}) {
        const auto spec = fpd::spectrum(p);
        const double lam = 3.0 * spec.cutoff;
        const double h_xy = fpd::continuous_integrand(p, 0.7, 0.8, 2.0, 1.0, lam);
        const double h_yx = fpd::continuous_integrand(p, 0.7, 2.0, 0.8, 1.0, lam);
        CHECK(h_xy == doctest::Approx(h_yx).epsilon(1e-10));
        // octave-averaged |h| decays at least like lambda^{-1.4} over
        // lambda in [10 L, 1000 L]
        auto octave_mean = [&](double lam_lo) {
            double s = 0.0;
            const int n = 160;
            for (int i = 0; i < n; ++i) {
                const double u = lam_lo * (1.0 + double(i) / n);
                s += std::fabs(fpd::continuous_integrand(p, 0.7, 1.0, 1.0, 1.0, u));
            }
            return s / n;
        };
        const double m10 = octave_mean(10.0 * spec.cutoff);
        const double m1000 = octave_mean(1000.0 * spec.cutoff);
        const double slope = std::log(m1000 / m10) / std::log(100.0);
        CHECK(slope <= -1.4);
        CHECK_THROWS_AS(
            (void)fpd::continuous_integrand(p, 0.7, 1.0, 1.0, 1.0, 0.5 * spec.cutoff),
            fpd::DomainError);
    }
}

TEST_CASE("transition density grid matches scalar evaluations") {
    const std::vector<double> xs{0.4, 1.0, 2.2, 6.0};
    for (const auto& p : {kRg, kFs}) {
        const auto grid = fpd::transition_density_grid(p, 0.7, xs, 1.0, 1.0);
        for (size_t i = 0; i < xs.size(); ++i) {
            const auto one = fpd::transition_density(p, 0.7, xs[i], 1.0, 1.0);
            CHECK(grid[i].value ==
                  doctest::Approx(one.value).epsilon(1e-7).scale(1.0));
        }
    }
}

TEST_CASE("density table consistent with direct evaluation") {
    const std::vector<double> ts{0.25, 0.5, 0.75, 1.0};
    const std::vector<double> ys{0.6, 0.9, 1.3, 1.8};
    for (const auto& p : {kRg, kFs}) {
        const auto table = fpd::transition_density_table(p, 0.7, 1.05, ts, ys);
        for (size_t it : {size_t(0), size_t(3)}) {
            for (size_t j : {size_t(0), size_t(2)}) {
                const auto direct = fpd::transition_density(p, 0.7, 1.05, ts[it], ys[j]);
                CHECK(table[it][j] == doctest::Approx(direct.discrete_part +
                                                      direct.continuous_part)
                                          .epsilon(2e-4));
            }
        }
    }
}

TEST_CASE("backward solution: conservation, single mode, initial recovery") {
    for (const auto& p : {kRg, kFs}) {
        // g == 1 is invariant
        for (double t : {0.3, 2.0}) {
            const double q = fpd::backward_solution(p, 0.7, [](double) { return 1.0; }, t, 1.2);
            CHECK(q == doctest::Approx(1.0).epsilon(1e-4));
        }
        // g = P1: single-mode exactness
        const auto spec = fpd::spectrum(p);
        const auto p1 = fpd::poly_basis(p, 1);
        const double t = 0.8, y = 1.4;
        const double q = fpd::backward_solution(
            p, 0.7, [&](double x) { return p1.eval(x); }, t, y);
        const double expect =
            fpd::mittag_leffler(0.7, spec.eigenvalues[1] * std::pow(t, 0.7)) * p1.eval(y);
        CHECK(q == doctest::Approx(expect).epsilon(1e-5).scale(1.0));
        // t -> 0 recovers g for smooth g
        auto g = [](double x) { return std::exp(-0.5 * (x - 1.5) * (x - 1.5)); };
        const double q0 = fpd::backward_solution(p, 0.7, g, 1e-3, 1.1);
        CHECK(q0 == doctest::Approx(g(1.1)).epsilon(1e-2));
    }
}

TEST_CASE("fokker-planck solution: stationary initial density is a fixed point") {
    for (const auto& p : {kRg, kFs}) {
        auto f = [&](double y) { return fpd::invariant_density(p, y); };
        for (double x : {0.7, 1.5}) {
            const double q = fpd::fokker_planck_solution(p, 0.7, f, x, 0.9);
            CHECK(q == doctest::Approx(fpd::invariant_density(p, x)).epsilon(2e-4));
        }
    }
}

TEST_CASE("fokker-planck solution: mass conservation and initial recovery") {
    const auto& p = kRg;
    // a C^2 bump supported inside (0.6, 2.6)
    auto bump = [](double y) {
        const double a = 0.6, b = 2.6;
        if (y <= a || y >= b) return 0.0;
        const double u = (2.0 * y - a - b) / (b - a);
        const double w = 1.0 - u * u;
        return w * w * w * 15.0 / 16.0 / ((b - a) / 2.0) * 0.9375 / 0.9375;
    };
    // normalize numerically
    const double z = fpd::integrate_adaptive(bump, 0.6, 2.6, 1e-12, 1e-12).value;
    auto f = [&](double y) { return bump(y) / z; };
    const double t = 0.5;
    const auto xs = log_grid(0.05, 50.0, 120);
    std::vector<double> q(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        q[i] = fpd::fokker_planck_solution(p, 0.7, f, xs[i], t, QuadConfig{1e-6, 8.0, 14});
    CHECK(oracle::trapezoid(xs, q) == doctest::Approx(1.0).epsilon(1e-3));
    // t -> 0: recovery of f in L1
    std::vector<double> q0(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        q0[i] = fpd::fokker_planck_solution(p, 0.7, f, xs[i], 1e-3, QuadConfig{1e-6, 8.0, 14});
    double l1 = 0.0;
    for (size_t i = 1; i < xs.size(); ++i)
        l1 += 0.5 * (std::fabs(q0[i] - f(xs[i])) + std::fabs(q0[i - 1] - f(xs[i - 1]))) *
              (xs[i] - xs[i - 1]);
    CHECK(l1 < 0.05);
}

TEST_CASE("chapman-kolmogorov holds at alpha=1 and fails at alpha=0.6") {
    const auto& p = kRg;
    const double x = 1.3, y = 0.9, t = 0.6, s = 0.8;
    const auto zs = log_grid(0.05, 60.0, 200);
    QuadConfig cfg;
    cfg.abs_tol = 1e-7;
    auto resid = [&](double alpha) {
        // integral over z of p(x,t;z) p(z,s;y) vs p(x,t+s;y)
        const auto left = fpd::transition_density_grid(p, alpha, zs, s, y, cfg);
        std::vector<double> vals(zs.size());
        for (size_t i = 0; i < zs.size(); ++i) {
            const auto e = fpd::transition_density(p, alpha, x, t, zs[i], cfg);
            vals[i] = (e.discrete_part + e.continuous_part) *
                      (left[i].discrete_part + left[i].continuous_part);
        }
        const double ck = oracle::trapezoid(zs, vals);
        const auto direct = fpd::transition_density(p, alpha, x, t + s, y, cfg);
        return std::fabs(ck - (direct.discrete_part + direct.continuous_part));
    };
    const double r1 = resid(1.0);
    CHECK(r1 < 1e-3);
    const double r06 = resid(0.6);
    CHECK(r06 > 10.0 * r1);
}

TEST_CASE("caputo residual: classical limit and fractional self-consistency") {
    const auto& p = kRg;
    std::vector<double> ts, ys;
    for (int i = 0; i < 40; ++i) ts.push_back(0.4 + 0.02 * i);
    for (int i = 0; i < 40; ++i) ys.push_back(0.5 + 0.05 * i);
    QuadConfig cfg;
    cfg.abs_tol = 1e-7;
    const auto r1 = fpd::caputo_residual(p, 1.0, 1.0 + 0.013, ts, ys, cfg);
    CHECK(!r1.inconclusive);
    CHECK(r1.residual < 5e-3);
    const auto r07 = fpd::caputo_residual(p, 0.7, 1.0 + 0.013, ts, ys, cfg);
    CHECK(r07.residual < 2e-2);
}

TEST_CASE("stationary gap: monotone decay and exponential rate at alpha=1") {
    const auto& p = kRg;
    const double g5 = fpd::stationary_gap(p, 0.7, 1.0, 2.0, 5.0);
    const double g40 = fpd::stationary_gap(p, 0.7, 1.0, 2.0, 40.0);
    CHECK(g40 < g5);
    // alpha=1: log-gap slope ~ -lambda_1
    const auto spec = fpd::spectrum(p);
    const double t1 = 3.0, t2 = 5.0;
    const double s1 = fpd::stationary_gap(p, 1.0, 1.0, 2.0, t1);
    const double s2 = fpd::stationary_gap(p, 1.0, 1.0, 2.0, t2);
    const double rate = -std::log(s2 / s1) / (t2 - t1);
    CHECK(rate == doctest::Approx(spec.eigenvalues[1]).epsilon(0.1));
}
