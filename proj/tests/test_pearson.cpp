#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fpd/pearson.hpp"
#include "fpd/quadrature.hpp"
#include "oracles.hpp"

using fpd::DiffusionKind;
using fpd::DiffusionParams;

namespace {
const DiffusionParams kRg{DiffusionKind::ReciprocalGamma, 1.0, 5.0, 2.0};
const DiffusionParams kFs{DiffusionKind::FisherSnedecor, 1.0, 6.0, 3.0};
const DiffusionParams kRgWide{DiffusionKind::ReciprocalGamma, 1.0, 9.0, 3.0};
const DiffusionParams kFsWide{DiffusionKind::FisherSnedecor, 1.0, 10.0, 6.0};
}  // namespace

TEST_CASE("invariant density: normalization and moments") {
    for (const auto& p : {kRg, kFs, kRgWide, kFsWide}) {
        const double mass = fpd::integrate_against_density(p, [](double) { return 1.0; }, 1e-10);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
        const double mean = fpd::integrate_against_density(p, [](double x) { return x; }, 1e-10);
        CHECK(mean == doctest::Approx(fpd::invariant_mean(p)).epsilon(1e-7));
    }
    // stated means
    DiffusionParams rg32 = kRg;
    rg32.beta = 3.0;
    rg32.gamma = 2.0;
    CHECK(fpd::invariant_mean(rg32) == doctest::Approx(1.0));
    CHECK(fpd::invariant_mean(kFs) == doctest::Approx(1.5));
    CHECK_THROWS_AS((void)fpd::invariant_density(kRg, -1.0), fpd::DomainError);
    CHECK_THROWS_AS((void)fpd::invariant_density(kRg, 0.0), fpd::DomainError);
}

TEST_CASE("invariant variance against quadrature") {
    for (const auto& p : {kRg, kFsWide}) {
        const double mean = fpd::invariant_mean(p);
        const double var = fpd::integrate_against_density(
            p, [&](double x) { return (x - mean) * (x - mean); }, 1e-10);
        CHECK(var == doctest::Approx(fpd::invariant_variance(p)).epsilon(1e-6));
    }
}

TEST_CASE("drift and squared diffusion") {
    CHECK(fpd::drift(kRg, fpd::invariant_mean(kRg)) == doctest::Approx(0.0));
    CHECK(fpd::drift(kFs, fpd::invariant_mean(kFs)) == doctest::Approx(0.0));
    CHECK(fpd::diffusion_sq(kRg, 1.0) == doctest::Approx(0.5));        // 2*1/4
    CHECK(fpd::diffusion_sq(kFs, 1.0) == doctest::Approx(3.0));        // 4*1*9/(3*4)
    for (double y : {0.01, 0.5, 3.0, 100.0}) {
        CHECK(fpd::diffusion_sq(kRg, y) > 0.0);
        CHECK(fpd::diffusion_sq(kFs, y) > 0.0);
    }
    CHECK_THROWS_AS((void)fpd::drift(kRg, 0.0), fpd::DomainError);
    CHECK_THROWS_AS((void)fpd::diffusion_sq(kFs, -0.5), fpd::DomainError);
}

TEST_CASE("spectrum: canonical configurations") {
    const auto s_rg = fpd::spectrum(kRg);
    REQUIRE(s_rg.eigenvalues.size() == 3);
    CHECK(s_rg.eigenvalues[0] == 0.0);
    CHECK(s_rg.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(s_rg.eigenvalues[2] == doctest::Approx(1.5));
    CHECK(s_rg.cutoff == doctest::Approx(1.5625));

    const auto s_fs = fpd::spectrum(kFs);
    REQUIRE(s_fs.eigenvalues.size() == 2);
    CHECK(s_fs.eigenvalues[0] == 0.0);
    CHECK(s_fs.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(s_fs.cutoff == doctest::Approx(1.125));

    // monotone, strictly below cutoff
    for (const auto& p : {kRg, kFs, kRgWide, kFsWide}) {
        const auto s = fpd::spectrum(p);
        for (size_t i = 1; i < s.eigenvalues.size(); ++i) {
            CHECK(s.eigenvalues[i] > s.eigenvalues[i - 1]);
            CHECK(s.eigenvalues[i] < s.cutoff);
        }
    }
}

TEST_CASE("spectrum: boundary index dropped when it reaches the cutoff") {
    // beta an even integer puts lambda_{beta/2} exactly on the band edge
    DiffusionParams p = kRg;
    p.beta = 4.0;
    const auto s = fpd::spectrum(p);
    CHECK(s.n_max == 1);  // n = 2 would sit at the cutoff
    CHECK(s.eigenvalues.size() == 2);
    DiffusionParams q = kFs;
    q.beta = 8.0;
    const auto s2 = fpd::spectrum(q);
    CHECK(s2.n_max == 1);  // n = 2 would sit at the cutoff
}

TEST_CASE("poly_basis: n=0 is the constant 1") {
    for (const auto& p : {kRg, kFs}) {
        const auto b = fpd::poly_basis(p, 0);
        CHECK(b.degree == 0);
        CHECK(b.eval(0.7) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("poly_basis: orthonormality under the stationary law") {
    for (const auto& p : {kRg, kFs, kRgWide, kFsWide}) {
        const auto s = fpd::spectrum(p);
        std::vector<fpd::PolyBasis> polys;
        for (int n = 0; n <= s.n_max; ++n) polys.push_back(fpd::poly_basis(p, n));
        for (int n = 0; n <= s.n_max; ++n) {
            for (int m = 0; m <= n; ++m) {
                const double ip = fpd::integrate_against_density(
                    p, [&](double x) { return polys[n].eval(x) * polys[m].eval(x); }, 1e-11);
                CHECK(ip == doctest::Approx(n == m ? 1.0 : 0.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("poly_basis: generator eigen-residual") {
    for (const auto& p : {kRg, kFs, kRgWide, kFsWide}) {
        const auto s = fpd::spectrum(p);
        for (int n = 0; n <= s.n_max; ++n) {
            const auto b = fpd::poly_basis(p, n);
            auto f = [&](double x) { return b.eval(x); };
            const double lam = s.eigenvalues[size_t(n)];
            for (double y : {0.4, 0.9, 1.7, 3.1}) {
                const double g = fpd::generator_apply_fd(p, f, y, 2e-4);
                CHECK(std::fabs(g + lam * b.eval(y)) <
                      1e-6 * (1.0 + std::fabs(lam * b.eval(y))));
            }
        }
    }
}

TEST_CASE("poly_basis: out-of-range index") {
    CHECK_THROWS_AS((void)fpd::poly_basis(kRg, 3), fpd::DomainError);
    CHECK_THROWS_AS((void)fpd::poly_basis(kRg, -1), fpd::DomainError);
}

TEST_CASE("generator_apply_fd: basics") {
    auto c = [](double) { return 3.5; };
    CHECK(fpd::generator_apply_fd(kRg, c, 1.0, 1e-4) == doctest::Approx(0.0).epsilon(1e-9));
    // f(x) = x gives the drift back
    auto id = [](double x) { return x; };
    for (double y : {0.5, 1.0, 2.0}) {
        CHECK(fpd::generator_apply_fd(kRg, id, y, 1e-4) ==
              doctest::Approx(fpd::drift(kRg, y)).epsilon(1e-6));
    }
    CHECK_THROWS_AS((void)fpd::generator_apply_fd(kRg, id, 1e-5, 1e-4), fpd::DomainError);
}

TEST_CASE("pearson relation: d log m / dx equals reconstructed coefficient ratio") {
    // m'(x)/m(x) = (2 mu(x) - (sigma^2)'(x)) / sigma^2(x): checked by
    // finite differences at interior points
    for (const auto& p : {kRg, kFs}) {
        for (int i = 1; i <= 100; ++i) {
            const double x = 0.3 + 0.05 * i;
            const double h = 1e-5;
            const double dlogm = (fpd::log_invariant_density(p, x + h) -
                                  fpd::log_invariant_density(p, x - h)) /
                                 (2.0 * h);
            const double ds2 =
                (fpd::diffusion_sq(p, x + h) - fpd::diffusion_sq(p, x - h)) / (2.0 * h);
            const double expected =
                (2.0 * fpd::drift(p, x) - ds2) / fpd::diffusion_sq(p, x);
            CHECK(dlogm == doctest::Approx(expected).epsilon(1e-6));
        }
    }
}

TEST_CASE("support bounds enclose the requested mass") {
    for (const auto& p : {kRg, kFs, kFsWide}) {
        auto [lo, hi] = fpd::support_bounds(p, 1e-10);
        CHECK(lo > 0.0);
        CHECK(hi > lo);
        const double mass = fpd::integrate_adaptive(
                                [&](double x) { return fpd::invariant_density(p, x); }, lo,
                                fpd::invariant_mean(p), 1e-12, 1e-12)
                                .value +
                            fpd::integrate_adaptive(
                                [&](double x) { return fpd::invariant_density(p, x); },
                                fpd::invariant_mean(p), hi, 1e-12, 1e-12)
                                .value;
        CHECK(mass > 1.0 - 1e-9);
        CHECK(mass < 1.0 + 1e-9);
    }
}

TEST_CASE("params validation") {
    DiffusionParams bad = kRg;
    bad.beta = 0.5;
    CHECK_THROWS_AS(bad.validate(), fpd::DomainError);
    bad = kFs;
    bad.beta = 1.5;
    CHECK_THROWS_AS(bad.validate(), fpd::DomainError);
    bad = kFs;
    bad.gamma = 1.0;  // fine for the diffusion itself
    CHECK_NOTHROW(bad.validate());
    CHECK_THROWS_AS(bad.validate_for_spectral(), fpd::DomainError);
    bad.gamma = 6.0;  // on the excluded lattice 2(m+1)
    CHECK_THROWS_AS(bad.validate_for_spectral(), fpd::DegenerateParameterError);
    bad.gamma = 6.0 + 1e-6;  // just off the lattice: allowed
    CHECK_NOTHROW(bad.validate_for_spectral());
}
