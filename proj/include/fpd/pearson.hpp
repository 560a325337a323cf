#pragma once

#include <functional>
#include <vector>

#include "fpd/params.hpp"

namespace fpd {

/// Discrete part of the spectrum of the negative generator: the finite
/// eigenvalue ladder below the continuous band.
struct Spectrum {
    double cutoff = 0.0;              // band edge Lambda
    std::vector<double> eigenvalues;  // lambda_0 = 0 < lambda_1 < ... < cutoff
    int n_max = 0;                    // largest retained polynomial index
};

/// Normalized polynomial eigenfunction in monomial form.
struct PolyBasis {
    int degree = 0;
    std::vector<double> coeffs;  // ascending powers, already scaled by norm_const
    double norm_const = 0.0;     // K_n

    double eval(double x) const {
        double v = 0.0;
        for (int i = int(coeffs.size()) - 1; i >= 0; --i) v = v * x + coeffs[i];
        return v;
    }
};

/// Stationary density m(x) on (0, inf).
double invariant_density(const DiffusionParams& p, double x);
double log_invariant_density(const DiffusionParams& p, double x);

/// SDE coefficients: drift mu(y) = -theta (y - mean), squared diffusion
/// sigma^2(y) (2 theta y^2/(beta-1) for RG, 4 theta y (gamma y + beta) /
/// (gamma (beta-2)) for FS).
double drift(const DiffusionParams& p, double y);
double diffusion_sq(const DiffusionParams& p, double y);

/// Central-difference application of the generator
/// G f(y) = mu(y) f'(y) + sigma^2(y) f''(y) / 2, O(h^2).
double generator_apply_fd(const DiffusionParams& p, const std::function<double(double)>& f,
                          double y, double h);

Spectrum spectrum(const DiffusionParams& p);

/// n-th normalized orthogonal polynomial (Bessel for RG, FS family for FS)
/// by symbolic expansion of the Rodrigues formula.
PolyBasis poly_basis(const DiffusionParams& p, int n);

/// Analytic moments of the stationary law.
double invariant_mean(const DiffusionParams& p);
double invariant_variance(const DiffusionParams& p);  // requires beta > 2 (RG) / beta > 4 (FS)

/// Interval [lo, hi] outside which the stationary mass is below tail_mass
/// (analytic tail bounds; used to truncate quadratures soundly).
std::pair<double, double> support_bounds(const DiffusionParams& p, double tail_mass = 1e-12);

/// Adaptive quadrature of f against the stationary density over the
/// effective support.
double integrate_against_density(const DiffusionParams& p, const std::function<double(double)>& f,
                                 double abs_tol = 1e-10);

}  // namespace fpd
