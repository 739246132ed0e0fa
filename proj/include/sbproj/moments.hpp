#pragma once

#include <cstddef>

#include "sbproj/core.hpp"

namespace sbproj {

// The five fixed-sparsity fourth-moment coefficients, each stored already
// divided by C(d, c). Binomials whose lower index falls below zero contribute
// exactly 0, so all five are finite for any valid (d, c).
struct FixedVarianceCoeffs {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
  double lambda = 0.0;
};

/// Expected inflation of the uncentered Bernoulli distance estimate:
/// (p/(1-p)) * (1 . (u - v))^2.
double naive_bias(const Vector& u, const Vector& v, double p);

/// E eta_i^4 of the unscaled centered Bernoulli coordinate:
/// p(1-p)(1-6p+6p^2) ||x||_4^4 + 3 p^2 (1-p)^2 ||x||^4.
double fourth_moment_bernoulli(const Vector& x, double p);

/// Var ||eta_B||^2 = (1/m)[1/(p(1-p)) - 6] ||x||_4^4 + (2/m) ||x||^4.
double var_bernoulli(const Vector& x, std::size_t m, double p);

/// Var ||eta_G||^2 = (2/m) ||x||^4.
double var_gaussian(const Vector& x, std::size_t m);

/// Coefficient ratios alpha..lambda over C(d, c), computed as products of at
/// most four rational factors (no factorials, no overflow for large d).
FixedVarianceCoeffs fixed_coeffs(std::size_t d, std::size_t c);

/// Var ||eta_F||^2 via the closed-form coefficient expansion. Exposed for all
/// 1 <= c <= d/2; exactness at small c is established by the exhaustive
/// oracle rather than assumed.
double var_fixed(const Vector& x, std::size_t m, std::size_t d, std::size_t c);

/// E eta_i^2 of the unscaled centered fixed-sparsity coordinate:
/// c(d-c)/(d(d-1)) * ||x||^2.
double expected_sq_norm_fixed_unscaled(const Vector& x, std::size_t d, std::size_t c);

/// Fourth-moment bound E eta_i^4 <= (5c/d) ||x||^4; the derivation requires
/// c >= 5, so smaller c is rejected.
double fourth_moment_bound_fixed(const Vector& x, std::size_t d, std::size_t c);

}  // namespace sbproj
