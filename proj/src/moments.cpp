#include "sbproj/moments.hpp"

#include <cstddef>
#include <string>

#include "sbproj/error.hpp"

namespace sbproj {

namespace {

void check_p_half(double p, const char* who) {
  if (!(p > 0.0 && p <= 0.5)) throw ConfigError(std::string(who) + ": p must be in (0, 1/2]");
}

void check_dc(std::size_t d, std::size_t c, const char* who) {
  if (d < 2 || c < 1 || 2 * c > d)
    throw ConfigError(std::string(who) + ": c must satisfy 1 <= c <= d/2 with d >= 2");
}

// C(d-k, c-k) / C(d, c) as a product of k rational factors (c-i)/(d-i);
// exactly zero once the numerator hits zero, which is the out-of-range
// binomial case c < k.
double binom_ratio(std::size_t d, std::size_t c, unsigned k) {
  double ratio = 1.0;
  for (unsigned i = 0; i < k; ++i) {
    const double num = static_cast<double>(c) - i;
    if (num <= 0.0) return 0.0;
    ratio *= num / (static_cast<double>(d) - i);
  }
  return ratio;
}

}  // namespace

double naive_bias(const Vector& u, const Vector& v, double p) {
  if (u.size() != v.size()) throw ConfigError("naive_bias: dimension mismatch");
  check_p_half(p, "naive_bias");
  double diff_sum = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) diff_sum += u[k] - v[k];
  return p / (1.0 - p) * diff_sum * diff_sum;
}

double fourth_moment_bernoulli(const Vector& x, double p) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("fourth_moment_bernoulli: p must be in (0, 1)");
  const NormProfile profile = norm_profile(x);
  const double pq = p * (1.0 - p);
  return pq * (1.0 - 6.0 * p + 6.0 * p * p) * profile.norm4_4 +
         3.0 * pq * pq * profile.sq_norm * profile.sq_norm;
}

double var_bernoulli(const Vector& x, std::size_t m, double p) {
  check_p_half(p, "var_bernoulli");
  if (m < 1) throw ConfigError("var_bernoulli: m must be >= 1");
  const NormProfile profile = norm_profile(x);
  const double mm = static_cast<double>(m);
  return (1.0 / (p * (1.0 - p)) - 6.0) * profile.norm4_4 / mm +
         2.0 * profile.sq_norm * profile.sq_norm / mm;
}

double var_gaussian(const Vector& x, std::size_t m) {
  if (m < 1) throw ConfigError("var_gaussian: m must be >= 1");
  const NormProfile profile = norm_profile(x);
  return 2.0 * profile.sq_norm * profile.sq_norm / static_cast<double>(m);
}

FixedVarianceCoeffs fixed_coeffs(std::size_t d, std::size_t c) {
  check_dc(d, c, "fixed_coeffs");
  const double r1 = binom_ratio(d, c, 1);
  const double r2 = binom_ratio(d, c, 2);
  const double r3 = binom_ratio(d, c, 3);
  const double r4 = binom_ratio(d, c, 4);

  FixedVarianceCoeffs coeffs;
  coeffs.alpha = 3.0 * r2 - 6.0 * r3 + 3.0 * r4;
  coeffs.beta = r1 - 7.0 * r2 + 12.0 * r3 - 6.0 * r4;
  coeffs.gamma = r4;
  coeffs.theta = 4.0 * r2 - 12.0 * r3 + 8.0 * r4;
  coeffs.lambda = 6.0 * r3 - 6.0 * r4;
  return coeffs;
}

double var_fixed(const Vector& x, std::size_t m, std::size_t d, std::size_t c) {
  check_dc(d, c, "var_fixed");
  if (m < 1) throw ConfigError("var_fixed: m must be >= 1");
  if (x.size() != d) throw ConfigError("var_fixed: x must have dimension d");

  const FixedVarianceCoeffs coeffs = fixed_coeffs(d, c);
  const CenteredVector centered = center_fixed(x, c);
  const NormProfile y = norm_profile(centered.y);
  const NormProfile nx = norm_profile(x);

  const double sy = centered.s_y;
  const double sy2 = sy * sy;
  const double y2 = y.sq_norm;
  const double fourth = coeffs.alpha * y2 * y2 + coeffs.beta * y.norm4_4 +
                        coeffs.gamma * sy2 * sy2 + coeffs.theta * y.norm3_cubed * sy +
                        coeffs.lambda * y2 * sy2;

  const double dd = static_cast<double>(d);
  const double cc = static_cast<double>(c);
  const double mm = static_cast<double>(m);
  const double prefactor =
      dd * dd * (dd - 1.0) * (dd - 1.0) / (mm * cc * cc * (dd - cc) * (dd - cc));
  return prefactor * fourth - nx.sq_norm * nx.sq_norm / mm;
}

double expected_sq_norm_fixed_unscaled(const Vector& x, std::size_t d, std::size_t c) {
  check_dc(d, c, "expected_sq_norm_fixed_unscaled");
  if (x.size() != d) throw ConfigError("expected_sq_norm_fixed_unscaled: x must have dimension d");
  const double dd = static_cast<double>(d);
  const double cc = static_cast<double>(c);
  return cc * (dd - cc) / (dd * (dd - 1.0)) * norm_profile(x).sq_norm;
}

double fourth_moment_bound_fixed(const Vector& x, std::size_t d, std::size_t c) {
  if (c < 5) throw ConfigError("fourth_moment_bound_fixed: the bound requires c >= 5");
  check_dc(d, c, "fourth_moment_bound_fixed");
  if (x.size() != d) throw ConfigError("fourth_moment_bound_fixed: x must have dimension d");
  const double sq = norm_profile(x).sq_norm;
  return 5.0 * static_cast<double>(c) / static_cast<double>(d) * sq * sq;
}

}  // namespace sbproj
