#pragma once

#include <cstddef>

namespace sbproj {

// Inputs to the Bennett upper-tail evaluator: second-moment budget w
// (>= sum E Z_i^2), almost-sure bound b on each Z_i, deviation t.
struct TailBoundQuery {
  double w = 0.0;
  double b = 0.0;
  double t = 0.0;

  void validate() const;  // throws ConfigError
};

/// h(a) = (1+a) log(1+a) - a, the Bennett exponent function; nonnegative and
/// convex on a >= 0.
double bennett_h(double a);

/// Upper tail exp(-(w/b^2) h(bt/w)). Values above 1 are returned as-is; a
/// vacuous bound is a legal output.
double bennett_upper_tail(const TailBoundQuery& query);

/// Sub-Gaussian lower tail for nonnegative summands, exp(-t^2 / (2w)).
double lower_tail(double w, double t);

/// Two-sided Bernoulli deviation bound 2 exp(-eps^2 m p^2 / (8(1-p))).
/// Only proven for 0 < eps <= 8/(d p); outside that range the call is a hard
/// error, not a clamp.
double bernoulli_two_sided(double eps, std::size_t m, std::size_t d, double p);

/// Two-sided fixed-sparsity deviation bound 2 exp(-eps^2 m p (1-p)^2 / 20)
/// with p = c/d; requires 5 <= c <= d/2 and 0 < eps <= 20/c.
double fixed_two_sided(double eps, std::size_t m, std::size_t d, std::size_t c);

/// Smallest integer m with m >= 16 (1-p) log(n) / (eps^2 p^2). Natural log;
/// the caller is responsible for eps being in the theorem's range for its d.
std::size_t min_m_bernoulli(std::size_t n, double eps, double p);

/// Smallest integer m with m >= 40 log(n) / (eps^2 p (1-p)^2), p = c/d.
std::size_t min_m_fixed(std::size_t n, double eps, std::size_t d, std::size_t c);

}  // namespace sbproj
