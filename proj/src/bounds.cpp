#include "sbproj/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sbproj/error.hpp"

namespace sbproj {

namespace {

void check_eps(double eps, double eps_max, const char* who) {
  if (!(eps > 0.0 && eps <= eps_max))
    throw ConfigError(std::string(who) + ": eps must be in (0, " + std::to_string(eps_max) +
                      "], the bound is not proven outside that range");
}

// ceil computed in 80-bit long double so values that land near an integer
// boundary resolve the same way as a high-precision evaluation.
std::size_t ceil_to_size(long double v) {
  const long double c = std::ceil(v);
  if (c < 1.0L) return 1;
  if (c > static_cast<long double>(std::numeric_limits<std::size_t>::max()))
    throw ConfigError("min_m: result exceeds the representable range");
  return static_cast<std::size_t>(c);
}

}  // namespace

void TailBoundQuery::validate() const {
  if (!(w > 0.0) || !std::isfinite(w)) throw ConfigError("tail bound: w must be finite and > 0");
  if (!(b > 0.0) || !std::isfinite(b)) throw ConfigError("tail bound: b must be finite and > 0");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("tail bound: t must be finite and >= 0");
}

double bennett_h(double a) {
  if (a < 0.0) throw ConfigError("bennett_h: a must be >= 0");
  return (1.0 + a) * std::log1p(a) - a;
}

double bennett_upper_tail(const TailBoundQuery& query) {
  query.validate();
  return std::exp(-(query.w / (query.b * query.b)) * bennett_h(query.b * query.t / query.w));
}

double lower_tail(double w, double t) {
  if (!(w > 0.0)) throw ConfigError("lower_tail: w must be > 0");
  if (!(t >= 0.0)) throw ConfigError("lower_tail: t must be >= 0");
  return std::exp(-t * t / (2.0 * w));
}

double bernoulli_two_sided(double eps, std::size_t m, std::size_t d, double p) {
  if (!(p > 0.0 && p <= 0.5)) throw ConfigError("bernoulli_two_sided: p must be in (0, 1/2]");
  if (m < 1) throw ConfigError("bernoulli_two_sided: m must be >= 1");
  if (d < 2) throw ConfigError("bernoulli_two_sided: d must be >= 2");
  check_eps(eps, 8.0 / (static_cast<double>(d) * p), "bernoulli_two_sided");
  return 2.0 * std::exp(-eps * eps * static_cast<double>(m) * p * p / (8.0 * (1.0 - p)));
}

double fixed_two_sided(double eps, std::size_t m, std::size_t d, std::size_t c) {
  if (c < 5 || 2 * c > d) throw ConfigError("fixed_two_sided: need 5 <= c <= d/2");
  if (m < 1) throw ConfigError("fixed_two_sided: m must be >= 1");
  check_eps(eps, 20.0 / static_cast<double>(c), "fixed_two_sided");
  const double p = static_cast<double>(c) / static_cast<double>(d);
  return 2.0 *
         std::exp(-eps * eps * static_cast<double>(m) * p * (1.0 - p) * (1.0 - p) / 20.0);
}

std::size_t min_m_bernoulli(std::size_t n, double eps, double p) {
  if (n < 2) throw ConfigError("min_m_bernoulli: n must be >= 2");
  if (!(p > 0.0 && p <= 0.5)) throw ConfigError("min_m_bernoulli: p must be in (0, 1/2]");
  if (!(eps > 0.0)) throw ConfigError("min_m_bernoulli: eps must be > 0");
  const long double pp = p;
  const long double ee = eps;
  return ceil_to_size(16.0L * (1.0L - pp) * std::log(static_cast<long double>(n)) /
                      (ee * ee * pp * pp));
}

std::size_t min_m_fixed(std::size_t n, double eps, std::size_t d, std::size_t c) {
  if (n < 2) throw ConfigError("min_m_fixed: n must be >= 2");
  if (c < 5 || 2 * c > d) throw ConfigError("min_m_fixed: need 5 <= c <= d/2");
  check_eps(eps, 20.0 / static_cast<double>(c), "min_m_fixed");
  const long double p = static_cast<long double>(c) / static_cast<long double>(d);
  const long double ee = eps;
  return ceil_to_size(40.0L * std::log(static_cast<long double>(n)) /
                      (ee * ee * p * (1.0L - p) * (1.0L - p)));
}

}  // namespace sbproj
