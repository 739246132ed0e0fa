#include "sbproj/core.hpp"

#include <cmath>
#include <string>

#include "sbproj/error.hpp"

namespace sbproj {

const char* to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::Bernoulli: return "bernoulli";
    case ModelKind::FixedSparsity: return "fixed";
    case ModelKind::Gaussian: return "gaussian";
    case ModelKind::Achlioptas: return "achlioptas";
    case ModelKind::Ping: return "ping";
    case ModelKind::Bourgain: return "bourgain";
  }
  return "unknown";
}

void ProjectionModel::validate() const {
  if (d < 2) throw ConfigError("model: d must be >= 2");
  if (m < 1) throw ConfigError("model: m must be >= 1");
  switch (kind) {
    case ModelKind::Bernoulli:
      if (!(p > 0.0 && p <= 0.5)) throw ConfigError("model: bernoulli needs p in (0, 1/2]");
      if (c != 0) throw ConfigError("model: c is not a bernoulli parameter");
      break;
    case ModelKind::FixedSparsity:
    case ModelKind::Bourgain:
      if (c < 1 || 2 * c > d)
        throw ConfigError("model: c must be in [1, d/2], got c=" + std::to_string(c) +
                          " for d=" + std::to_string(d));
      if (p != 0.0) throw ConfigError("model: p is not a parameter of this kind");
      break;
    case ModelKind::Gaussian:
    case ModelKind::Achlioptas:
    case ModelKind::Ping:
      if (p != 0.0 || c != 0) throw ConfigError("model: kind takes no p or c parameter");
      break;
  }
}

NormProfile norm_profile(const Vector& x) {
  NormProfile profile;
  for (double v : x) {
    if (!std::isfinite(v)) throw DataError("norm_profile: non-finite entry");
    const double v2 = v * v;
    profile.sq_norm += v2;
    profile.norm3_cubed += v2 * v;
    profile.norm4_4 += v2 * v2;
    profile.coord_sum += v;
  }
  return profile;
}

double fixed_q(std::size_t d, std::size_t c) {
  if (d < 2) throw ConfigError("fixed_q: d must be >= 2");
  if (c < 1 || 2 * c > d)
    throw ConfigError("fixed_q: c must satisfy 1 <= c <= d/2, got c=" + std::to_string(c) +
                      " for d=" + std::to_string(d));
  const double dd = static_cast<double>(d);
  const double cc = static_cast<double>(c);
  return (1.0 + std::sqrt((dd - cc) / (cc * (dd - 1.0)))) / dd;
}

CenteredVector center_fixed(const Vector& x, std::size_t c) {
  const double q = fixed_q(x.size(), c);
  double coord_sum = 0.0;
  for (double v : x) coord_sum += v;

  CenteredVector centered;
  centered.q = q;
  const double shift = q * coord_sum;
  centered.y.reserve(x.size());
  for (double v : x) centered.y.push_back(v - shift);
  centered.s_y = (1.0 - static_cast<double>(x.size()) * q) * coord_sum;
  return centered;
}

}  // namespace sbproj
