#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sbproj {

// A point in R^d; the dimension is the entry count and entries must be finite.
using Vector = std::vector<double>;

// Power sums of one vector, each accumulated left to right in doubles.
struct NormProfile {
  double sq_norm = 0.0;      // sum x_k^2
  double norm3_cubed = 0.0;  // sum x_k^3 (signed)
  double norm4_4 = 0.0;      // sum x_k^4
  double coord_sum = 0.0;    // sum x_k
};

// x shifted per coordinate by q * coord_sum(x): the all-ones centering matrix
// applied implicitly, without materializing it.
struct CenteredVector {
  Vector y;
  double s_y = 0.0;  // sum of y, equals (1 - d*q) * coord_sum(x)
  double q = 0.0;
};

enum class ModelKind { Bernoulli, FixedSparsity, Gaussian, Achlioptas, Ping, Bourgain };

const char* to_string(ModelKind kind) noexcept;

// Tagged projection-model configuration. `p` is meaningful only for the
// Bernoulli kind, `c` only for FixedSparsity and Bourgain; irrelevant
// parameters must be left at zero.
struct ProjectionModel {
  ModelKind kind = ModelKind::Gaussian;
  std::size_t d = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::size_t c = 0;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
};

/// Computes all four power sums of x in a single pass.
NormProfile norm_profile(const Vector& x);

/// Centering constant of the fixed-sparsity model,
/// q = (1/d)(1 + sqrt((d-c)/(c(d-1)))), for 1 <= c <= d/2.
double fixed_q(std::size_t d, std::size_t c);

/// Centers x with the fixed-sparsity constant: y_i = x_i - q * coord_sum(x).
CenteredVector center_fixed(const Vector& x, std::size_t c);

}  // namespace sbproj
