#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "sbproj/core.hpp"

namespace sbproj {

// Desk-scale stand-in for external datasets.
struct SyntheticSpec {
  enum class Kind { DenseGaussian, SparseNonnegative };

  Kind kind = Kind::DenseGaussian;
  std::size_t n = 0;
  std::size_t d = 0;
  double density = 1.0;  // sparse kind only, in (0, 1] with density*d >= 1
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
};

/// One sample per line of comma-separated decimal floats, uniform dimension.
/// Parse failures report the 1-based line number. An empty file loads as an
/// empty set.
std::vector<Vector> load_dense(const std::filesystem::path& path);

/// One sample per line of space-separated `index:value` tokens with strictly
/// ascending 0-based indices below d; a blank line is the zero vector.
std::vector<Vector> load_sparse(const std::filesystem::path& path, std::size_t d);

/// dense-gaussian: i.i.d. standard normal coordinates. sparse-nonnegative:
/// each coordinate nonzero with probability `density`, value uniform in
/// (0, 1]. Sample i draws from substream(seed, i).
std::vector<Vector> gen_synthetic(const SyntheticSpec& spec);

// Writers matching the loaders, with round-trip-exact float formatting.
void save_dense(std::ostream& os, const std::vector<Vector>& samples);
void save_sparse(std::ostream& os, const std::vector<Vector>& samples);

}  // namespace sbproj
