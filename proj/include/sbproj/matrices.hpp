#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sbproj/core.hpp"
#include "sbproj/rng.hpp"

namespace sbproj {

// Row supports of a 0/1 projection matrix; indices strictly increase within a
// row. Regenerating from (kind, d, m, param, seed) reproduces identical rows
// because row i consumes only the substream(seed, i) stream.
struct SparseBinaryMatrix {
  ModelKind kind = ModelKind::Bernoulli;  // Bernoulli or FixedSparsity
  std::size_t d = 0;
  std::size_t m = 0;
  double p = 0.0;      // Bernoulli
  std::size_t c = 0;   // FixedSparsity
  std::uint64_t seed = 0;
  std::vector<std::vector<std::uint32_t>> rows;
};

// Row supports with a +/-1 sign per index.
struct SignedSparseMatrix {
  ModelKind kind = ModelKind::Achlioptas;  // Achlioptas, Ping or Bourgain
  std::size_t d = 0;
  std::size_t m = 0;
  std::size_t c = 0;   // Bourgain
  std::uint64_t seed = 0;

  struct Entry {
    std::uint32_t index;
    std::int8_t sign;  // +1 or -1
  };
  std::vector<std::vector<Entry>> rows;
};

// Row-major dense matrix of N(0,1) entries.
struct DenseMatrix {
  std::size_t d = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;  // m * d

  double at(std::size_t i, std::size_t j) const { return values[i * d + j]; }
};

/// Each entry one independently with probability p. The generator accepts any
/// p in (0,1); the p <= 1/2 theorem precondition is enforced by the bound and
/// projection operations, not here.
SparseBinaryMatrix gen_bernoulli(std::size_t d, std::size_t m, double p, std::uint64_t seed);

/// Uniform c-subset of {0,...,d-1} via Floyd's algorithm: O(c) expected draws
/// and memory, returned sorted ascending.
std::vector<std::uint32_t> sample_c_subset(std::size_t d, std::size_t c, CounterRng& rng);

/// Rows are i.i.d. uniform c-subsets.
SparseBinaryMatrix gen_fixed_sparsity(std::size_t d, std::size_t m, std::size_t c,
                                      std::uint64_t seed);

/// i.i.d. N(0,1) entries via the polar transform of the row stream.
DenseMatrix gen_gaussian(std::size_t d, std::size_t m, std::uint64_t seed);

/// i.i.d. entries from {+1, 0, -1} with probabilities {1/6, 2/3, 1/6}.
SignedSparseMatrix gen_achlioptas(std::size_t d, std::size_t m, std::uint64_t seed);

/// i.i.d. entries from {+1, 0, -1} with probabilities
/// {1/(2 sqrt(d)), 1 - 1/sqrt(d), 1/(2 sqrt(d))}.
SignedSparseMatrix gen_ping(std::size_t d, std::size_t m, std::uint64_t seed);

/// Each row an independent uniform c-subset (1 <= c <= d) with i.i.d.
/// Rademacher signs, drawn in ascending index order after the subset.
SignedSparseMatrix gen_bourgain(std::size_t d, std::size_t m, std::size_t c, std::uint64_t seed);

// Text export: header `kind d m param seed` (param is p, c or `-`), then one
// line per row of ascending `index` or `index:+1` / `index:-1` tokens.
void write_matrix(std::ostream& os, const SparseBinaryMatrix& w);
void write_matrix(std::ostream& os, const SignedSparseMatrix& w);

}  // namespace sbproj
