#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sbproj/core.hpp"
#include "sbproj/projection.hpp"

namespace sbproj {

// Symmetric pairwise Euclidean distance matrix; only the upper triangle is
// stored, the diagonal is implicitly zero.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);

 private:
  std::size_t index(std::size_t i, std::size_t j) const;  // requires i < j

  std::size_t n_;
  std::vector<double> upper_;
};

struct RetrievalReport {
  std::size_t r = 0;
  std::vector<double> per_query;  // each in [0, 1]
  double mean = 0.0;
};

// First two moments of a statistic; `variance` is the sample variance
// (n-1 divisor) for Monte Carlo estimates and the exact population variance
// for the exhaustive oracles.
struct MomentEstimate {
  double mean = 0.0;
  double variance = 0.0;
};

struct DistortionStats {
  double out_of_band_fraction = 0.0;
  std::size_t pairs = 0;    // pairs evaluated
  std::size_t skipped = 0;  // zero-distance pairs left out
};

/// Euclidean (not squared) distances between all pairs.
DistanceMatrix pairwise_distances(const std::vector<Vector>& samples);

/// Mean over the n(n-1)/2 pairs i<j of (dd(i,j) - dm(i,j))^2.
double distance_mse(const DistanceMatrix& dd, const DistanceMatrix& dm);

/// Non-overlap 1 - |N_d intersect N_m| / r of the query's r-nearest-neighbor
/// sets under each matrix, the query excluded from its own candidates. Ties
/// break by ascending sample index.
double retrieval_error(const DistanceMatrix& dd, const DistanceMatrix& dm, std::size_t r,
                       std::size_t query);

/// retrieval_error over every sample as query, with the mean.
RetrievalReport mean_retrieval_error(const DistanceMatrix& dd, const DistanceMatrix& dm,
                                     std::size_t r);

/// Sample mean and variance of ||eta||^2 over `trials` independently
/// regenerated matrices; trial t uses matrix seed substream(seed, t).
MomentEstimate mc_variance(const ProjectionModel& model, const Vector& x, std::size_t trials,
                           std::uint64_t seed);

/// Exact moments of the m=1 scaled Bernoulli estimator ||eta_B||^2 by
/// enumerating all 2^d row supports with their probabilities. d <= 20.
MomentEstimate exhaustive_variance_bernoulli(const Vector& x, double p);

/// Exact moments of the m=1 scaled fixed-sparsity estimator by enumerating
/// all C(d, c) row subsets. Guarded to C(d, c) <= 10^6.
MomentEstimate exhaustive_variance_fixed(const Vector& x, std::size_t c);

/// Fraction of pairs whose projected squared distance falls outside
/// (1 +/- eps) times the original squared distance. Zero-distance pairs are
/// skipped and counted separately.
DistortionStats distortion_stats(const std::vector<Vector>& originals,
                                 const std::vector<Vector>& projected, double eps);

}  // namespace sbproj
