#include "sbproj/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sbproj/error.hpp"
#include "sbproj/parallel.hpp"
#include "sbproj/rng.hpp"

namespace sbproj {

namespace {

double sq_distance(const Vector& a, const Vector& b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    acc += diff * diff;
  }
  return acc;
}

double sq_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double e : v) acc += e * e;
  return acc;
}

// Compensated accumulator for the exhaustive oracles; they are the exactness
// reference, so summation error has to stay well under the 1e-9 gate.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Exact mean and population variance of weighted outcomes, two passes.
MomentEstimate weighted_moments(const std::vector<double>& values,
                                const std::vector<double>& weights) {
  KahanSum mean_acc;
  for (std::size_t k = 0; k < values.size(); ++k) mean_acc.add(weights[k] * values[k]);
  const double mean = mean_acc.sum;

  KahanSum var_acc;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double dev = values[k] - mean;
    var_acc.add(weights[k] * dev * dev);
  }
  return {mean, var_acc.sum};
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), upper_(n < 2 ? 0 : n * (n - 1) / 2, 0.0) {}

std::size_t DistanceMatrix::index(std::size_t i, std::size_t j) const {
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

double DistanceMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw ConfigError("distance matrix: index out of range");
  if (i == j) return 0.0;
  return i < j ? upper_[index(i, j)] : upper_[index(j, i)];
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_ || i == j) throw ConfigError("distance matrix: bad index pair");
  upper_[i < j ? index(i, j) : index(j, i)] = value;
}

DistanceMatrix pairwise_distances(const std::vector<Vector>& samples) {
  const std::size_t n = samples.size();
  for (const auto& x : samples) {
    if (x.size() != samples.front().size())
      throw ConfigError("pairwise_distances: ragged input");
  }
  DistanceMatrix dist(n);
  const std::size_t dim = n == 0 ? 0 : samples.front().size();
  const std::size_t threshold =
      std::max<std::size_t>(2, 65536 / std::max<std::size_t>(1, n * dim));
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist.set(i, j, std::sqrt(sq_distance(samples[i], samples[j])));
    }
  }, threshold);
  return dist;
}

double distance_mse(const DistanceMatrix& dd, const DistanceMatrix& dm) {
  if (dd.size() != dm.size()) throw ConfigError("distance_mse: size mismatch");
  const std::size_t n = dd.size();
  if (n < 2) throw ConfigError("distance_mse: need at least two samples");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double diff = dd.at(i, j) - dm.at(i, j);
      acc += diff * diff;
    }
  }
  return acc / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

namespace {

// Indices of the r nearest candidates to `query`, ties by ascending index.
std::vector<std::size_t> nearest_set(const DistanceMatrix& dist, std::size_t r,
                                     std::size_t query) {
  std::vector<std::size_t> candidates;
  candidates.reserve(dist.size() - 1);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (i != query) candidates.push_back(i);
  }
  std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    const double da = dist.at(query, a);
    const double db = dist.at(query, b);
    if (da != db) return da < db;
    return a < b;
  });
  candidates.resize(r);
  return candidates;
}

}  // namespace

double retrieval_error(const DistanceMatrix& dd, const DistanceMatrix& dm, std::size_t r,
                       std::size_t query) {
  if (dd.size() != dm.size()) throw ConfigError("retrieval_error: size mismatch");
  if (query >= dd.size()) throw ConfigError("retrieval_error: query index out of range");
  if (r < 1 || r >= dd.size()) throw ConfigError("retrieval_error: need 1 <= r < n");

  auto in_d = nearest_set(dd, r, query);
  auto in_m = nearest_set(dm, r, query);
  std::sort(in_d.begin(), in_d.end());
  std::sort(in_m.begin(), in_m.end());
  std::vector<std::size_t> common;
  std::set_intersection(in_d.begin(), in_d.end(), in_m.begin(), in_m.end(),
                        std::back_inserter(common));
  return 1.0 - static_cast<double>(common.size()) / static_cast<double>(r);
}

RetrievalReport mean_retrieval_error(const DistanceMatrix& dd, const DistanceMatrix& dm,
                                     std::size_t r) {
  RetrievalReport report;
  report.r = r;
  report.per_query.resize(dd.size());
  const std::size_t threshold =
      std::max<std::size_t>(2, 32768 / std::max<std::size_t>(1, dd.size()));
  parallel_for(
      dd.size(), [&](std::size_t q) { report.per_query[q] = retrieval_error(dd, dm, r, q); },
      threshold);
  double acc = 0.0;
  for (double e : report.per_query) acc += e;
  report.mean = acc / static_cast<double>(report.per_query.size());
  return report;
}

MomentEstimate mc_variance(const ProjectionModel& model, const Vector& x, std::size_t trials,
                           std::uint64_t seed) {
  if (trials < 2) throw ConfigError("mc_variance: need at least 2 trials");
  model.validate();

  // Welford over trials; trial t regenerates the matrix from substream(seed, t).
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    ProjectionModel trial_model = model;
    trial_model.seed = substream(seed, t);
    const auto projector = Projector::materialize(trial_model);
    const double z = sq_norm(projector.project(x));
    const double delta = z - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (z - mean);
  }
  return {mean, m2 / static_cast<double>(trials - 1)};
}

MomentEstimate exhaustive_variance_bernoulli(const Vector& x, double p) {
  const std::size_t d = x.size();
  if (d < 1 || d > 20) throw ConfigError("exhaustive_variance_bernoulli: need 1 <= d <= 20");
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("exhaustive_variance_bernoulli: p in (0, 1)");

  double s_x = 0.0;
  for (double v : x) s_x += v;
  const double scale = 1.0 / (p * (1.0 - p));  // m = 1

  std::vector<double> pow_p(d + 1, 1.0);
  std::vector<double> pow_q(d + 1, 1.0);
  for (std::size_t k = 1; k <= d; ++k) {
    pow_p[k] = pow_p[k - 1] * p;
    pow_q[k] = pow_q[k - 1] * (1.0 - p);
  }

  const std::size_t total = std::size_t{1} << d;
  std::vector<double> values(total);
  std::vector<double> weights(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    double sum = 0.0;
    unsigned bits = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (mask & (std::size_t{1} << j)) {
        sum += x[j];
        ++bits;
      }
    }
    const double centered = sum - p * s_x;
    values[mask] = centered * centered * scale;
    weights[mask] = pow_p[bits] * pow_q[d - bits];
  }
  return weighted_moments(values, weights);
}

MomentEstimate exhaustive_variance_fixed(const Vector& x, std::size_t c) {
  const std::size_t d = x.size();
  if (d < 2 || c < 1 || 2 * c > d)
    throw ConfigError("exhaustive_variance_fixed: need 1 <= c <= d/2 with d >= 2");

  double subsets = 1.0;  // C(d, c), small by the guard below
  for (std::size_t i = 0; i < c; ++i) {
    subsets *= static_cast<double>(d - i) / static_cast<double>(i + 1);
  }
  if (subsets > 1e6)
    throw ConfigError("exhaustive_variance_fixed: C(d, c) exceeds the 1e6 enumeration guard");
  const auto count = static_cast<std::size_t>(std::llround(subsets));

  const CenteredVector centered = center_fixed(x, c);
  const double dd = static_cast<double>(d);
  const double cc = static_cast<double>(c);
  const double scale = dd * (dd - 1.0) / (cc * (dd - cc));  // m = 1

  // Lexicographic enumeration of all c-subsets.
  std::vector<std::size_t> subset(c);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<double> values;
  values.reserve(count);
  for (;;) {
    double sum = 0.0;
    for (auto j : subset) sum += centered.y[j];
    values.push_back(sum * sum * scale);

    std::size_t slot = c;
    while (slot > 0 && subset[slot - 1] == d - c + slot - 1) --slot;
    if (slot == 0) break;
    ++subset[slot - 1];
    for (std::size_t k = slot; k < c; ++k) subset[k] = subset[k - 1] + 1;
  }

  const std::vector<double> weights(values.size(), 1.0 / static_cast<double>(values.size()));
  return weighted_moments(values, weights);
}

DistortionStats distortion_stats(const std::vector<Vector>& originals,
                                 const std::vector<Vector>& projected, double eps) {
  if (originals.size() != projected.size())
    throw ConfigError("distortion_stats: sample count mismatch");
  if (!(eps >= 0.0)) throw ConfigError("distortion_stats: eps must be >= 0");

  DistortionStats stats;
  std::size_t outside = 0;
  for (std::size_t i = 0; i < originals.size(); ++i) {
    for (std::size_t j = i + 1; j < originals.size(); ++j) {
      const double original = sq_distance(originals[i], originals[j]);
      if (original == 0.0) {
        ++stats.skipped;
        continue;
      }
      const double mapped = sq_distance(projected[i], projected[j]);
      ++stats.pairs;
      if (mapped < (1.0 - eps) * original || mapped > (1.0 + eps) * original) ++outside;
    }
  }
  stats.out_of_band_fraction =
      stats.pairs == 0 ? 0.0 : static_cast<double>(outside) / static_cast<double>(stats.pairs);
  return stats;
}

}  // namespace sbproj
