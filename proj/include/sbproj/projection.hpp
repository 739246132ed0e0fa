#pragma once

#include <variant>
#include <vector>

#include "sbproj/core.hpp"
#include "sbproj/matrices.hpp"

namespace sbproj {

using ProjectedVector = std::vector<double>;

/// Centered Bernoulli projection,
/// eta_i = (sum_{j in row i} x_j - p * s_x) / sqrt(m p (1-p)).
ProjectedVector project_bernoulli(const SparseBinaryMatrix& w, const Vector& x, double p);

/// Centered fixed-sparsity projection,
/// eta_i = sqrt(d(d-1)/(m c (d-c))) * (sum_{j in row i} x_j - c q s_x).
ProjectedVector project_fixed(const SparseBinaryMatrix& w, const Vector& x, std::size_t c);

/// Dense Gaussian projection, eta = W x / sqrt(m).
ProjectedVector project_gaussian(const DenseMatrix& w, const Vector& x);

/// Signed-baseline projection. Each kind is scaled so E||eta||^2 = ||x||^2:
/// Achlioptas sqrt(3/m), Ping d^(1/4)/sqrt(m), Bourgain sqrt(d/(m c)).
ProjectedVector project_signed(const SignedSparseMatrix& w, const Vector& x);

/// Uncentered Bernoulli projection eta = W x / sqrt(m p (1-p)); biased on
/// inputs whose coordinate sum is nonzero.
ProjectedVector naive_project(const SparseBinaryMatrix& w, const Vector& x, double p);

// A model with its materialized matrix; project() applies the model's
// centering and scaling. Immutable once built, shareable across threads.
class Projector {
 public:
  static Projector materialize(const ProjectionModel& model);

  ProjectedVector project(const Vector& x) const;
  const ProjectionModel& model() const noexcept { return model_; }

 private:
  ProjectionModel model_;
  std::variant<SparseBinaryMatrix, SignedSparseMatrix, DenseMatrix> matrix_;
};

/// Projects every sample; identical to per-sample project() calls, parallel
/// over samples.
std::vector<ProjectedVector> project_batch(const Projector& projector,
                                           const std::vector<Vector>& samples);

}  // namespace sbproj
