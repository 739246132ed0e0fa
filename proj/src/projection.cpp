#include "sbproj/projection.hpp"

#include <cmath>

#include "sbproj/error.hpp"
#include "sbproj/parallel.hpp"

namespace sbproj {

namespace {

double coord_sum(const Vector& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// Shifted-and-scaled sparse accumulation shared by both binary kernels.
ProjectedVector accumulate_rows(const SparseBinaryMatrix& w, const Vector& x, double shift,
                                double scale) {
  ProjectedVector out(w.m);
  for (std::size_t i = 0; i < w.m; ++i) {
    double acc = 0.0;
    for (auto j : w.rows[i]) acc += x[j];
    out[i] = (acc - shift) * scale;
  }
  return out;
}

}  // namespace

ProjectedVector project_bernoulli(const SparseBinaryMatrix& w, const Vector& x, double p) {
  if (w.kind != ModelKind::Bernoulli)
    throw ConfigError("project_bernoulli: matrix kind is not bernoulli");
  if (w.d != x.size()) throw ConfigError("project_bernoulli: dimension mismatch");
  if (!(p > 0.0 && p <= 0.5)) throw ConfigError("project_bernoulli: p must be in (0, 1/2]");

  const double scale = 1.0 / std::sqrt(static_cast<double>(w.m) * p * (1.0 - p));
  return accumulate_rows(w, x, p * coord_sum(x), scale);
}

ProjectedVector project_fixed(const SparseBinaryMatrix& w, const Vector& x, std::size_t c) {
  if (w.kind != ModelKind::FixedSparsity || w.c != c)
    throw ConfigError("project_fixed: matrix is not fixed-sparsity with this c");
  if (w.d != x.size()) throw ConfigError("project_fixed: dimension mismatch");
  if (c < 1 || 2 * c > w.d) throw ConfigError("project_fixed: c must be in [1, d/2]");

  const double q = fixed_q(w.d, c);
  const double dd = static_cast<double>(w.d);
  const double cc = static_cast<double>(c);
  const double scale = std::sqrt(dd * (dd - 1.0) / (static_cast<double>(w.m) * cc * (dd - cc)));
  return accumulate_rows(w, x, cc * q * coord_sum(x), scale);
}

ProjectedVector project_gaussian(const DenseMatrix& w, const Vector& x) {
  if (w.d != x.size()) throw ConfigError("project_gaussian: dimension mismatch");

  const double scale = 1.0 / std::sqrt(static_cast<double>(w.m));
  ProjectedVector out(w.m);
  for (std::size_t i = 0; i < w.m; ++i) {
    const double* row = w.values.data() + i * w.d;
    double acc = 0.0;
    for (std::size_t j = 0; j < w.d; ++j) acc += row[j] * x[j];
    out[i] = acc * scale;
  }
  return out;
}

ProjectedVector project_signed(const SignedSparseMatrix& w, const Vector& x) {
  if (w.d != x.size()) throw ConfigError("project_signed: dimension mismatch");

  const double dd = static_cast<double>(w.d);
  const double mm = static_cast<double>(w.m);
  double scale = 0.0;
  switch (w.kind) {
    case ModelKind::Achlioptas: scale = std::sqrt(3.0 / mm); break;
    case ModelKind::Ping: scale = std::pow(dd, 0.25) / std::sqrt(mm); break;
    case ModelKind::Bourgain: scale = std::sqrt(dd / (mm * static_cast<double>(w.c))); break;
    default: throw ConfigError("project_signed: matrix kind is not a signed baseline");
  }

  ProjectedVector out(w.m);
  for (std::size_t i = 0; i < w.m; ++i) {
    double acc = 0.0;
    for (const auto& entry : w.rows[i]) {
      acc += entry.sign > 0 ? x[entry.index] : -x[entry.index];
    }
    out[i] = acc * scale;
  }
  return out;
}

ProjectedVector naive_project(const SparseBinaryMatrix& w, const Vector& x, double p) {
  if (w.kind != ModelKind::Bernoulli)
    throw ConfigError("naive_project: matrix kind is not bernoulli");
  if (w.d != x.size()) throw ConfigError("naive_project: dimension mismatch");
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("naive_project: p must be in (0, 1)");

  const double scale = 1.0 / std::sqrt(static_cast<double>(w.m) * p * (1.0 - p));
  return accumulate_rows(w, x, 0.0, scale);
}

Projector Projector::materialize(const ProjectionModel& model) {
  model.validate();
  Projector projector;
  projector.model_ = model;
  switch (model.kind) {
    case ModelKind::Bernoulli:
      projector.matrix_ = gen_bernoulli(model.d, model.m, model.p, model.seed);
      break;
    case ModelKind::FixedSparsity:
      projector.matrix_ = gen_fixed_sparsity(model.d, model.m, model.c, model.seed);
      break;
    case ModelKind::Gaussian:
      projector.matrix_ = gen_gaussian(model.d, model.m, model.seed);
      break;
    case ModelKind::Achlioptas:
      projector.matrix_ = gen_achlioptas(model.d, model.m, model.seed);
      break;
    case ModelKind::Ping:
      projector.matrix_ = gen_ping(model.d, model.m, model.seed);
      break;
    case ModelKind::Bourgain:
      projector.matrix_ = gen_bourgain(model.d, model.m, model.c, model.seed);
      break;
  }
  return projector;
}

ProjectedVector Projector::project(const Vector& x) const {
  switch (model_.kind) {
    case ModelKind::Bernoulli:
      return project_bernoulli(std::get<SparseBinaryMatrix>(matrix_), x, model_.p);
    case ModelKind::FixedSparsity:
      return project_fixed(std::get<SparseBinaryMatrix>(matrix_), x, model_.c);
    case ModelKind::Gaussian:
      return project_gaussian(std::get<DenseMatrix>(matrix_), x);
    default:
      return project_signed(std::get<SignedSparseMatrix>(matrix_), x);
  }
}

std::vector<ProjectedVector> project_batch(const Projector& projector,
                                           const std::vector<Vector>& samples) {
  for (const auto& x : samples) {
    if (x.size() != projector.model().d)
      throw ConfigError("project_batch: ragged input, all samples must have dimension d");
  }
  std::vector<ProjectedVector> out(samples.size());
  const std::size_t per_sample = projector.model().m * projector.model().d;
  const std::size_t threshold =
      std::max<std::size_t>(2, 65536 / std::max<std::size_t>(1, per_sample));
  parallel_for(
      samples.size(), [&](std::size_t k) { out[k] = projector.project(samples[k]); }, threshold);
  return out;
}

}  // namespace sbproj
