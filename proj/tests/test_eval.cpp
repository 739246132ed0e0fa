#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "sbproj/error.hpp"
#include "sbproj/eval.hpp"
#include "sbproj/moments.hpp"

using namespace sbproj;
using test::random_vector;
using test::rel_close;
using test::sq_norm_of;

TEST_SUITE_BEGIN("eval");

TEST_CASE("pairwise distances hand cases") {
  const std::vector<Vector> points{{0.0, 0.0}, {3.0, 4.0}};
  const auto dist = pairwise_distances(points);
  CHECK(dist.at(0, 1) == 5.0);
  CHECK(dist.at(1, 0) == 5.0);
  CHECK(dist.at(0, 0) == 0.0);

  const std::vector<Vector> same{{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}};
  const auto zeros = pairwise_distances(same);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(zeros.at(i, j) == 0.0);
  }

  CHECK_THROWS_AS(pairwise_distances(std::vector<Vector>{{1.0}, {1.0, 2.0}}), ConfigError);
}

TEST_CASE("pairwise distances respect permutations and the triangle inequality") {
  CounterRng rng(42);
  std::vector<Vector> points;
  for (int k = 0; k < 12; ++k) points.push_back(random_vector(5, rng));
  const auto dist = pairwise_distances(points);

  std::vector<Vector> rotated(points.begin() + 3, points.end());
  rotated.insert(rotated.end(), points.begin(), points.begin() + 3);
  const auto dist_rotated = pairwise_distances(rotated);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      CHECK(dist.at((i + 3) % 12, (j + 3) % 12) == dist_rotated.at(i, j));
    }
  }

  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t a = rng.next_below(12);
    const std::size_t b = rng.next_below(12);
    const std::size_t c = rng.next_below(12);
    CHECK(dist.at(a, c) <= dist.at(a, b) + dist.at(b, c) + 1e-12);
  }
}

TEST_CASE("distance mse hand cases and scaling") {
  DistanceMatrix dd(2);
  DistanceMatrix dm(2);
  dd.set(0, 1, 5.0);
  dm.set(0, 1, 4.0);
  CHECK(distance_mse(dd, dm) == 1.0);
  CHECK(distance_mse(dd, dd) == 0.0);
  CHECK(distance_mse(dd, dm) == distance_mse(dm, dd));

  DistanceMatrix dd_scaled(2);
  DistanceMatrix dm_scaled(2);
  dd_scaled.set(0, 1, 2.5 * 5.0);
  dm_scaled.set(0, 1, 2.5 * 4.0);
  CHECK(rel_close(distance_mse(dd_scaled, dm_scaled), 2.5 * 2.5 * 1.0, 1e-14));

  CHECK_THROWS_AS(distance_mse(dd, DistanceMatrix(3)), ConfigError);
}

TEST_CASE("retrieval error on constructed instances") {
  // Reversed ordering on 2r+1 well-separated candidates: disjoint sets.
  const std::size_t r = 3;
  DistanceMatrix dd(8);
  DistanceMatrix dm(8);
  for (std::size_t i = 1; i < 8; ++i) {
    dd.set(0, i, static_cast<double>(i));
    dm.set(0, i, static_cast<double>(8 - i));
  }
  for (std::size_t i = 1; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      dd.set(i, j, 100.0);
      dm.set(i, j, 100.0);
    }
  }
  CHECK(retrieval_error(dd, dm, r, 0) == 1.0);
  CHECK(retrieval_error(dd, dd, r, 0) == 0.0);

  // Half-overlapping neighbor sets at r=2.
  DistanceMatrix hd(4);
  DistanceMatrix hm(4);
  hd.set(0, 1, 1.0);
  hd.set(0, 2, 2.0);
  hd.set(0, 3, 3.0);
  hm.set(0, 1, 1.0);
  hm.set(0, 2, 3.0);
  hm.set(0, 3, 2.0);
  for (std::size_t i = 1; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      hd.set(i, j, 50.0);
      hm.set(i, j, 50.0);
    }
  }
  CHECK(retrieval_error(hd, hm, 2, 0) == 0.5);

  CHECK_THROWS_AS(retrieval_error(hd, hm, 4, 0), ConfigError);
  CHECK_THROWS_AS(retrieval_error(hd, hm, 2, 9), ConfigError);
}

TEST_CASE("retrieval ties break by ascending index") {
  DistanceMatrix dd(4);
  dd.set(0, 1, 1.0);
  dd.set(0, 2, 1.0);
  dd.set(0, 3, 1.0);
  dd.set(1, 2, 9.0);
  dd.set(1, 3, 9.0);
  dd.set(2, 3, 9.0);

  DistanceMatrix dm(4);
  dm.set(0, 1, 5.0);
  dm.set(0, 2, 1.0);
  dm.set(0, 3, 1.0);
  dm.set(1, 2, 9.0);
  dm.set(1, 3, 9.0);
  dm.set(2, 3, 9.0);

  // All dd candidates tie: picks {1, 2}. dm picks {2, 3}: overlap {2}.
  CHECK(retrieval_error(dd, dm, 2, 0) == 0.5);
}

TEST_CASE("retrieval error is invariant under monotone distance transforms") {
  CounterRng rng(321);
  std::vector<Vector> points;
  for (int k = 0; k < 20; ++k) points.push_back(random_vector(4, rng));
  std::vector<Vector> other;
  for (int k = 0; k < 20; ++k) other.push_back(random_vector(4, rng));

  const auto dd = pairwise_distances(points);
  const auto dm = pairwise_distances(other);

  DistanceMatrix dd_mapped(20);
  DistanceMatrix dm_mapped(20);
  const auto transform = [](double t) { return t * t * t + 2.0 * t; };
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = i + 1; j < 20; ++j) {
      dd_mapped.set(i, j, transform(dd.at(i, j)));
      dm_mapped.set(i, j, transform(dm.at(i, j)));
    }
  }
  for (std::size_t q = 0; q < 20; ++q) {
    CHECK(retrieval_error(dd, dm, 5, q) == retrieval_error(dd_mapped, dm_mapped, 5, q));
  }

  const auto report = mean_retrieval_error(dd, dm, 5);
  double acc = 0.0;
  for (double e : report.per_query) acc += e;
  CHECK(rel_close(report.mean, acc / 20.0, 1e-15));
}

TEST_CASE("mc_variance is deterministic and handles constant statistics") {
  ProjectionModel model;
  model.kind = ModelKind::Bernoulli;
  model.d = 4;
  model.m = 1;
  model.p = 0.5;

  // ||eta||^2 is identically 1 on a basis vector at p = 1/2.
  const auto constant = mc_variance(model, Vector{1.0, 0.0, 0.0, 0.0}, 1000, 5);
  CHECK(rel_close(constant.mean, 1.0, 1e-12));
  CHECK(std::fabs(constant.variance) < 1e-12);

  const auto once = mc_variance(model, Vector{1.0, 2.0, 3.0, 4.0}, 500, 6);
  const auto twice = mc_variance(model, Vector{1.0, 2.0, 3.0, 4.0}, 500, 6);
  CHECK(once.mean == twice.mean);
  CHECK(once.variance == twice.variance);

  CHECK_THROWS_AS(mc_variance(model, Vector(4, 1.0), 1, 7), ConfigError);
}

TEST_CASE("mc_variance converges to the closed forms") {
  ProjectionModel bernoulli;
  bernoulli.kind = ModelKind::Bernoulli;
  bernoulli.d = 2;
  bernoulli.m = 1;
  bernoulli.p = 0.5;
  const auto est_b = mc_variance(bernoulli, Vector{1.0, 1.0}, 1000000, 31);
  CHECK(rel_close(est_b.mean, 2.0, 0.01));
  CHECK(std::fabs(est_b.variance - 4.0) < 0.05);

  ProjectionModel gaussian;
  gaussian.kind = ModelKind::Gaussian;
  gaussian.d = 2;
  gaussian.m = 2;
  const auto est_g = mc_variance(gaussian, Vector{1.0, 0.0}, 1000000, 32);
  CHECK(std::fabs(est_g.variance - 1.0) < 0.02);
}

TEST_CASE("mc_variance error shrinks with more trials") {
  ProjectionModel model;
  model.kind = ModelKind::Bernoulli;
  model.d = 6;
  model.m = 2;
  model.p = 0.25;
  CounterRng rng(8080);
  const auto x = random_vector(6, rng);
  const double closed = var_bernoulli(x, 2, 0.25);

  int improved = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const double err_small =
        std::fabs(mc_variance(model, x, 1000, substream(1, seed)).variance - closed);
    const double err_big =
        std::fabs(mc_variance(model, x, 100000, substream(2, seed)).variance - closed);

    // Empirical spread of the 1e3-trial estimator, as the noise allowance.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const double v = mc_variance(model, x, 1000, substream(3 + seed, rep)).variance;
      const double delta = v - mean;
      mean += delta / static_cast<double>(rep + 1);
      m2 += delta * (v - mean);
    }
    const double noise = 3.0 * std::sqrt(m2 / 19.0);
    if (err_big <= err_small + noise) ++improved;
  }
  CHECK(improved >= 9);
}

TEST_CASE("exhaustive bernoulli oracle anchors") {
  const auto unit = exhaustive_variance_bernoulli(Vector{1.0, 0.0, 0.0}, 0.5);
  CHECK(rel_close(unit.mean, 1.0, 1e-14));
  CHECK(std::fabs(unit.variance) < 1e-14);

  const auto ones = exhaustive_variance_bernoulli(Vector{1.0, 1.0}, 0.5);
  CHECK(rel_close(ones.mean, 2.0, 1e-14));
  CHECK(rel_close(ones.variance, 4.0, 1e-13));

  const auto zero = exhaustive_variance_bernoulli(Vector{0.0, 0.0}, 0.25);
  CHECK(zero.mean == 0.0);
  CHECK(zero.variance == 0.0);

  CHECK_THROWS_AS(exhaustive_variance_bernoulli(Vector(21, 1.0), 0.5), ConfigError);
}

TEST_CASE("exhaustive fixed oracle anchors") {
  const auto unit = exhaustive_variance_fixed(Vector{1.0, 0.0, 0.0, 0.0}, 2);
  CHECK(rel_close(unit.mean, 1.0, 1e-14));
  CHECK(rel_close(unit.variance, 0.75, 1e-13));

  const auto ones = exhaustive_variance_fixed(Vector{1.0, 1.0, 1.0, 1.0}, 2);
  CHECK(rel_close(ones.mean, 4.0, 1e-14));
  CHECK(std::fabs(ones.variance) < 1e-13);

  const auto zero = exhaustive_variance_fixed(Vector(4, 0.0), 2);
  CHECK(zero.mean == 0.0);
  CHECK(zero.variance == 0.0);

  CHECK_THROWS_AS(exhaustive_variance_fixed(Vector(64, 1.0), 32), ConfigError);
}

TEST_CASE("distortion statistics") {
  CounterRng rng(515);
  std::vector<Vector> points;
  for (int k = 0; k < 10; ++k) points.push_back(random_vector(6, rng));

  // The identity projection keeps every pair in band.
  const auto perfect = distortion_stats(points, points, 0.1);
  CHECK(perfect.out_of_band_fraction == 0.0);
  CHECK(perfect.pairs == 45);
  CHECK(perfect.skipped == 0);

  // eps = 0 puts every pair out of band for a continuous projection.
  ProjectionModel model;
  model.kind = ModelKind::Gaussian;
  model.d = 6;
  model.m = 3;
  model.seed = 99;
  const auto projector = Projector::materialize(model);
  const auto projected = project_batch(projector, points);
  const auto all_out = distortion_stats(points, projected, 0.0);
  CHECK(all_out.out_of_band_fraction == 1.0);

  // Duplicates are skipped and counted separately.
  auto with_dup = points;
  with_dup.push_back(points.front());
  auto projected_dup = projected;
  projected_dup.push_back(projected.front());
  const auto skipped = distortion_stats(with_dup, projected_dup, 0.5);
  CHECK(skipped.skipped == 1);
  CHECK(skipped.pairs == 54);
}

TEST_SUITE_END();
