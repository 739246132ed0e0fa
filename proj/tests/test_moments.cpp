#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "sbproj/error.hpp"
#include "sbproj/eval.hpp"
#include "sbproj/moments.hpp"

using namespace sbproj;
using test::random_vector;
using test::rel_close;

TEST_SUITE_BEGIN("moments");

TEST_CASE("naive bias values") {
  CHECK(naive_bias(Vector{1.0, -1.0}, Vector{0.0, 0.0}, 0.3) == 0.0);
  CHECK(naive_bias(Vector{1.0, 1.0}, Vector{0.0, 0.0}, 0.5) == 4.0);
  CHECK(rel_close(naive_bias(Vector{1.0, 0.0}, Vector{0.0, 0.0}, 0.25), 1.0 / 3.0, 1e-15));
  CHECK_THROWS_AS(naive_bias(Vector{1.0}, Vector{1.0, 2.0}, 0.5), ConfigError);
  CHECK_THROWS_AS(naive_bias(Vector{1.0}, Vector{2.0}, 0.6), ConfigError);
}

TEST_CASE("bernoulli fourth moment values") {
  CHECK(rel_close(fourth_moment_bernoulli(Vector{1.0, 0.0, 0.0}, 0.5), 0.0625, 1e-15));
  CHECK(fourth_moment_bernoulli(Vector{0.0, 0.0}, 0.5) == 0.0);
  CHECK(rel_close(fourth_moment_bernoulli(Vector{1.0, 1.0}, 0.5), 0.5, 1e-15));
}

TEST_CASE("bernoulli variance values") {
  CHECK(var_bernoulli(Vector{1.0, 0.0, 0.0, 0.0}, 1, 0.5) == 0.0);
  CHECK(rel_close(var_bernoulli(Vector{1.0, 1.0}, 1, 0.5), 4.0, 1e-15));
  CHECK(rel_close(var_bernoulli(Vector{1.0, 0.0}, 1, 0.25), 4.0 / 3.0, 1e-14));
  CHECK_THROWS_AS(var_bernoulli(Vector{1.0}, 0, 0.5), ConfigError);
  CHECK_THROWS_AS(var_bernoulli(Vector{1.0}, 1, 0.75), ConfigError);
}

TEST_CASE("gaussian variance values") {
  CHECK(rel_close(var_gaussian(Vector{1.0, 0.0}, 2), 1.0, 1e-15));
  CHECK(var_gaussian(Vector{0.0, 0.0}, 5) == 0.0);
  CHECK(rel_close(var_gaussian(Vector{3.0, 4.0}, 10), 125.0, 1e-15));
}

TEST_CASE("fixed-sparsity coefficients at small instances") {
  // Stored values are divided by C(d, c); scale back for comparison.
  const auto k42 = fixed_coeffs(4, 2);
  CHECK(rel_close(k42.alpha * 6.0, 3.0, 1e-14));
  CHECK(rel_close(k42.beta * 6.0, -4.0, 1e-14));
  CHECK(k42.gamma == 0.0);
  CHECK(rel_close(k42.theta * 6.0, 4.0, 1e-14));
  CHECK(k42.lambda == 0.0);

  const auto k63 = fixed_coeffs(6, 3);
  CHECK(rel_close(k63.alpha * 20.0, 6.0, 1e-14));
  CHECK(rel_close(k63.beta * 20.0, -6.0, 1e-14));
  CHECK(k63.gamma == 0.0);
  CHECK(rel_close(k63.theta * 20.0, 4.0, 1e-14));
  CHECK(rel_close(k63.lambda * 20.0, 6.0, 1e-14));

  // c=1: only C(d-1, 0)=1 survives.
  for (std::size_t d : {2, 5, 9, 100}) {
    const auto k = fixed_coeffs(d, 1);
    CHECK(k.alpha == 0.0);
    CHECK(k.gamma == 0.0);
    CHECK(k.theta == 0.0);
    CHECK(k.lambda == 0.0);
    CHECK(rel_close(k.beta * static_cast<double>(d), 1.0, 1e-14));
  }

  // No overflow at very large d.
  const auto huge = fixed_coeffs(1000000, 500000);
  for (double v : {huge.alpha, huge.beta, huge.gamma, huge.theta, huge.lambda}) {
    CHECK(std::isfinite(v));
  }
  CHECK_THROWS_AS(fixed_coeffs(4, 3), ConfigError);
}

TEST_CASE("fixed-sparsity variance anchors") {
  CHECK(rel_close(var_fixed(Vector{1.0, 0.0, 0.0, 0.0}, 1, 4, 2), 0.75, 1e-12));
  CHECK(std::fabs(var_fixed(Vector{1.0, 1.0, 1.0, 1.0}, 1, 4, 2)) < 1e-12 * 16.0);
  CHECK(var_fixed(Vector(4, 0.0), 1, 4, 2) == 0.0);
}

TEST_CASE("fixed-sparsity expected squared norm (unscaled)") {
  CHECK(rel_close(expected_sq_norm_fixed_unscaled(Vector{1.0, 0.0, 0.0, 0.0}, 4, 2), 1.0 / 3.0,
                  1e-15));
  CHECK(expected_sq_norm_fixed_unscaled(Vector(4, 0.0), 4, 2) == 0.0);
  CHECK(rel_close(expected_sq_norm_fixed_unscaled(Vector{1.0, 1.0, 1.0, 1.0}, 4, 2), 4.0 / 3.0,
                  1e-15));
}

TEST_CASE("fixed-sparsity fourth moment bound") {
  Vector unit(10, 0.0);
  unit[0] = 1.0;
  CHECK(rel_close(fourth_moment_bound_fixed(unit, 10, 5), 2.5, 1e-15));
  CHECK(fourth_moment_bound_fixed(Vector(10, 0.0), 10, 5) == 0.0);
  CHECK_THROWS_AS(fourth_moment_bound_fixed(Vector(12, 1.0), 12, 4), ConfigError);

  // Exhaustive fourth moment of the uncentered-scale estimator stays under
  // the bound on random inputs (d=12, c=5, C(12,5)=792 subsets).
  CounterRng rng(404);
  for (int iter = 0; iter < 10; ++iter) {
    const auto x = random_vector(12, rng, -2.0, 2.0);
    const auto centered = center_fixed(x, 5);
    double acc = 0.0;
    std::size_t count = 0;
    auto subset = test::first_combination(5);
    do {
      double sum = 0.0;
      for (auto j : subset) sum += centered.y[j];
      acc += sum * sum * sum * sum;
      ++count;
    } while (test::next_combination(subset, 12));
    const double fourth = acc / static_cast<double>(count);
    CHECK(fourth <= fourth_moment_bound_fixed(x, 12, 5) * (1.0 + 1e-12));
  }
}

TEST_CASE("bernoulli closed form matches the exhaustive oracle") {
  CounterRng rng(808);
  for (std::size_t d = 2; d <= 9; ++d) {
    for (double p : {0.1, 0.25, 0.5}) {
      for (int iter = 0; iter < 10; ++iter) {
        const auto x = random_vector(d, rng, -1.5, 1.5);
        const auto oracle = exhaustive_variance_bernoulli(x, p);
        const double sq = norm_profile(x).sq_norm;
        CHECK(rel_close(var_bernoulli(x, 1, p), oracle.variance, 1e-9, 1e-9 * sq * sq));
        CHECK(rel_close(oracle.mean, sq, 1e-12));
      }
    }
  }
}

TEST_CASE("fixed closed form matches the exhaustive oracle") {
  CounterRng rng(909);
  for (std::size_t d = 2; d <= 9; ++d) {
    for (std::size_t c = 1; 2 * c <= d; ++c) {
      for (int iter = 0; iter < 10; ++iter) {
        const auto x = random_vector(d, rng, -1.5, 1.5);
        const auto oracle = exhaustive_variance_fixed(x, c);
        const double sq = norm_profile(x).sq_norm;
        CHECK(rel_close(var_fixed(x, 1, d, c), oracle.variance, 1e-9, 1e-9 * sq * sq));
        CHECK(rel_close(oracle.mean, sq, 1e-12));
      }
    }
  }
}

TEST_CASE("bernoulli variance decreases in p") {
  CounterRng rng(1010);
  for (int iter = 0; iter < 20; ++iter) {
    const auto x = random_vector(3 + rng.next_below(12), rng, -2.0, 2.0);
    const std::size_t m = 1 + rng.next_below(8);
    double previous = var_bernoulli(x, m, 0.02);
    for (double p = 0.04; p <= 0.501; p += 0.02) {
      const double current = var_bernoulli(x, m, std::min(p, 0.5));
      CHECK(current <= previous * (1.0 + 1e-12) + 1e-300);
      previous = current;
    }
  }
}

TEST_CASE("bernoulli variance dominates gaussian for p above the threshold") {
  // (3 - sqrt(3)) / 6 ~ 0.2113; anything above gives a strictly smaller variance.
  CounterRng rng(1111);
  for (int iter = 0; iter < 50; ++iter) {
    const auto x = random_vector(2 + rng.next_below(20), rng, -2.0, 2.0);
    if (norm_profile(x).norm4_4 == 0.0) continue;
    const std::size_t m = 1 + rng.next_below(5);
    for (double p : {0.22, 0.3, 0.4, 0.5}) {
      CHECK(var_bernoulli(x, m, p) < var_gaussian(x, m));
    }
  }
}

TEST_SUITE_END();
