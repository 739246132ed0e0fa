#include "sbproj/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <unordered_set>

#include "sbproj/error.hpp"
#include "sbproj/parallel.hpp"

namespace sbproj {

namespace {

// Parallel row generation only pays off once the total work is substantial.
std::size_t row_threshold(std::size_t d) {
  return std::max<std::size_t>(2, 65536 / std::max<std::size_t>(1, d));
}

void check_dims(std::size_t d, std::size_t m, const char* who) {
  if (d < 1) throw ConfigError(std::string(who) + ": d must be >= 1");
  if (m < 1) throw ConfigError(std::string(who) + ": m must be >= 1");
}

// Ternary {+1, 0, -1} row with P(+1) = P(-1) = half_density.
std::vector<SignedSparseMatrix::Entry> ternary_row(std::size_t d, double half_density,
                                                   CounterRng& rng) {
  std::vector<SignedSparseMatrix::Entry> row;
  for (std::size_t j = 0; j < d; ++j) {
    const double u = rng.next_unit();
    if (u < half_density) {
      row.push_back({static_cast<std::uint32_t>(j), +1});
    } else if (u < 2.0 * half_density) {
      row.push_back({static_cast<std::uint32_t>(j), -1});
    }
  }
  return row;
}

}  // namespace

SparseBinaryMatrix gen_bernoulli(std::size_t d, std::size_t m, double p, std::uint64_t seed) {
  check_dims(d, m, "gen_bernoulli");
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("gen_bernoulli: p must be in (0, 1)");

  SparseBinaryMatrix w{ModelKind::Bernoulli, d, m, p, 0, seed, {}};
  w.rows.resize(m);
  parallel_for(m, [&](std::size_t i) {
    CounterRng rng(substream(seed, i));
    auto& row = w.rows[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (rng.next_unit() < p) row.push_back(static_cast<std::uint32_t>(j));
    }
  }, row_threshold(d));
  return w;
}

std::vector<std::uint32_t> sample_c_subset(std::size_t d, std::size_t c, CounterRng& rng) {
  if (c < 1 || c > d) throw ConfigError("sample_c_subset: need 1 <= c <= d");

  // Floyd: for t = d-c .. d-1 draw uniformly from [0, t]; on collision the
  // forced element t is inserted instead. Uniform over all C(d, c) subsets.
  std::unordered_set<std::uint32_t> chosen;
  chosen.reserve(2 * c);
  for (std::size_t t = d - c; t < d; ++t) {
    const auto candidate = static_cast<std::uint32_t>(rng.next_below(t + 1));
    if (!chosen.insert(candidate).second) chosen.insert(static_cast<std::uint32_t>(t));
  }
  std::vector<std::uint32_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

SparseBinaryMatrix gen_fixed_sparsity(std::size_t d, std::size_t m, std::size_t c,
                                      std::uint64_t seed) {
  check_dims(d, m, "gen_fixed_sparsity");
  if (c < 1 || 2 * c > d) throw ConfigError("gen_fixed_sparsity: c must be in [1, d/2]");

  SparseBinaryMatrix w{ModelKind::FixedSparsity, d, m, 0.0, c, seed, {}};
  w.rows.resize(m);
  parallel_for(m, [&](std::size_t i) {
    CounterRng rng(substream(seed, i));
    w.rows[i] = sample_c_subset(d, c, rng);
  }, row_threshold(c));
  return w;
}

DenseMatrix gen_gaussian(std::size_t d, std::size_t m, std::uint64_t seed) {
  check_dims(d, m, "gen_gaussian");

  DenseMatrix w{d, m, seed, {}};
  w.values.resize(m * d);
  parallel_for(m, [&](std::size_t i) {
    CounterRng rng(substream(seed, i));
    double* row = w.values.data() + i * d;
    for (std::size_t j = 0; j < d; ++j) row[j] = rng.next_gaussian();
  }, row_threshold(d));
  return w;
}

SignedSparseMatrix gen_achlioptas(std::size_t d, std::size_t m, std::uint64_t seed) {
  check_dims(d, m, "gen_achlioptas");

  SignedSparseMatrix w{ModelKind::Achlioptas, d, m, 0, seed, {}};
  w.rows.resize(m);
  parallel_for(m, [&](std::size_t i) {
    CounterRng rng(substream(seed, i));
    w.rows[i] = ternary_row(d, 1.0 / 6.0, rng);
  }, row_threshold(d));
  return w;
}

SignedSparseMatrix gen_ping(std::size_t d, std::size_t m, std::uint64_t seed) {
  check_dims(d, m, "gen_ping");

  SignedSparseMatrix w{ModelKind::Ping, d, m, 0, seed, {}};
  w.rows.resize(m);
  const double half_density = 0.5 / std::sqrt(static_cast<double>(d));
  parallel_for(m, [&](std::size_t i) {
    CounterRng rng(substream(seed, i));
    w.rows[i] = ternary_row(d, half_density, rng);
  }, row_threshold(d));
  return w;
}

SignedSparseMatrix gen_bourgain(std::size_t d, std::size_t m, std::size_t c,
                                std::uint64_t seed) {
  check_dims(d, m, "gen_bourgain");
  if (c < 1 || c > d) throw ConfigError("gen_bourgain: need 1 <= c <= d");

  SignedSparseMatrix w{ModelKind::Bourgain, d, m, c, seed, {}};
  w.rows.resize(m);
  parallel_for(m, [&](std::size_t i) {
    CounterRng rng(substream(seed, i));
    const auto support = sample_c_subset(d, c, rng);
    auto& row = w.rows[i];
    row.reserve(c);
    for (auto j : support) {
      const std::int8_t sign = (rng.next_u64() & 1u) ? std::int8_t{+1} : std::int8_t{-1};
      row.push_back({j, sign});
    }
  }, row_threshold(c));
  return w;
}

namespace {

std::string format_param(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  return buf;
}

}  // namespace

void write_matrix(std::ostream& os, const SparseBinaryMatrix& w) {
  const std::string param =
      w.kind == ModelKind::Bernoulli ? format_param(w.p) : std::to_string(w.c);
  os << to_string(w.kind) << ' ' << w.d << ' ' << w.m << ' ' << param << ' ' << w.seed << '\n';
  for (const auto& row : w.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ' ';
      os << row[k];
    }
    os << '\n';
  }
}

void write_matrix(std::ostream& os, const SignedSparseMatrix& w) {
  const std::string param = w.kind == ModelKind::Bourgain ? std::to_string(w.c) : "-";
  os << to_string(w.kind) << ' ' << w.d << ' ' << w.m << ' ' << param << ' ' << w.seed << '\n';
  for (const auto& row : w.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ' ';
      os << row[k].index << (row[k].sign > 0 ? ":+1" : ":-1");
    }
    os << '\n';
  }
}

}  // namespace sbproj
