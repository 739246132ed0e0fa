#include "sbproj/data.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include "sbproj/error.hpp"
#include "sbproj/rng.hpp"

namespace sbproj {

namespace {

std::string line_tag(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

// Full-token strtod: trailing garbage and non-finite values are errors.
double parse_value(const std::string& token, const std::filesystem::path& path,
                   std::size_t line) {
  if (token.empty()) throw DataError(line_tag(path, line) + ": empty value token");
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size())
    throw DataError(line_tag(path, line) + ": unparseable value '" + token + "'");
  if (!std::isfinite(v))
    throw DataError(line_tag(path, line) + ": non-finite value '" + token + "'");
  return v;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return in;
}

void write_value(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

void SyntheticSpec::validate() const {
  if (n < 1) throw ConfigError("synthetic: n must be >= 1");
  if (d < 1) throw ConfigError("synthetic: d must be >= 1");
  if (kind == Kind::SparseNonnegative) {
    if (!(density > 0.0 && density <= 1.0))
      throw ConfigError("synthetic: density must be in (0, 1]");
    if (density * static_cast<double>(d) < 1.0)
      throw ConfigError("synthetic: density * d must be >= 1");
  }
}

std::vector<Vector> load_dense(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<Vector> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) throw DataError(line_tag(path, line_no) + ": empty row");
    Vector x;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      const std::string token = line.substr(start, comma - start);
      x.push_back(parse_value(token, path, line_no));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!samples.empty() && x.size() != samples.front().size())
      throw DataError(line_tag(path, line_no) + ": ragged row, expected " +
                      std::to_string(samples.front().size()) + " values, got " +
                      std::to_string(x.size()));
    samples.push_back(std::move(x));
  }
  return samples;
}

std::vector<Vector> load_sparse(const std::filesystem::path& path, std::size_t d) {
  if (d < 1) throw ConfigError("load_sparse: d must be >= 1");
  auto in = open_input(path);
  std::vector<Vector> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Vector x(d, 0.0);
    long long prev_index = -1;
    std::size_t start = 0;
    while (start < line.size()) {
      std::size_t space = line.find(' ', start);
      if (space == std::string::npos) space = line.size();
      const std::string token = line.substr(start, space - start);
      start = space + 1;
      if (token.empty()) continue;

      const std::size_t colon = token.find(':');
      if (colon == std::string::npos || colon == 0)
        throw DataError(line_tag(path, line_no) + ": malformed token '" + token + "'");
      char* end = nullptr;
      const std::string index_str = token.substr(0, colon);
      const unsigned long long index = std::strtoull(index_str.c_str(), &end, 10);
      if (end != index_str.c_str() + index_str.size())
        throw DataError(line_tag(path, line_no) + ": malformed index in '" + token + "'");
      if (index >= d)
        throw DataError(line_tag(path, line_no) + ": index " + std::to_string(index) +
                        " out of range for d=" + std::to_string(d));
      if (static_cast<long long>(index) <= prev_index)
        throw DataError(line_tag(path, line_no) + ": indices must be strictly ascending");
      prev_index = static_cast<long long>(index);
      x[index] = parse_value(token.substr(colon + 1), path, line_no);
    }
    samples.push_back(std::move(x));
  }
  return samples;
}

std::vector<Vector> gen_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  std::vector<Vector> samples(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    CounterRng rng(substream(spec.seed, i));
    Vector x(spec.d, 0.0);
    if (spec.kind == SyntheticSpec::Kind::DenseGaussian) {
      for (auto& v : x) v = rng.next_gaussian();
    } else {
      for (auto& v : x) {
        if (rng.next_unit() < spec.density) v = rng.next_unit_positive();
      }
    }
    samples[i] = std::move(x);
  }
  return samples;
}

void save_dense(std::ostream& os, const std::vector<Vector>& samples) {
  for (const auto& x : samples) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (k) os << ',';
      write_value(os, x[k]);
    }
    os << '\n';
  }
}

void save_sparse(std::ostream& os, const std::vector<Vector>& samples) {
  for (const auto& x : samples) {
    bool first = true;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0.0) continue;
      if (!first) os << ' ';
      os << k << ':';
      write_value(os, x[k]);
      first = false;
    }
    os << '\n';
  }
}

}  // namespace sbproj
