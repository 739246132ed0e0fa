#include "sbproj/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "sbproj/bounds.hpp"
#include "sbproj/error.hpp"
#include "sbproj/moments.hpp"
#include "sbproj/parallel.hpp"
#include "sbproj/projection.hpp"
#include "sbproj/rng.hpp"

namespace sbproj {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Rounds to 9 significant digits so JSON and CSV carry the same values.
double round9(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format9(v).c_str(), nullptr);
}

double sq_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double e : v) acc += e * e;
  return acc;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(const std::string& token, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(v))
    throw ConfigError(std::string(what) + ": cannot parse number '" + token + "'");
  return v;
}

std::size_t parse_size(const std::string& token, const char* what) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(token.c_str(), &end, 10);
  if (token.empty() || end != token.c_str() + token.size())
    throw ConfigError(std::string(what) + ": cannot parse integer '" + token + "'");
  return static_cast<std::size_t>(v);
}

struct Cell {
  ModelKind model;
  std::optional<double> p;
  std::optional<std::size_t> c;
};

bool needs_c(ModelKind kind) {
  return kind == ModelKind::FixedSparsity || kind == ModelKind::Bourgain;
}

// Expands models x grids into the record cells, in declaration order. With no
// c-grid, c-parameterized models sweep the p-grid via c = floor(d * p).
std::vector<Cell> expand_cells(const ExperimentConfig& cfg, std::size_t d) {
  std::vector<Cell> cells;
  for (ModelKind model : cfg.models) {
    if (model == ModelKind::Bernoulli) {
      for (double p : cfg.p_grid) cells.push_back({model, p, std::nullopt});
    } else if (needs_c(model)) {
      if (!cfg.c_grid.empty()) {
        for (std::size_t c : cfg.c_grid) cells.push_back({model, std::nullopt, c});
      } else {
        for (double p : cfg.p_grid) {
          const auto c = static_cast<std::size_t>(std::floor(static_cast<double>(d) * p));
          if (c < 1)
            throw ConfigError("config: derived c = floor(d*p) is 0 for p=" + format9(p));
          cells.push_back({model, p, c});
        }
      }
    } else {
      cells.push_back({model, std::nullopt, std::nullopt});
    }
  }
  return cells;
}

// Cell count without knowing d, for pre-data validation.
std::size_t count_cells(const ExperimentConfig& cfg) {
  std::size_t count = 0;
  for (ModelKind model : cfg.models) {
    if (model == ModelKind::Bernoulli) {
      count += cfg.p_grid.size();
    } else if (needs_c(model)) {
      count += cfg.c_grid.empty() ? cfg.p_grid.size() : cfg.c_grid.size();
    } else {
      count += 1;
    }
  }
  return count;
}

ProjectionModel make_model(const Cell& cell, std::size_t d, std::size_t m) {
  ProjectionModel model;
  model.kind = cell.model;
  model.d = d;
  model.m = m;
  if (cell.model == ModelKind::Bernoulli) model.p = cell.p.value();
  if (needs_c(cell.model)) model.c = cell.c.value();
  return model;
}

bool uses_data(ExperimentKind experiment) { return experiment != ExperimentKind::Bounds; }

}  // namespace

const char* to_string(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::Variance: return "variance";
    case ExperimentKind::Mse: return "mse";
    case ExperimentKind::Retrieval: return "retrieval";
    case ExperimentKind::Bounds: return "bounds";
    case ExperimentKind::Project: return "project";
  }
  return "unknown";
}

const char* to_string(ReportFormat format) noexcept {
  return format == ReportFormat::Csv ? "csv" : "json";
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.models.empty()) throw ConfigError("config: at least one model is required");
  if (cfg.out_path.empty()) throw ConfigError("config: output path is required");
  if (cfg.runs < 1) throw ConfigError("config: runs must be >= 1");

  const bool wants_p = std::any_of(cfg.models.begin(), cfg.models.end(), [&](ModelKind k) {
    return k == ModelKind::Bernoulli || (needs_c(k) && cfg.c_grid.empty());
  });
  if (wants_p && cfg.p_grid.empty())
    throw ConfigError("config: the selected models need a non-empty p grid (or a c grid)");
  for (double p : cfg.p_grid) {
    if (!(p > 0.0 && p <= 0.5)) throw ConfigError("config: p grid values must be in (0, 1/2]");
  }
  for (std::size_t c : cfg.c_grid) {
    if (c < 1) throw ConfigError("config: c grid values must be >= 1");
  }

  if (uses_data(cfg.experiment)) {
    const bool has_file = !cfg.data_path.empty();
    const bool has_synth = cfg.synthetic.has_value();
    if (has_file == has_synth)
      throw ConfigError("config: exactly one of a data path or a synthetic spec is required");
    if (has_synth) cfg.synthetic->validate();
    if (has_file && cfg.data_sparse && cfg.d < 1)
      throw ConfigError("config: sparse data loading requires d");
    if (cfg.m == 0 && !(cfg.m_ratio > 0.0 && cfg.m_ratio < 1.0))
      throw ConfigError("config: m is required, as an integer or a ratio in (0, 1)");
  } else {
    if (!cfg.data_path.empty() || cfg.synthetic.has_value())
      throw ConfigError("config: the bounds experiment takes no data source");
    if (cfg.d < 2) throw ConfigError("config: the bounds experiment requires d >= 2");
    if (!(cfg.eps > 0.0)) throw ConfigError("config: eps must be > 0");
    if (cfg.n_points < 2) throw ConfigError("config: n-points must be >= 2");
    for (ModelKind model : cfg.models) {
      if (model != ModelKind::Bernoulli && model != ModelKind::FixedSparsity)
        throw ConfigError("config: bounds experiment supports only bernoulli and fixed");
    }
  }

  switch (cfg.experiment) {
    case ExperimentKind::Variance:
      if (cfg.trials < 2) throw ConfigError("config: variance experiment needs trials >= 2");
      break;
    case ExperimentKind::Retrieval:
      if (cfg.r < 1) throw ConfigError("config: r must be >= 1");
      break;
    case ExperimentKind::Project:
      if (count_cells(cfg) != 1)
        throw ConfigError("config: project experiment takes exactly one model cell");
      if (!cfg.export_matrix_path.empty() && cfg.models.front() == ModelKind::Gaussian)
        throw ConfigError("config: dense gaussian matrices have no sparse export format");
      break;
    default: break;
  }
  if (cfg.experiment != ExperimentKind::Project && !cfg.export_matrix_path.empty())
    throw ConfigError("config: --export-matrix applies to the project experiment only");
}

namespace {

std::vector<Vector> resolve_data(const ExperimentConfig& cfg) {
  if (cfg.synthetic) return gen_synthetic(*cfg.synthetic);
  if (cfg.data_sparse) return load_sparse(cfg.data_path, cfg.d);
  return load_dense(cfg.data_path);
}

// Sample mean and (n-1)-divisor standard deviation.
std::pair<double, double> mean_std(const std::vector<double>& values) {
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double acc = 0.0;
  for (double v : values) acc += (v - mean) * (v - mean);
  return {mean, std::sqrt(acc / static_cast<double>(values.size() - 1))};
}

void run_variance(const ExperimentConfig& cfg, const std::vector<Vector>& samples,
                  const std::vector<Cell>& cells, std::size_t m, ExperimentReport& report) {
  report.value_columns = {"closed_form", "monte_carlo"};
  const std::size_t n = samples.size();
  const std::size_t d = samples.front().size();

  for (const Cell& cell : cells) {
    const ProjectionModel base = make_model(cell, d, m);

    double closed_form = kNaN;
    switch (cell.model) {
      case ModelKind::Bernoulli: {
        double acc = 0.0;
        for (const auto& x : samples) acc += var_bernoulli(x, m, base.p);
        closed_form = acc / static_cast<double>(n);
        break;
      }
      case ModelKind::FixedSparsity: {
        double acc = 0.0;
        for (const auto& x : samples) acc += var_fixed(x, m, d, base.c);
        closed_form = acc / static_cast<double>(n);
        break;
      }
      case ModelKind::Gaussian: {
        double acc = 0.0;
        for (const auto& x : samples) acc += var_gaussian(x, m);
        closed_form = acc / static_cast<double>(n);
        break;
      }
      default: break;  // no closed form for the signed baselines
    }

    // One fresh matrix per trial, shared across samples; per-sample Welford.
    // Trial seeds are shared across cells, pairing the models' estimates.
    std::vector<double> mean(n, 0.0);
    std::vector<double> m2(n, 0.0);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      ProjectionModel trial_model = base;
      trial_model.seed = substream(cfg.seed, t);
      const auto projector = Projector::materialize(trial_model);
      const std::size_t threshold =
          std::max<std::size_t>(2, 65536 / std::max<std::size_t>(1, m * d));
      parallel_for(n, [&](std::size_t i) {
        const double z = sq_norm(projector.project(samples[i]));
        const double delta = z - mean[i];
        mean[i] += delta / static_cast<double>(t + 1);
        m2[i] += delta * (z - mean[i]);
      }, threshold);
    }
    double mc = 0.0;
    for (std::size_t i = 0; i < n; ++i) mc += m2[i] / static_cast<double>(cfg.trials - 1);
    mc /= static_cast<double>(n);

    ExperimentRecord record{cell.model, cell.p, cell.c, {}};
    record.values = {{"closed_form", closed_form}, {"monte_carlo", mc}};
    report.records.push_back(std::move(record));
  }
}

void run_pairwise_experiment(const ExperimentConfig& cfg, const std::vector<Vector>& samples,
                             const std::vector<Cell>& cells, std::size_t m,
                             ExperimentReport& report) {
  const bool retrieval = cfg.experiment == ExperimentKind::Retrieval;
  report.value_columns =
      retrieval ? std::vector<std::string>{"error_mean", "error_std"}
                : std::vector<std::string>{"mse_mean", "mse_std"};

  const DistanceMatrix dd = pairwise_distances(samples);
  if (retrieval && cfg.r >= samples.size())
    throw ConfigError("config: retrieval needs r < n");

  for (const Cell& cell : cells) {
    const ProjectionModel model = make_model(cell, samples.front().size(), m);
    const std::vector<double> series =
        retrieval ? retrieval_series(samples, dd, model, cfg.r, cfg.runs, cfg.seed)
                  : mse_series(samples, dd, model, cfg.runs, cfg.seed);
    const auto [mean, stddev] = mean_std(series);

    ExperimentRecord record{cell.model, cell.p, cell.c, {}};
    record.values = {{report.value_columns[0], mean}, {report.value_columns[1], stddev}};
    report.records.push_back(std::move(record));
  }
}

void run_bounds(const ExperimentConfig& cfg, ExperimentReport& report) {
  report.value_columns = {"min_m", "two_sided_bound"};
  const auto cells = expand_cells(cfg, cfg.d);
  for (const Cell& cell : cells) {
    std::size_t min_m = 0;
    double bound = kNaN;
    if (cell.model == ModelKind::Bernoulli) {
      min_m = min_m_bernoulli(cfg.n_points, cfg.eps, cell.p.value());
      bound = bernoulli_two_sided(cfg.eps, min_m, cfg.d, cell.p.value());
    } else {
      min_m = min_m_fixed(cfg.n_points, cfg.eps, cfg.d, cell.c.value());
      bound = fixed_two_sided(cfg.eps, min_m, cfg.d, cell.c.value());
    }
    ExperimentRecord record{cell.model, cell.p, cell.c, {}};
    record.values = {{"min_m", static_cast<double>(min_m)}, {"two_sided_bound", bound}};
    report.records.push_back(std::move(record));
  }
}

void export_matrix_file(const ExperimentConfig& cfg, const ProjectionModel& model) {
  std::ostringstream body;
  switch (model.kind) {
    case ModelKind::Bernoulli:
      write_matrix(body, gen_bernoulli(model.d, model.m, model.p, model.seed));
      break;
    case ModelKind::FixedSparsity:
      write_matrix(body, gen_fixed_sparsity(model.d, model.m, model.c, model.seed));
      break;
    case ModelKind::Achlioptas:
      write_matrix(body, gen_achlioptas(model.d, model.m, model.seed));
      break;
    case ModelKind::Ping:
      write_matrix(body, gen_ping(model.d, model.m, model.seed));
      break;
    case ModelKind::Bourgain:
      write_matrix(body, gen_bourgain(model.d, model.m, model.c, model.seed));
      break;
    default:
      throw ConfigError("export: dense gaussian matrices have no sparse export format");
  }

  const std::filesystem::path tmp = cfg.export_matrix_path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << body.str();
    if (!out) {
      std::error_code ignore;
      std::filesystem::remove(tmp, ignore);
      throw DataError("cannot write matrix export '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, cfg.export_matrix_path);
}

void run_project(const ExperimentConfig& cfg, const std::vector<Vector>& samples,
                 const std::vector<Cell>& cells, std::size_t m, ExperimentReport& report) {
  ProjectionModel model = make_model(cells.front(), samples.front().size(), m);
  model.seed = substream(cfg.seed, 0);
  const auto projector = Projector::materialize(model);
  report.projected = project_batch(projector, samples);

  ExperimentRecord record{cells.front().model, cells.front().p, cells.front().c, {}};
  report.records.push_back(std::move(record));
  if (!cfg.export_matrix_path.empty()) export_matrix_file(cfg, model);
}

}  // namespace

std::vector<double> mse_series(const std::vector<Vector>& samples, const DistanceMatrix& dd,
                               ProjectionModel model, std::size_t runs, std::uint64_t seed) {
  std::vector<double> out(runs);
  parallel_for(runs, [&](std::size_t k) {
    ProjectionModel run_model = model;
    run_model.seed = substream(seed, k);
    const auto projector = Projector::materialize(run_model);
    std::vector<Vector> projected(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) projected[i] = projector.project(samples[i]);
    out[k] = distance_mse(dd, pairwise_distances(projected));
  });
  return out;
}

std::vector<double> retrieval_series(const std::vector<Vector>& samples,
                                     const DistanceMatrix& dd, ProjectionModel model,
                                     std::size_t r, std::size_t runs, std::uint64_t seed) {
  std::vector<double> out(runs);
  parallel_for(runs, [&](std::size_t k) {
    ProjectionModel run_model = model;
    run_model.seed = substream(seed, k);
    const auto projector = Projector::materialize(run_model);
    std::vector<Vector> projected(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) projected[i] = projector.project(samples[i]);
    out[k] = mean_retrieval_error(dd, pairwise_distances(projected), r).mean;
  });
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.config = cfg;

  if (cfg.experiment == ExperimentKind::Bounds) {
    report.data_d = cfg.d;
    run_bounds(cfg, report);
  } else {
    const std::vector<Vector> samples = resolve_data(cfg);
    if (samples.empty()) throw DataError("data: the sample set is empty");
    const std::size_t d = samples.front().size();
    if (cfg.d != 0 && cfg.d != d)
      throw ConfigError("config: d=" + std::to_string(cfg.d) +
                        " does not match the data dimension " + std::to_string(d));
    if (d < 2) throw ConfigError("config: data dimension must be >= 2");

    std::size_t m = cfg.m;
    if (m == 0) {
      m = static_cast<std::size_t>(
          std::llround(cfg.m_ratio * static_cast<double>(d)));
      if (m < 1) m = 1;
    }
    if (m >= d) throw ConfigError("config: projection experiments require m < d");

    report.data_n = samples.size();
    report.data_d = d;
    report.resolved_m = m;

    const auto cells = expand_cells(cfg, d);
    for (const Cell& cell : cells) make_model(cell, d, m).validate();

    switch (cfg.experiment) {
      case ExperimentKind::Variance: run_variance(cfg, samples, cells, m, report); break;
      case ExperimentKind::Mse:
      case ExperimentKind::Retrieval: run_pairwise_experiment(cfg, samples, cells, m, report); break;
      case ExperimentKind::Project: run_project(cfg, samples, cells, m, report); break;
      default: break;
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_csv(const ExperimentReport& report) {
  std::ostringstream out;
  if (report.config.experiment == ExperimentKind::Project) {
    for (const auto& row : report.projected) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) out << ',';
        out << format9(row[k]);
      }
      out << '\n';
    }
    return out.str();
  }

  out << "model,p,c";
  for (const auto& column : report.value_columns) out << ',' << column;
  out << '\n';
  for (const auto& record : report.records) {
    out << to_string(record.model) << ',';
    if (record.p) out << format9(*record.p);
    out << ',';
    if (record.c) out << *record.c;
    for (const auto& [name, value] : record.values) out << ',' << format9(value);
    out << '\n';
  }
  return out.str();
}

std::string report_json(const ExperimentReport& report) {
  using nlohmann::json;
  const ExperimentConfig& cfg = report.config;

  json config;
  config["experiment"] = to_string(cfg.experiment);
  json models = json::array();
  for (ModelKind model : cfg.models) models.push_back(to_string(model));
  config["models"] = models;
  config["d"] = cfg.d;
  config["m"] = cfg.m;
  config["m_ratio"] = round9(cfg.m_ratio);
  config["p_grid"] = cfg.p_grid;
  config["c_grid"] = cfg.c_grid;
  config["r"] = cfg.r;
  config["runs"] = cfg.runs;
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  config["eps"] = round9(cfg.eps);
  config["n_points"] = cfg.n_points;
  config["data"] = cfg.data_path.empty() ? json(nullptr) : json(cfg.data_path.string());
  config["data_format"] = cfg.data_sparse ? "sparse" : "dense";
  if (cfg.synthetic) {
    config["synthetic"] = {
        {"kind", cfg.synthetic->kind == SyntheticSpec::Kind::DenseGaussian ? "dense-gaussian"
                                                                           : "sparse-nonnegative"},
        {"n", cfg.synthetic->n},
        {"d", cfg.synthetic->d},
        {"density", round9(cfg.synthetic->density)},
        {"seed", cfg.synthetic->seed}};
  } else {
    config["synthetic"] = nullptr;
  }
  config["format"] = to_string(cfg.format);

  json records = json::array();
  for (const auto& record : report.records) {
    json item;
    item["model"] = to_string(record.model);
    item["p"] = record.p ? json(round9(*record.p)) : json(nullptr);
    item["c"] = record.c ? json(*record.c) : json(nullptr);
    for (const auto& [name, value] : record.values) item[name] = round9(value);
    records.push_back(std::move(item));
  }

  json root;
  root["config"] = std::move(config);
  root["data"] = {{"n", report.data_n}, {"d", report.data_d}, {"m", report.resolved_m}};
  root["records"] = std::move(records);
  if (cfg.experiment == ExperimentKind::Project) {
    json rows = json::array();
    for (const auto& row : report.projected) {
      json r = json::array();
      for (double v : row) r.push_back(round9(v));
      rows.push_back(std::move(r));
    }
    root["projected"] = std::move(rows);
  }
  root["timing_seconds"] = report.elapsed_seconds;
  return root.dump(2) + "\n";
}

void write_report(const ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const std::string body =
      cfg.format == ReportFormat::Csv ? report_csv(report) : report_json(report);

  const std::filesystem::path tmp = cfg.out_path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << body;
    if (!out) {
      std::error_code ignore;
      std::filesystem::remove(tmp, ignore);
      throw DataError("cannot write report '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, cfg.out_path);
}

ExperimentKind parse_experiment(const std::string& name) {
  if (name == "variance") return ExperimentKind::Variance;
  if (name == "mse") return ExperimentKind::Mse;
  if (name == "retrieval") return ExperimentKind::Retrieval;
  if (name == "bounds") return ExperimentKind::Bounds;
  if (name == "project") return ExperimentKind::Project;
  throw ConfigError("unknown experiment '" + name +
                    "' (expected variance|mse|retrieval|bounds|project)");
}

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw ConfigError("unknown format '" + name + "' (expected csv|json)");
}

ModelKind parse_model(const std::string& name) {
  if (name == "bernoulli") return ModelKind::Bernoulli;
  if (name == "fixed" || name == "fix-sparsity") return ModelKind::FixedSparsity;
  if (name == "gaussian") return ModelKind::Gaussian;
  if (name == "achlioptas") return ModelKind::Achlioptas;
  if (name == "ping") return ModelKind::Ping;
  if (name == "bourgain") return ModelKind::Bourgain;
  throw ConfigError("unknown model '" + name + "'");
}

std::vector<ModelKind> parse_model_list(const std::string& spec) {
  std::vector<ModelKind> models;
  for (const auto& token : split(spec, ',')) models.push_back(parse_model(token));
  return models;
}

std::vector<double> parse_p_grid(const std::string& spec) {
  std::vector<double> grid;
  for (const auto& token : split(spec, ',')) grid.push_back(parse_double(token, "p-grid"));
  return grid;
}

std::vector<std::size_t> parse_c_grid(const std::string& spec) {
  std::vector<std::size_t> grid;
  for (const auto& token : split(spec, ',')) grid.push_back(parse_size(token, "c-grid"));
  return grid;
}

SyntheticSpec parse_synthetic_spec(const std::string& spec, std::uint64_t seed) {
  const auto parts = split(spec, ',');
  if (parts.size() < 3 || parts.size() > 4)
    throw ConfigError("synthetic spec must be kind,n,d[,density]");
  SyntheticSpec synth;
  if (parts[0] == "dense-gaussian") {
    synth.kind = SyntheticSpec::Kind::DenseGaussian;
  } else if (parts[0] == "sparse-nonnegative") {
    synth.kind = SyntheticSpec::Kind::SparseNonnegative;
  } else {
    throw ConfigError("unknown synthetic kind '" + parts[0] +
                      "' (expected dense-gaussian|sparse-nonnegative)");
  }
  synth.n = parse_size(parts[1], "synthetic n");
  synth.d = parse_size(parts[2], "synthetic d");
  if (parts.size() == 4) synth.density = parse_double(parts[3], "synthetic density");
  synth.seed = seed;
  synth.validate();
  return synth;
}

void parse_m_spec(const std::string& spec, std::size_t& m, double& m_ratio) {
  const double v = parse_double(spec, "m");
  if (v > 0.0 && v < 1.0) {
    m = 0;
    m_ratio = v;
    return;
  }
  if (v >= 1.0 && v == std::floor(v)) {
    m = static_cast<std::size_t>(v);
    m_ratio = 0.0;
    return;
  }
  throw ConfigError("m must be a positive integer or a ratio in (0, 1), got '" + spec + "'");
}

}  // namespace sbproj
