#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbproj/core.hpp"
#include "sbproj/data.hpp"
#include "sbproj/eval.hpp"

namespace sbproj {

enum class ExperimentKind { Variance, Mse, Retrieval, Bounds, Project };
enum class ReportFormat { Csv, Json };

const char* to_string(ExperimentKind kind) noexcept;
const char* to_string(ReportFormat format) noexcept;

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Variance;
  std::vector<ModelKind> models;
  std::size_t d = 0;       // 0 = resolve from the data source
  std::size_t m = 0;       // explicit output dimension, or
  double m_ratio = 0.0;    // m = round(m_ratio * d) when in (0, 1)
  std::vector<double> p_grid;
  std::vector<std::size_t> c_grid;  // empty = derive c = floor(d * p) from p_grid
  std::size_t r = 10;
  std::size_t runs = 100;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  double eps = 0.1;              // bounds experiment
  std::size_t n_points = 10000;  // bounds experiment: JL point count
  std::filesystem::path data_path;
  bool data_sparse = false;  // load data_path with the sparse loader
  std::optional<SyntheticSpec> synthetic;
  std::filesystem::path out_path;
  ReportFormat format = ReportFormat::Csv;
  std::filesystem::path export_matrix_path;  // project experiment, optional
};

// One (model, parameter) cell of the experiment table.
struct ExperimentRecord {
  ModelKind model{};
  std::optional<double> p;
  std::optional<std::size_t> c;
  std::vector<std::pair<std::string, double>> values;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t data_n = 0;
  std::size_t data_d = 0;
  std::size_t resolved_m = 0;
  std::vector<std::string> value_columns;
  std::vector<ExperimentRecord> records;
  std::vector<Vector> projected;  // project experiment payload
  double elapsed_seconds = 0.0;
};

/// Checks everything that can be checked without touching data; throws
/// ConfigError on the first violation.
void validate_config(const ExperimentConfig& cfg);

/// Runs the configured experiment. Apart from elapsed_seconds the report is a
/// pure function of the config.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Serialized report. CSV carries no timing, so identical configs produce
// identical bytes; JSON additionally echoes the config and timing.
std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

/// Writes the report to config.out_path in config.format. The file is staged
/// with a .tmp suffix and renamed, so partial outputs are never left behind.
void write_report(const ExperimentReport& report);

/// Per-run distance-MSE of one model cell against dd. Run k projects with
/// matrix seed substream(seed, k); every cell shares the run seeds, so
/// cross-model comparisons on the same run index are paired through common
/// random draws.
std::vector<double> mse_series(const std::vector<Vector>& samples, const DistanceMatrix& dd,
                               ProjectionModel model, std::size_t runs, std::uint64_t seed);

/// Per-run mean retrieval error of one model cell, seeded as mse_series.
std::vector<double> retrieval_series(const std::vector<Vector>& samples,
                                     const DistanceMatrix& dd, ProjectionModel model,
                                     std::size_t r, std::size_t runs, std::uint64_t seed);

// CLI argument parsing; each throws ConfigError with a usable message.
ExperimentKind parse_experiment(const std::string& name);
ReportFormat parse_format(const std::string& name);
ModelKind parse_model(const std::string& name);
std::vector<ModelKind> parse_model_list(const std::string& spec);
std::vector<double> parse_p_grid(const std::string& spec);
std::vector<std::size_t> parse_c_grid(const std::string& spec);
SyntheticSpec parse_synthetic_spec(const std::string& spec, std::uint64_t seed);

/// `--m` accepts an integer dimension or a ratio in (0, 1); the ratio form
/// resolves to round(ratio * d) once d is known.
void parse_m_spec(const std::string& spec, std::size_t& m, double& m_ratio);

}  // namespace sbproj
