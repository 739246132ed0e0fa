// Command-line driver for the sparse binary projection experiments.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "sbproj/error.hpp"
#include "sbproj/experiments.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"sbproj - sparse binary random projection experiments"};

  std::string experiment;
  std::string models = "bernoulli,fixed,gaussian";
  std::size_t d = 0;
  std::string m_spec;
  std::string p_grid;
  std::string c_grid;
  std::size_t r = 10;
  std::size_t runs = 100;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  double eps = 0.1;
  std::size_t n_points = 10000;
  std::string data_path;
  std::string data_format = "dense";
  std::string synthetic;
  std::string out_path;
  std::string format = "csv";
  std::string export_matrix;

  app.add_option("experiment", experiment, "variance|mse|retrieval|bounds|project")
      ->required();
  app.add_option("--model", models, "comma-separated model list");
  app.add_option("--d", d, "input dimension (inferred from dense data if omitted)");
  app.add_option("--m", m_spec, "output dimension: integer, or ratio m/d in (0,1)");
  app.add_option("--p-grid", p_grid, "comma-separated p values in (0, 1/2]");
  app.add_option("--c-grid", c_grid,
                 "comma-separated c values; omitted = c = floor(d*p) over the p grid");
  app.add_option("--r", r, "neighbor count for retrieval");
  app.add_option("--runs", runs, "independent matrix draws per cell");
  app.add_option("--trials", trials, "Monte Carlo trials for the variance experiment");
  app.add_option("--seed", seed, "base seed; all randomness derives from it");
  app.add_option("--eps", eps, "epsilon for the bounds experiment");
  app.add_option("--n-points", n_points, "point count n for the JL dimension tables");
  app.add_option("--data", data_path, "input dataset path");
  app.add_option("--data-format", data_format, "dense|sparse (sparse needs --d)");
  app.add_option("--synthetic", synthetic, "kind,n,d[,density] synthetic data spec");
  app.add_option("--out", out_path, "report output path");
  app.add_option("--format", format, "csv|json");
  app.add_option("--export-matrix", export_matrix,
                 "also write the materialized matrix (project experiment)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  sbproj::ExperimentConfig cfg;
  cfg.experiment = sbproj::parse_experiment(experiment);
  cfg.models = sbproj::parse_model_list(models);
  cfg.d = d;
  if (!m_spec.empty()) sbproj::parse_m_spec(m_spec, cfg.m, cfg.m_ratio);
  if (!p_grid.empty()) cfg.p_grid = sbproj::parse_p_grid(p_grid);
  if (!c_grid.empty()) cfg.c_grid = sbproj::parse_c_grid(c_grid);
  cfg.r = r;
  cfg.runs = runs;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.eps = eps;
  cfg.n_points = n_points;
  cfg.data_path = data_path;
  if (data_format == "sparse") {
    cfg.data_sparse = true;
  } else if (data_format != "dense") {
    throw sbproj::ConfigError("unknown data format '" + data_format + "'");
  }
  if (!synthetic.empty()) cfg.synthetic = sbproj::parse_synthetic_spec(synthetic, seed);
  cfg.out_path = out_path;
  cfg.format = sbproj::parse_format(format);
  cfg.export_matrix_path = export_matrix;

  const auto report = sbproj::run_experiment(cfg);
  sbproj::write_report(report);
  std::fprintf(stderr, "sbproj: %s -> %s (%zu records, %.3f s)\n",
               sbproj::to_string(cfg.experiment), cfg.out_path.string().c_str(),
               report.records.size(), report.elapsed_seconds);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sbproj::ConfigError& e) {
    std::fprintf(stderr, "sbproj: config error: %s\n", e.what());
    return 2;
  } catch (const sbproj::DataError& e) {
    std::fprintf(stderr, "sbproj: data error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sbproj: %s\n", e.what());
    return 1;
  }
}
