#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iffair/baselines.hpp"
#include "iffair/data.hpp"
#include "iffair/metrics.hpp"
#include "iffair/model.hpp"
#include "iffair/reweight.hpp"
#include "iffair/synth.hpp"

namespace iffair {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Variant { Vanilla, Uniform, Diverse, Suppression, IpwS, IpwSy };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

// One experiment: dataset source, model, treatment, split, outputs.
// All stage randomness is derived from the single root seed.
struct ExperimentConfig {
  // dataset: "synth", a builtin name (adult/compas/german), or "csv"
  std::string dataset = "synth";
  std::string csv_path;     // required for builtin names and "csv"
  std::string schema_path;  // required for "csv"
  char delimiter = ',';
  SynthSpec synth;

  Variant variant = Variant::Vanilla;
  TrainConfig train;
  UniformConfig uniform;
  DiverseConfig diverse;
  SplitSpec split;
  double damping = 1e-3;  // Hessian damping for the influence stage

  std::string out_dir;
  std::uint64_t seed = 0;

  std::string to_json_text() const;
  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
};

struct RunRecord {
  ExperimentConfig config;  // snapshot with resolved stage seeds
  MetricReport before;      // vanilla model on the held-out split
  MetricReport after;       // treated model on the held-out split
  std::string weights_path;
  double wall_seconds = 0.0;
  std::string tool_version = kToolVersion;
};

// Executes the configured pipeline and writes the run directory:
// config.json, weights.csv, influence.csv (when computed), plan.json,
// metrics_before.json, metrics_after.json, record.json.
// Refuses to overwrite an existing directory.
RunRecord cmd_run(const ExperimentConfig& cfg);

struct SweepRow {
  double lambda_f = 0.0;
  double lambda_u = 0.0;
  std::string status;  // "ok" or "infeasible"
  MetricReport after;  // valid when status == "ok"
};

// One diverse run per lambda_f grid value at fixed lambda_u; emits
// tradeoff.csv (one row per grid value, ascending) and optionally
// tradeoff.svg with the 4x3 fairness-utility panels.
std::vector<SweepRow> cmd_sweep(const ExperimentConfig& cfg,
                                std::vector<double> lambda_f_grid,
                                double lambda_u, bool plots = false);

struct ReportRow {
  std::string method;
  MetricReport report;
  bool exacerbates = false;  // some fairness |gap| above the vanilla one
};

struct ReportTable {
  ReportRow vanilla;  // reference row from the first run directory
  std::vector<ReportRow> rows;
  std::string to_csv() const;
};

// Merges run directories (and optional external-method CSV rows) into a
// method-by-metric comparison against the vanilla reference.
ReportTable cmd_report(const std::vector<std::string>& run_dirs,
                       const std::string& extern_csv = "");

// Dataset resolution shared by run/sweep: returns encoded train/test
// splits and the schema actually used.
struct ResolvedData {
  EncodedDataset train;
  EncodedDataset test;
  DatasetSchema schema;
  std::size_t dropped_rows = 0;
};
ResolvedData resolve_dataset(const ExperimentConfig& cfg);

}  // namespace iffair
