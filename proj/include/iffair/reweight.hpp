#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "iffair/data.hpp"
#include "iffair/influence.hpp"
#include "iffair/metrics.hpp"
#include "iffair/model.hpp"

namespace iffair {

enum class UtilityMetric { Acc, F1, Auc };
enum class EvalSplit { Train, Holdout };
enum class FairnessMetricId { Dp = 0, Fpr = 1, Eodds = 2, Err = 3 };
enum class PotentialScope { Diverse, All };

struct UniformConfig {
  double tau = 0.05;     // utility degradation bound in [0,1]
  int grid_points = 21;  // covers both endpoints of [0,1]
  UtilityMetric utility_metric = UtilityMetric::Acc;
  std::vector<FairnessMetricId> fairness_metrics = {
      FairnessMetricId::Dp, FairnessMetricId::Fpr, FairnessMetricId::Eodds,
      FairnessMetricId::Err};
  double epsilon_norm = 1e-8;
  EvalSplit eval_split = EvalSplit::Train;
};

struct DiverseConfig {
  double lambda_f = 1.0;
  double lambda_u = 1.0;
  PotentialScope potential_scope = PotentialScope::Diverse;
};

// Normalized fairness score of a candidate model against the vanilla one:
// s_fair = sum_m |fair_m| / (|base_m| + eps).
struct FairnessScore {
  struct Term {
    FairnessMetricId metric;
    double fair;
    double base;
  };
  std::vector<Term> terms;
  double s_fair = 0.0;
};

FairnessScore s_fair_score(const MetricReport& report, const MetricReport& base,
                           const UniformConfig& cfg);

enum class PlanVariant { Uniform, Diverse };

struct GridPoint {
  double w_prime = 0.0;
  double utility = 0.0;
  double s_fair = 0.0;
  bool feasible = false;
};

struct WeightPlan {
  Eigen::VectorXd weights;  // length n, in [0,1]; 1 outside the bias set
  PlanVariant variant = PlanVariant::Uniform;
  std::vector<Eigen::Index> bias_set;

  // uniform diagnostics
  double w_star = 1.0;
  int feasible_grid_points = 0;
  std::vector<GridPoint> grid;  // the PWL evaluation table

  // diverse diagnostics
  Eigen::VectorXd delta_w;  // over bias_set, same order
  std::string lp_status;
  std::vector<double> slacks;
  double max_fair = 0.0;
  double max_util = 0.0;
  int fractional_count = 0;

  double objective = 0.0;

  std::string diagnostics_json(const std::optional<double>& tau,
                               const std::optional<double>& lambda_f,
                               const std::optional<double>& lambda_u) const;
};

// Alg. 2 bias sets. Strict inequalities: zero-influence samples are never
// selected.
std::vector<Eigen::Index> select_uniform_bias_set(
    const std::vector<InfluenceRecord>& records);
std::vector<Eigen::Index> select_diverse_bias_set(
    const std::vector<InfluenceRecord>& records);

// Grid search over the shared weight w' in [0,1]: retrain at each grid
// value, keep the feasible point with the smallest s_fair (ties break to
// the larger w'). eval_ds supplies the holdout population when
// cfg.eval_split == Holdout; defaults to the training split.
WeightPlan optimize_uniform(const EncodedDataset& ds,
                            const std::vector<InfluenceRecord>& records,
                            const ModelParams& vanilla,
                            const UniformConfig& cfg, const TrainConfig& tcfg,
                            const EncodedDataset* eval_ds = nullptr);

// minimize sum dw  s.t.  sum dIF_i dw_i <= lambda_f * max_fair,
//                        sum IF_i dw_i <= lambda_u * max_util,
//                        dw in [0,1] over the bias set.
// Throws InfeasibleLp with a bisection-derived suggestion when empty.
WeightPlan solve_diverse_lp(const std::vector<InfluenceRecord>& records,
                            const std::vector<Eigen::Index>& bias_set,
                            const DiverseConfig& cfg);

struct PipelineResult {
  WeightPlan plan;
  ModelParams vanilla;
  ModelParams fair;
  MetricReport before;  // vanilla on the held-out split
  MetricReport after;   // retrained model on the held-out split
  std::vector<InfluenceRecord> records;
};

// Vanilla fit -> group influences -> bias set -> variant optimizer ->
// retrain with the optimized weights -> reports on the held-out split.
PipelineResult iffair_pipeline(const EncodedDataset& train,
                               const EncodedDataset& test, PlanVariant variant,
                               const UniformConfig& ucfg,
                               const DiverseConfig& dcfg,
                               const TrainConfig& tcfg, double damping = 1e-3);

void write_weights_csv(const std::string& path, const Eigen::VectorXd& weights);
Eigen::VectorXd read_weights_csv(const std::string& path);

}  // namespace iffair
