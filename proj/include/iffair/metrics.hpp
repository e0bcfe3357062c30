#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "iffair/data.hpp"
#include "iffair/model.hpp"

namespace iffair {

struct ConfusionByGroup {
  // indexed by group a in {0,1}
  long tp[2] = {0, 0};
  long fp[2] = {0, 0};
  long tn[2] = {0, 0};
  long fn[2] = {0, 0};
  long size(int a) const { return tp[a] + fp[a] + tn[a] + fn[a]; }
};

ConfusionByGroup confusion_by_group(const Eigen::VectorXi& yhat,
                                    const Eigen::VectorXi& y,
                                    const Eigen::VectorXi& a);

// P(yhat=1 | a=1) - P(yhat=1 | a=0). Signed. Throws SingleGroup.
double delta_dp(const Eigen::VectorXi& yhat, const Eigen::VectorXi& a);

// P(yhat=1 | a=1, y=0) - P(yhat=1 | a=0, y=0). Signed. A group without
// negatives contributes rate 0 and appends a warning.
double delta_fpr(const Eigen::VectorXi& yhat, const Eigen::VectorXi& y,
                 const Eigen::VectorXi& a,
                 std::vector<std::string>* warnings = nullptr);

// (|dFPR| + |dTPR|) / 2, undefined rates counted as 0 with a warning.
double delta_eodds(const Eigen::VectorXi& yhat, const Eigen::VectorXi& y,
                   const Eigen::VectorXi& a,
                   std::vector<std::string>* warnings = nullptr);

// |P(yhat != y | a=1) - P(yhat != y | a=0)|. Throws SingleGroup.
double delta_err(const Eigen::VectorXi& yhat, const Eigen::VectorXi& y,
                 const Eigen::VectorXi& a);

double accuracy(const Eigen::VectorXi& yhat, const Eigen::VectorXi& y);

// Harmonic mean of precision and recall; 0 with a warning when undefined.
double f1_score(const Eigen::VectorXi& yhat, const Eigen::VectorXi& y,
                std::vector<std::string>* warnings = nullptr);

// Trapezoidal area under the threshold-swept ROC. Equals the tie-adjusted
// pairwise concordance probability. Throws SingleClass.
double roc_auc(const Eigen::VectorXd& scores, const Eigen::VectorXi& y);

struct MetricReport {
  double delta_dp = 0.0;
  double delta_fpr = 0.0;
  double delta_eodds = 0.0;
  double delta_err = 0.0;
  double acc = 0.0;
  double f1 = 0.0;
  double auc = 0.0;
  std::vector<std::string> warnings;

  double fairness(int which) const;  // 0=dp 1=fpr 2=eodds 3=err

  std::string to_json_text() const;
  static MetricReport from_json_text(const std::string& text);
  void save(const std::string& path) const;
  static MetricReport load(const std::string& path);
};

// Predict on ds and compute the full report.
MetricReport evaluate(const ModelParams& m, const EncodedDataset& ds);
MetricReport compute_report(const Eigen::VectorXd& scores,
                            const Eigen::VectorXi& yhat,
                            const Eigen::VectorXi& y,
                            const Eigen::VectorXi& a);

}  // namespace iffair
