#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "iffair/data.hpp"
#include "iffair/model.hpp"

namespace iffair {

// Inverse-Hessian-vector products for the two sensitive groups.
struct Ihvp {
  Eigen::VectorXd v0;  // H^-1 grad R_0
  Eigen::VectorXd v1;  // H^-1 grad R_1
  double residual0 = 0.0;
  double residual1 = 0.0;
};

// Per-sample group influences. Sign convention: i_a > 0 means removing the
// sample increases group a's total loss.
struct InfluenceRecord {
  Eigen::Index index = 0;
  double i0 = 0.0;
  double i1 = 0.0;
  double delta_if = 0.0;  // i0 - i1
  double total_if = 0.0;  // i0 + i1
};

// Cumulative per-sample loss gradients of each group, summed in ascending
// index order. The model is the vanilla (uniform-weight) fit on ds.
std::pair<Eigen::VectorXd, Eigen::VectorXd> group_gradient_sums(
    const ModelParams& m, const EncodedDataset& ds, const GroupPartition& part);

// Solves H v = g to residual ||Hv - g|| <= 1e-8 * max(1, ||g||). Direct
// Cholesky with iterative refinement up to k = 2000, conjugate gradients
// above. Throws NotPositiveDefinite / NoConvergence.
Eigen::VectorXd solve_ihvp(const HessianHandle& H, const Eigen::VectorXd& g);

// grad l(z_j)^T H^-1 grad l(z): the loss change at z_j caused by removing z.
double pairwise_influence(const ModelParams& m, const HessianHandle& H,
                          const Eigen::VectorXd& x, int y,
                          const Eigen::VectorXd& xj, int yj);

// The whole per-sample influence table for a trained vanilla model.
std::vector<InfluenceRecord> group_influence_all(const ModelParams& m,
                                                 const EncodedDataset& ds,
                                                 const GroupPartition& part,
                                                 double damping);

void write_influence_csv(const std::string& path,
                         const std::vector<InfluenceRecord>& records);
std::vector<InfluenceRecord> read_influence_csv(const std::string& path);

}  // namespace iffair
