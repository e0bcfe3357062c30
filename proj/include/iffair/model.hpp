#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "iffair/data.hpp"

namespace iffair {

enum class ModelKind { Logistic, Mlp };
enum class LogisticSolver { Newton, GradientDescent };

struct TrainConfig {
  ModelKind kind = ModelKind::Logistic;
  std::vector<int> hidden_dims = {64, 32};  // mlp only
  int epochs = 200;
  double learning_rate = 0.1;
  double l2_strength = 1e-4;
  int batch_size = 0;  // 0 = full batch
  std::uint64_t seed = 0;
  double tolerance = 1e-8;  // stop when the objective gradient norm drops below
  LogisticSolver logistic_solver = LogisticSolver::Newton;
};

// Trained classifier parameters. The head is always affine + sigmoid; for
// the logistic kind the head is the whole model.
struct ModelParams {
  ModelKind kind = ModelKind::Logistic;

  // logistic head (over raw features or penultimate activations)
  Eigen::VectorXd head_w;
  double head_b = 0.0;

  // mlp feature extractor: two fully connected layers with ReLU
  Eigen::MatrixXd W1, W2;
  Eigen::VectorXd b1, b2;

  double l2_strength = 0.0;  // recorded at training; the Hessian needs it

  Eigen::Index input_dim() const {
    return kind == ModelKind::Logistic ? head_w.size() : W1.cols();
  }
  Eigen::Index head_dim() const { return head_w.size(); }

  std::string to_json_text() const;
  static ModelParams from_json_text(const std::string& text);
  void save(const std::string& path) const;
  static ModelParams load(const std::string& path);
};

struct PredictionBatch {
  Eigen::VectorXd probs;   // in (0,1)
  Eigen::VectorXi labels;  // prob >= 0.5 -> 1 (tie at 0.5 resolves to 1)
};

// Binary cross-entropy of one sample; probability clamped away from {0,1}.
double bce_loss(double prob, int label);

// Minimizes (1/sum w) sum_i w_i * bce(z_i) + l2 * ||theta||^2.
// Deterministic given cfg.seed; stops at cfg.epochs or when the gradient
// norm falls below cfg.tolerance. Zero-weight samples are excluded from the
// batch stream, so a zero weight is exactly equivalent to removing the row.
ModelParams train_weighted(const EncodedDataset& ds,
                           const Eigen::VectorXd& weights,
                           const TrainConfig& cfg);

PredictionBatch predict_proba(const ModelParams& m, const Eigen::MatrixXd& X);

// Penultimate activations feeding the head; identity for the logistic kind.
Eigen::MatrixXd extract_features(const ModelParams& m,
                                 const Eigen::MatrixXd& X);

// Head-parameter gradient of the per-sample loss at the trained parameters:
// (p - y) * [features(x), 1]. Size head_dim + 1 (bias last).
Eigen::VectorXd per_sample_gradient(const ModelParams& m,
                                    const Eigen::VectorXd& x, int y);

struct HessianHandle {
  Eigen::MatrixXd H;     // k x k, k = head_dim + 1, symmetric
  double damping = 0.0;  // lambda_H
  Eigen::Index n = 0;    // samples behind the 1/n normalization
};

// H = (1/n) sum_i p_i (1-p_i) [x~_i,1][x~_i,1]^T + (2*l2 + damping) * I.
HessianHandle hessian(const ModelParams& m, const EncodedDataset& ds,
                      double damping);

// Full training objective (data term + l2); used by trainers and tests.
double weighted_objective(const ModelParams& m, const EncodedDataset& ds,
                          const Eigen::VectorXd& weights);

}  // namespace iffair
