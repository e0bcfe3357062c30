#pragma once

#include <Eigen/Dense>
#include <string>

namespace iffair::lp {

// minimize c'x  subject to  A x <= b,  0 <= x <= upper.
// Dense, row count small (the reweighting program has two rows), column
// count up to the training-set size.
struct Problem {
  Eigen::VectorXd c;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd upper;  // may contain +inf
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
  Eigen::VectorXd slack;  // b - A x
  int iterations = 0;
};

std::string to_string(Status s);

// Two-phase revised simplex with bounded variables. feas_tol governs the
// phase-1 feasibility verdict, scaled by max(1, ||b||_1).
Solution solve(const Problem& p, double feas_tol = 1e-9);

// True iff {x : A x <= b, 0 <= x <= upper} is nonempty (phase 1 only).
bool feasible(const Problem& p, double feas_tol = 1e-9);

}  // namespace iffair::lp
