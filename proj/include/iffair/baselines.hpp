#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "iffair/data.hpp"

namespace iffair {

enum class BaselineKind { Suppression, IpwS, IpwSy };

struct BaselinePlan {
  BaselineKind kind = BaselineKind::IpwS;
  Eigen::VectorXd weights;  // strictly positive for IPW kinds
  std::vector<std::string> dropped_columns;
};

// Removes every feature column derived from the sensitive attribute; the
// group vector stays for evaluation only.
EncodedDataset suppression(const EncodedDataset& ds,
                           const DatasetSchema& schema);
std::vector<std::string> suppressed_columns(const EncodedDataset& ds,
                                            const DatasetSchema& schema);

// w_i = 1 / P(A = a_i), empirical probabilities from ds.
BaselinePlan ipw_s(const EncodedDataset& ds);

// w_i = P(A = a_i) P(Y = y_i) / P(A = a_i, Y = y_i): expected-over-observed
// reweighing. Throws EmptyCell when a joint cell is empty.
BaselinePlan ipw_sy(const EncodedDataset& ds);

}  // namespace iffair
