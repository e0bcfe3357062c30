#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iffair {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

// CSV row whose cell count does not match the header.
struct RaggedRow : Error {
  std::size_t line_no;
  explicit RaggedRow(std::size_t line)
      : Error("ragged row at line " + std::to_string(line)), line_no(line) {}
};

struct UnknownColumn : Error {
  explicit UnknownColumn(const std::string& name)
      : Error("unknown column: " + name) {}
};

struct NonNumericCell : Error {
  explicit NonNumericCell(const std::string& column, const std::string& cell)
      : Error("non-numeric cell '" + cell + "' in numeric column " + column) {}
};

struct UnknownDataset : Error {
  explicit UnknownDataset(const std::string& name)
      : Error("unknown dataset: " + name) {}
};

struct SchemaError : Error {
  using Error::Error;
};

struct DegenerateSplit : Error {
  using Error::Error;
};

struct SingleGroup : Error {
  SingleGroup() : Error("only one sensitive group present") {}
};

struct SingleClass : Error {
  SingleClass() : Error("only one label class present") {}
};

struct EmptyInput : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  DimensionMismatch(std::size_t got, std::size_t want)
      : Error("dimension mismatch: got " + std::to_string(got) + ", want " +
              std::to_string(want)) {}
};

struct AllZeroWeights : Error {
  AllZeroWeights() : Error("sample weights are all zero") {}
};

struct NonFinite : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  NotPositiveDefinite() : Error("matrix is not positive definite") {}
};

struct NoConvergence : Error {
  double residual;
  explicit NoConvergence(double res)
      : Error("linear solve did not reach target residual (got " +
              std::to_string(res) + ")"),
        residual(res) {}
};

struct NoFeasiblePoint : Error {
  using Error::Error;
};

// Eq.-(8)-style program with no feasible point. `suggested_lambda_f` is the
// largest feasible fairness level at the requested utility level, or a
// negative value when even lambda_f = 0 is infeasible.
struct InfeasibleLp : Error {
  double lambda_f;
  double lambda_u;
  double suggested_lambda_f;
  InfeasibleLp(double lf, double lu, double suggestion)
      : Error(make_message(lf, lu, suggestion)),
        lambda_f(lf),
        lambda_u(lu),
        suggested_lambda_f(suggestion) {}

 private:
  static std::string make_message(double lf, double lu, double suggestion) {
    std::string msg = "infeasible reweighting program at lambda_f=" +
                      std::to_string(lf) + ", lambda_u=" + std::to_string(lu);
    if (suggestion >= 0.0) {
      msg += "; largest feasible lambda_f at this lambda_u is about " +
             std::to_string(suggestion);
    } else {
      msg += "; infeasible even at lambda_f=0 (utility constraint alone)";
    }
    return msg;
  }
};

struct EmptyCell : Error {
  int a;
  int y;
  EmptyCell(int a_, int y_)
      : Error("empty joint cell (a=" + std::to_string(a_) +
              ", y=" + std::to_string(y_) + ")"),
        a(a_),
        y(y_) {}
};

struct MissingArtifacts : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace iffair
