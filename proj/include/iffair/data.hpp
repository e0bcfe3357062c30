#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iffair/errors.hpp"

namespace iffair {

// ---------------------------------------------------------------------------
// Raw tables and schemas
// ---------------------------------------------------------------------------

struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column_index(const std::string& name) const;
};

enum class ColumnRole { Feature, Sensitive, Label, Drop };
enum class ColumnKind { Categorical, Numeric };

struct ColumnSpec {
  std::string name;
  ColumnRole role = ColumnRole::Feature;
  ColumnKind kind = ColumnKind::Categorical;
};

// Which columns mean what, and how the binary label / sensitive attribute
// are derived from raw cells.
struct DatasetSchema {
  std::vector<ColumnSpec> columns;
  std::string favorable_label;   // raw label value mapped to y = 1
  std::string privileged_value;  // raw sensitive value mapped to a = 1
  // For numeric sensitive columns: a = 1 iff value > threshold.
  std::optional<double> sensitive_threshold;

  const ColumnSpec& sensitive_column() const;
  const ColumnSpec& label_column() const;
  void validate() const;  // exactly one sensitive, exactly one label

  static DatasetSchema from_json_file(const std::string& path);
  static DatasetSchema from_json_text(const std::string& text);
  std::string to_json_text() const;
};

// Adapters for the common benchmark datasets. The returned schema documents
// the expected header names; see README for the file layout each expects.
DatasetSchema builtin_schema(const std::string& name);

// ---------------------------------------------------------------------------
// CSV ingestion
// ---------------------------------------------------------------------------

// RFC-4180-style parser: quoted fields, embedded delimiters/newlines,
// doubled-quote escapes. Cells are kept verbatim; no type coercion.
RawTable parse_csv(const std::string& path, char delimiter = ',');
RawTable parse_csv_text(const std::string& text, char delimiter = ',');

struct DropMissingResult {
  RawTable table;
  std::size_t dropped_rows = 0;
};

// Drops rows with a missing cell ("", "?", "NA" after trimming) in any
// column the schema actually uses.
DropMissingResult drop_missing(const RawTable& table,
                               const DatasetSchema& schema);

// ---------------------------------------------------------------------------
// Encoded datasets
// ---------------------------------------------------------------------------

struct EncodedDataset {
  Eigen::MatrixXd X;  // n x d; one-hot categoricals, z-scored numerics
  Eigen::VectorXi y;  // {0,1}
  Eigen::VectorXi a;  // {0,1}
  std::vector<std::string> feature_names;   // "col=value" or "col"
  std::vector<std::string> feature_source;  // originating raw column

  Eigen::Index n() const { return X.rows(); }
  Eigen::Index d() const { return X.cols(); }

  // Throws unless finite, binary y/a, d >= 1, n >= 2 with both groups.
  void validate() const;
};

// A fitted encoding recipe: categorical vocabularies in first-appearance
// order and z-score statistics of the fitting population. Fitting on the
// training split and applying to the test split keeps test statistics out
// of the features.
struct Encoder {
  struct ColumnPlan {
    ColumnSpec spec;
    std::vector<std::string> categories;  // categorical, first appearance
    double mean = 0.0;
    double stddev = 1.0;  // population stddev
    bool kept = true;     // false for constant numeric columns
  };
  DatasetSchema schema;
  std::vector<ColumnPlan> plans;  // encoded columns, schema order
  std::vector<std::string> warnings;
};

Encoder fit_encoder(const RawTable& table, const DatasetSchema& schema);
EncodedDataset encode_with(const Encoder& enc, const RawTable& table);
// Fit + apply in one step; deterministic for identical (table, schema).
EncodedDataset encode(const RawTable& table, const DatasetSchema& schema);

// ---------------------------------------------------------------------------
// Group partitions and splits
// ---------------------------------------------------------------------------

struct GroupPartition {
  std::vector<Eigen::Index> idx0;  // a = 0, ascending
  std::vector<Eigen::Index> idx1;  // a = 1, ascending
  Eigen::Index n0() const { return static_cast<Eigen::Index>(idx0.size()); }
  Eigen::Index n1() const { return static_cast<Eigen::Index>(idx1.size()); }
};

GroupPartition partition_groups(const EncodedDataset& ds);

enum class Stratify { None, Label, LabelBySensitive };

struct SplitSpec {
  double test_fraction = 0.3;
  std::uint64_t seed = 0;
  Stratify stratify_on = Stratify::LabelBySensitive;
};

struct SplitResult {
  EncodedDataset train;
  EncodedDataset test;
  std::vector<Eigen::Index> train_idx;
  std::vector<Eigen::Index> test_idx;
};

SplitResult split(const EncodedDataset& ds, const SplitSpec& spec);

// ---------------------------------------------------------------------------
// End-to-end CSV loading
// ---------------------------------------------------------------------------

struct LoadedDataset {
  EncodedDataset train;
  EncodedDataset test;
  Encoder encoder;  // fitted on the training rows only
  std::size_t dropped_rows = 0;
};

// parse -> drop_missing -> row-level split -> fit on train -> apply to test.
LoadedDataset load_csv_dataset(const std::string& csv_path,
                               const DatasetSchema& schema,
                               const SplitSpec& spec, char delimiter = ',');
LoadedDataset load_table_dataset(const RawTable& table,
                                 const DatasetSchema& schema,
                                 const SplitSpec& spec);

}  // namespace iffair
