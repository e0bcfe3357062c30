#pragma once

#include <cstdint>
#include <string>

#include "iffair/data.hpp"

namespace iffair {

// Two Gaussian feature clusters with a group indicator column. Group a=0
// has its positive labels flipped to 0 at rate beta, which induces
// demographic-parity and FPR gaps that grow with beta.
struct SynthSpec {
  double beta = 0.3;        // label-flip rate on a=0 positives
  Eigen::Index n = 2000;    // >= 20
  int d = 2;                // Gaussian feature columns (>= 2); the group
                            // indicator is appended as one more column
  std::uint64_t seed = 0;
  double separation = 2.0;  // distance between the cluster means
};

// Raw table with columns f0..f{d-1}, group, label (values as decimal text).
RawTable synthetic_table(const SynthSpec& spec);
DatasetSchema synthetic_schema(int d);

// Whole-population encode of synthetic_table; identical to what a CSV
// round trip through encode() would produce.
EncodedDataset generate_synthetic(const SynthSpec& spec);

// Writes the raw CSV (and optionally its schema JSON). Byte-deterministic
// per seed.
void write_synthetic_csv(const SynthSpec& spec, const std::string& csv_path,
                         const std::string& schema_path = "");

}  // namespace iffair
