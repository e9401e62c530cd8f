#pragma once

#include <string>
#include <vector>

#include "hessplus/report.hpp"

namespace hessplus {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string detail;
};

// Knobs for deliberate fault injection, used by tests to confirm the suite
// actually detects a wrong sign.  All false in production.
struct GroundTruthOptions {
  bool negate_convexity_det = false;
};

// The eleven ground-truth checks, in fixed order, each deterministic.
std::vector<CheckResult> run_ground_truth_suite(const GroundTruthOptions& opts = {});

// Machine-readable matrix.  Timings are excluded so two runs of the same
// build produce identical bytes.
OrderedJson ground_truth_matrix(const std::vector<CheckResult>& results);

}  // namespace hessplus
