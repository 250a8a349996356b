#pragma once

// The acceptance suite: seven exact checks, each reported as one line.

#include "siegel2/series.hpp"

#include <string>
#include <vector>

namespace siegel2 {

struct VerifyOptions {
  int max_weight = 60;    // scalar series, closed formulas, scalar effectivity
  int grid_k_max = 12;    // vector grid 4 <= k <= grid_k_max
  int grid_j_max = 20;
  int k3_j_max = 30;      // k = 3 column
  int euler_l_max = 20;
  int weyl_l_max = 12;
  int elliptic_max = 200;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::string detail;               // summary, or the first failure
  std::vector<std::string> notes;   // logged discrepancies that were adjudicated

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

CriterionResult check_series(int max_weight, const std::vector<SeriesSpec>& specs = printed_series());
CriterionResult check_closed_formulas(int max_weight);
CriterionResult check_printed_rows();
CriterionResult check_vector_grid(const VerifyOptions& o);
CriterionResult check_euler(int l_max);
CriterionResult check_effectivity(const VerifyOptions& o);
CriterionResult check_properties(const VerifyOptions& o);

std::vector<CriterionResult> run_criteria(const VerifyOptions& o = {});

/// "PASS [1] name: detail" / "FAIL [1] name: detail".
std::string format_line(const CriterionResult& r);

}  // namespace siegel2
