#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheffer/params.hpp"

namespace sheffer {

struct VerifyOptions {
  bool quick = false;
  int max_n = 0;                  // 0 keeps the per-criterion defaults
  std::optional<Params> params;   // restricts the parameter grids when set
  unsigned precision_bits = 256;
  double root_tol = 1e-8;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool hypothesis_met = true;
  std::string detail;
};

/// Runs the full verification battery; one result per criterion.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt);

}  // namespace sheffer
