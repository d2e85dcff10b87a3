#pragma once

#include <map>
#include <string>
#include <vector>

#include "sheffer/numeric.hpp"
#include "sheffer/params.hpp"

namespace sheffer {

/// Per-level signed label multiplicities mu_n(k) - mu_n(k-bar) of the marked
/// generating tree. Marked and unmarked nodes of equal label annihilate, so
/// only the differences are propagated.
struct TreeLevelCounts {
  int level = 0;
  std::map<int, BigInt> signed_counts;

  BigInt at(int k) const {
    const auto it = signed_counts.find(k);
    return it == signed_counts.end() ? BigInt(0) : it->second;
  }
};

/// One application of the succession rule
///   (k) -> (k-3 bar)^{24|b|C(k,3)} (k-1)^{2ak} (k+1),
/// i.e. the vector recurrence v_{n+1} = P^T v_n with P = B + U.
/// Requires integer a, b (degenerate a = 0 or b = 0 are permitted).
TreeLevelCounts step_level(const TreeLevelCounts& counts, const Params& p);

/// Levels 0..n starting from the root {0: 1}.
std::vector<TreeLevelCounts> counts_to_level(int n, const Params& p);

struct InterpretationReport {
  bool ok = true;
  bool hypothesis_met = true;  // integer a > 0, b < 0
  int first_n = -1;
  int first_k = -1;
  std::string detail;
};

/// Compares signed tree counts against the coefficients of P_n, exactly,
/// for all n <= n_max and all k.
InterpretationReport verify_interpretation(int n_max, const Params& p);

/// Separate unmarked / marked multiplicities of one level, produced without
/// annihilation; the small-scale oracle for the signed counts.
struct ExplicitLevel {
  std::map<int, BigInt> unmarked;
  std::map<int, BigInt> marked;
};

/// Materializes the tree levels 0..n literally. Throws std::length_error
/// when the running node count would exceed the budget.
std::vector<ExplicitLevel> enumerate_explicit(int n, const Params& p,
                                              const BigInt& node_budget = BigInt(1000000));

}  // namespace sheffer
