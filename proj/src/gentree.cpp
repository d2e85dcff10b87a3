#include "sheffer/gentree.hpp"

#include <stdexcept>

#include "sheffer/poly.hpp"

namespace sheffer {

namespace {

void require_integers(const Params& p) {
  if (!is_integer(p.a) || !is_integer(p.b))
    throw std::domain_error("generating tree requires integer a, b");
}

void prune_zeros(std::map<int, BigInt>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
}

}  // namespace

TreeLevelCounts step_level(const TreeLevelCounts& counts, const Params& p) {
  require_integers(p);
  const BigInt a = numerator(p.a);
  const BigInt b = numerator(p.b);
  TreeLevelCounts next;
  next.level = counts.level + 1;
  for (const auto& [k, c] : counts.signed_counts) {
    if (c == 0) continue;
    next.signed_counts[k + 1] += c;
    if (k >= 1) next.signed_counts[k - 1] += 2 * a * k * c;
    if (k >= 3) next.signed_counts[k - 3] += 24 * b * binomial(k, 3) * c;
  }
  prune_zeros(next.signed_counts);
  return next;
}

std::vector<TreeLevelCounts> counts_to_level(int n, const Params& p) {
  std::vector<TreeLevelCounts> levels;
  levels.reserve(n + 1);
  TreeLevelCounts root;
  root.signed_counts[0] = 1;
  levels.push_back(root);
  for (int i = 0; i < n; ++i) levels.push_back(step_level(levels.back(), p));
  return levels;
}

InterpretationReport verify_interpretation(int n_max, const Params& p) {
  InterpretationReport report;
  report.hypothesis_met = p.tree_hypothesis();
  const auto levels = counts_to_level(n_max, p);
  const auto polys = build_recurrence(n_max, p);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      const Rational coeff = k <= n ? polys[n].coeffs[k] : Rational(0);
      if (Rational(levels[n].at(k)) != coeff) {
        report.ok = false;
        report.first_n = n;
        report.first_k = k;
        report.detail = "tree count " + levels[n].at(k).str() + " vs coefficient " +
                        rational_to_string(coeff);
        return report;
      }
    }
  }
  return report;
}

std::vector<ExplicitLevel> enumerate_explicit(int n, const Params& p, const BigInt& node_budget) {
  require_integers(p);
  if (p.b > 0) throw std::domain_error("enumerate_explicit requires b <= 0");
  const BigInt a = numerator(p.a);
  const BigInt babs = -numerator(p.b);

  std::vector<ExplicitLevel> levels(n + 1);
  levels[0].unmarked[0] = 1;
  for (int lvl = 0; lvl < n; ++lvl) {
    auto& cur = levels[lvl];
    auto& nxt = levels[lvl + 1];
    // (k): children (k+1), (k-1)^{2ak}, (k-3 bar)^{24|b|C(k,3)}
    for (const auto& [k, c] : cur.unmarked) {
      nxt.unmarked[k + 1] += c;
      if (k >= 1) nxt.unmarked[k - 1] += 2 * a * k * c;
      if (k >= 3) nxt.marked[k - 3] += 24 * babs * binomial(k, 3) * c;
    }
    // (k bar): mirrored rule, marks flipped
    for (const auto& [k, c] : cur.marked) {
      nxt.marked[k + 1] += c;
      if (k >= 1) nxt.marked[k - 1] += 2 * a * k * c;
      if (k >= 3) nxt.unmarked[k - 3] += 24 * babs * binomial(k, 3) * c;
    }
    prune_zeros(nxt.unmarked);
    prune_zeros(nxt.marked);
    BigInt total = 0;
    for (const auto& [k, c] : nxt.unmarked) total += c;
    for (const auto& [k, c] : nxt.marked) total += c;
    if (total > node_budget)
      throw std::length_error("enumerate_explicit: node budget exceeded at level " +
                              std::to_string(lvl + 1));
  }
  return levels;
}

}  // namespace sheffer
