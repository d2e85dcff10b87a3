#pragma once

#include "sheffer/numeric.hpp"

namespace sheffer {

/// Exact parameters (a, b) of the generating function e^{xz + a z^2 + b z^4}.
/// Construction places no constraint on the signs; zero-locus certification
/// requires b < 0 and the generating-tree theorem requires integer a > 0, b < 0.
struct Params {
  Rational a;
  Rational b;

  Params() = default;
  Params(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  /// Hypothesis of the zero-locus theorem.
  bool locus_hypothesis() const { return b < 0; }

  /// Hypothesis of the generating-tree theorem.
  bool tree_hypothesis() const {
    return is_integer(a) && is_integer(b) && a > 0 && b < 0;
  }

  Params negated() const { return Params(-a, -b); }
};

}  // namespace sheffer
