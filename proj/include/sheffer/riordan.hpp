#pragma once

#include <Eigen/Dense>

#include "sheffer/numeric.hpp"
#include "sheffer/params.hpp"

namespace sheffer {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// N x N truncation of the exponential Riordan array [e^{az^2+bz^4}, z]:
/// entry (n,k) = (n!/k!) [z^n] e^{az^2+bz^4} z^k, computed by exact
/// truncated power-series exponentiation (a route independent of the
/// closed-form coefficient(n,k)).
RationalMatrix build_riordan(int N, const Params& p);

/// Exact inverse of a lower-triangular matrix with unit diagonal, by
/// forward substitution. Throws std::domain_error otherwise.
RationalMatrix invert_unit_lower(const RationalMatrix& M);

/// Upper shift matrix U (ones on the superdiagonal).
RationalMatrix shift_matrix(int N);

/// Production matrix B + U of this family:
/// p_{k,k+1} = 1, p_{k,k-1} = 2ak, p_{k,k-3} = 24b C(k,3).
RationalMatrix production_matrix(int N, const Params& p);

/// Strictly-lower band part B alone.
RationalMatrix b_matrix(int N, const Params& p);

struct ProductionCheck {
  bool equal = true;
  int first_n = -1;  // first differing entry when !equal
  int first_k = -1;
  Rational lhs;      // (A^{-1} U A)_{n,k}
  Rational rhs;      // (B + U)_{n,k}
};

/// Compares A^{-1} U A against B + U exactly on the (N-1) x (N-1)
/// principal block (truncation corrupts the final row).
ProductionCheck production_identity_check(int N, const Params& p);

}  // namespace sheffer
