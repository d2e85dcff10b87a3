#include "sheffer/riordan.hpp"

#include <stdexcept>

#include "sheffer/series.hpp"

namespace sheffer {

RationalMatrix build_riordan(int N, const Params& p) {
  if (N < 1) throw std::domain_error("build_riordan: N >= 1 required");
  Series u = Series::Zero(N);
  if (N > 2) u[2] = p.a;
  if (N > 4) u[4] = p.b;
  const Series g = series_exp(u, N);  // [z^j] e^{az^2+bz^4}
  RationalMatrix A = RationalMatrix::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    const BigInt nfact = factorial(n);
    for (int k = 0; k <= n; ++k)
      A(n, k) = Rational(nfact) / Rational(factorial(k)) * g[n - k];
  }
  return A;
}

RationalMatrix invert_unit_lower(const RationalMatrix& M) {
  const Eigen::Index N = M.rows();
  for (Eigen::Index i = 0; i < N; ++i) {
    if (M(i, i) != 1) throw std::domain_error("invert_unit_lower: non-unit diagonal");
    for (Eigen::Index j = i + 1; j < N; ++j)
      if (M(i, j) != 0) throw std::domain_error("invert_unit_lower: not lower triangular");
  }
  RationalMatrix inv = RationalMatrix::Zero(N, N);
  for (Eigen::Index col = 0; col < N; ++col) {
    inv(col, col) = 1;
    for (Eigen::Index row = col + 1; row < N; ++row) {
      Rational acc = 0;
      for (Eigen::Index j = col; j < row; ++j) acc += M(row, j) * inv(j, col);
      inv(row, col) = -acc;
    }
  }
  return inv;
}

RationalMatrix shift_matrix(int N) {
  RationalMatrix U = RationalMatrix::Zero(N, N);
  for (int k = 0; k + 1 < N; ++k) U(k, k + 1) = 1;
  return U;
}

RationalMatrix production_matrix(int N, const Params& p) {
  RationalMatrix P = shift_matrix(N) + b_matrix(N, p);
  return P;
}

RationalMatrix b_matrix(int N, const Params& p) {
  RationalMatrix B = RationalMatrix::Zero(N, N);
  for (int k = 0; k < N; ++k) {
    if (k >= 1) B(k, k - 1) = 2 * p.a * k;
    if (k >= 3) B(k, k - 3) = 24 * p.b * Rational(binomial(k, 3));
  }
  return B;
}

ProductionCheck production_identity_check(int N, const Params& p) {
  if (N < 5) throw std::domain_error("production_identity_check: N >= 5 required");
  const RationalMatrix A = build_riordan(N, p);
  const RationalMatrix lhs = invert_unit_lower(A) * shift_matrix(N) * A;
  const RationalMatrix rhs = production_matrix(N, p);
  ProductionCheck out;
  for (int n = 0; n < N - 1; ++n)
    for (int k = 0; k < N - 1; ++k)
      if (lhs(n, k) != rhs(n, k)) {
        out.equal = false;
        out.first_n = n;
        out.first_k = k;
        out.lhs = lhs(n, k);
        out.rhs = rhs(n, k);
        return out;
      }
  return out;
}

}  // namespace sheffer
