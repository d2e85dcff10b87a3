#pragma once

#include <Eigen/Dense>

#include "sheffer/numeric.hpp"

namespace sheffer {

/// Dense exact-rational power series truncated at order N:
/// entry j is the coefficient of z^j.
using Series = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Series series_mul(const Series& u, const Series& v, Eigen::Index n) {
  Series w = Series::Zero(n);
  for (Eigen::Index i = 0; i < u.size() && i < n; ++i) {
    if (u[i] == 0) continue;
    for (Eigen::Index j = 0; j < v.size() && i + j < n; ++j) w[i + j] += u[i] * v[j];
  }
  return w;
}

/// exp(u) for a series with u(0) = 0, via the first-order recurrence
/// g' = u' g:  n g_n = sum_{j>=1} j u_j g_{n-j}.
inline Series series_exp(const Series& u, Eigen::Index n) {
  if (u.size() > 0 && u[0] != 0)
    throw std::domain_error("series_exp requires vanishing constant term");
  Series g = Series::Zero(n);
  if (n == 0) return g;
  g[0] = 1;
  for (Eigen::Index k = 1; k < n; ++k) {
    Rational acc = 0;
    for (Eigen::Index j = 1; j <= k && j < u.size(); ++j) acc += Rational(j) * u[j] * g[k - j];
    g[k] = acc / k;
  }
  return g;
}

}  // namespace sheffer
