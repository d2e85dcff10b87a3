#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "sheffer/numeric.hpp"
#include "sheffer/params.hpp"

namespace sheffer {

/// Dense exact-rational polynomial; entry k is the coefficient of x^k.
/// Members of this family are monic with the parity pattern
/// coeffs[k] = 0 whenever degree - k is odd.
struct ExactPoly {
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> coeffs;

  ExactPoly() : coeffs(Eigen::Matrix<Rational, Eigen::Dynamic, 1>::Zero(1)) {}
  explicit ExactPoly(Eigen::Index degree)
      : coeffs(Eigen::Matrix<Rational, Eigen::Dynamic, 1>::Zero(degree + 1)) {}

  Eigen::Index degree() const { return coeffs.size() - 1; }
  bool is_monic() const { return coeffs[degree()] == 1; }

  bool operator==(const ExactPoly& o) const {
    return coeffs.size() == o.coeffs.size() && coeffs == o.coeffs;
  }
};

/// c_n(a,b) = sum_{j=0}^{floor(n/2)} a^{n-2j}/(n-2j)! * b^j/j!.
Rational c_coeff(int n, const Params& p);

/// a_{n,k} = (n!/k!) c_{(n-k)/2}(a,b) for n-k even, 0 otherwise.
/// Throws std::domain_error for k > n.
Rational coefficient(int n, int k, const Params& p);

/// P_n assembled coefficient-by-coefficient from the closed form.
ExactPoly build_explicit(int n, const Params& p);

/// P_0..P_{n_max} via the order-4 recurrence
/// P_n = x P_{n-1} + 2a(n-1) P_{n-2} + 24b C(n-1,3) P_{n-4}.
std::vector<ExactPoly> build_recurrence(int n_max, const Params& p);

/// Exact formal derivative.
ExactPoly derivative(const ExactPoly& poly);

template <typename T>
T evaluate(const ExactPoly& poly, const T& x) {
  T acc = static_cast<T>(poly.coeffs[poly.degree()]);
  for (Eigen::Index k = poly.degree() - 1; k >= 0; --k)
    acc = acc * x + static_cast<T>(poly.coeffs[k]);
  return acc;
}

inline std::complex<double> evaluate(const ExactPoly& poly, const std::complex<double>& x) {
  std::complex<double> acc(poly.coeffs[poly.degree()].convert_to<double>(), 0.0);
  for (Eigen::Index k = poly.degree() - 1; k >= 0; --k)
    acc = acc * x + poly.coeffs[k].convert_to<double>();
  return acc;
}

}  // namespace sheffer
