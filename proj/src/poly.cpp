#include "sheffer/poly.hpp"

#include <stdexcept>

namespace sheffer {

Rational c_coeff(int n, const Params& p) {
  Rational sum = 0;
  Rational bpow = 1;  // b^j / j!
  for (int j = 0; 2 * j <= n; ++j) {
    const int e = n - 2 * j;
    Rational apow = 1;
    for (int i = 0; i < e; ++i) apow *= p.a;
    sum += apow / Rational(factorial(e)) * bpow;
    bpow = bpow * p.b / (j + 1);
  }
  return sum;
}

Rational coefficient(int n, int k, const Params& p) {
  if (k > n || k < 0 || n < 0) throw std::domain_error("coefficient: require 0 <= k <= n");
  if ((n - k) % 2 != 0) return 0;
  return Rational(factorial(n)) / Rational(factorial(k)) * c_coeff((n - k) / 2, p);
}

ExactPoly build_explicit(int n, const Params& p) {
  ExactPoly poly(n);
  for (int k = n; k >= 0; k -= 2) poly.coeffs[k] = coefficient(n, k, p);
  return poly;
}

std::vector<ExactPoly> build_recurrence(int n_max, const Params& p) {
  std::vector<ExactPoly> seq;
  seq.reserve(n_max + 1);
  // Seeds P_0..P_3.
  seq.emplace_back(0);
  seq[0].coeffs[0] = 1;
  if (n_max >= 1) {
    seq.emplace_back(1);
    seq[1].coeffs[1] = 1;
  }
  if (n_max >= 2) {
    seq.emplace_back(2);
    seq[2].coeffs[0] = 2 * p.a;
    seq[2].coeffs[2] = 1;
  }
  if (n_max >= 3) {
    seq.emplace_back(3);
    seq[3].coeffs[1] = 6 * p.a;
    seq[3].coeffs[3] = 1;
  }
  for (int n = 4; n <= n_max; ++n) {
    ExactPoly poly(n);
    const Rational c2 = 2 * p.a * (n - 1);
    const Rational c4 = 24 * p.b * Rational(binomial(n - 1, 3));
    for (Eigen::Index k = 0; k <= seq[n - 1].degree(); ++k)
      poly.coeffs[k + 1] += seq[n - 1].coeffs[k];
    for (Eigen::Index k = 0; k <= seq[n - 2].degree(); ++k)
      poly.coeffs[k] += c2 * seq[n - 2].coeffs[k];
    for (Eigen::Index k = 0; k <= seq[n - 4].degree(); ++k)
      poly.coeffs[k] += c4 * seq[n - 4].coeffs[k];
    seq.push_back(std::move(poly));
  }
  return seq;
}

ExactPoly derivative(const ExactPoly& poly) {
  if (poly.degree() == 0) return ExactPoly(0);
  ExactPoly d(poly.degree() - 1);
  for (Eigen::Index k = 1; k <= poly.degree(); ++k) d.coeffs[k - 1] = Rational(k) * poly.coeffs[k];
  return d;
}

}  // namespace sheffer
