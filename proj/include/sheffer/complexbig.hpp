#pragma once

#include "sheffer/numeric.hpp"
#include "sheffer/poly.hpp"

#include <complex>

namespace sheffer {

/// Minimal complex number over the runtime-precision BigFloat. Only the
/// operations the root finder and the contour quadrature need.
struct BComplex {
  BigFloat re, im;

  BComplex() : re(0), im(0) {}
  BComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BComplex(const BigFloat& r) : re(r), im(0) {}
  explicit BComplex(double r) : re(r), im(0) {}
  explicit BComplex(const Rational& r) : re(r), im(0) {}
  explicit BComplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_double() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
};

inline BComplex operator+(const BComplex& x, const BComplex& y) {
  return {x.re + y.re, x.im + y.im};
}
inline BComplex operator-(const BComplex& x, const BComplex& y) {
  return {x.re - y.re, x.im - y.im};
}
inline BComplex operator-(const BComplex& x) { return {-x.re, -x.im}; }
inline BComplex operator*(const BComplex& x, const BComplex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline BComplex operator*(const BigFloat& c, const BComplex& x) { return {c * x.re, c * x.im}; }
inline BComplex operator/(const BComplex& x, const BigFloat& c) { return {x.re / c, x.im / c}; }
inline BComplex operator/(const BComplex& x, const BComplex& y) {
  const BigFloat d = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}

inline BComplex conj(const BComplex& x) { return {x.re, -x.im}; }
inline BigFloat norm(const BComplex& x) { return x.re * x.re + x.im * x.im; }
inline BigFloat abs(const BComplex& x) { return sqrt(norm(x)); }
inline BigFloat arg(const BComplex& x) { return atan2(x.im, x.re); }

/// Principal square root.
inline BComplex sqrt(const BComplex& x) {
  if (x.im == 0) {
    if (x.re >= 0) return BComplex(sqrt(x.re));
    return {BigFloat(0), sqrt(-x.re)};
  }
  const BigFloat r = abs(x);
  BigFloat u = sqrt((r + x.re) / 2);
  BigFloat v = sqrt((r - x.re) / 2);
  if (x.im < 0) v = -v;
  return {u, v};
}

inline BComplex exp(const BComplex& x) {
  const BigFloat m = exp(x.re);
  return {m * cos(x.im), m * sin(x.im)};
}

/// Horner evaluation of an exact polynomial at a BComplex point; the
/// rational coefficients are rounded at the current working precision.
inline BComplex evaluate(const ExactPoly& poly, const BComplex& x) {
  BComplex acc(BigFloat(poly.coeffs[poly.degree()]));
  for (Eigen::Index k = poly.degree() - 1; k >= 0; --k)
    acc = acc * x + BComplex(BigFloat(poly.coeffs[k]));
  return acc;
}

}  // namespace sheffer
