#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include "sheffer/complexbig.hpp"
#include "sheffer/params.hpp"

namespace sheffer {

/// One asymptotic query: degree m and the scaled argument s of H_m(m^{3/4} s).
/// For locus work s lies on J1 (positive real axis) or i J2 (positive
/// imaginary axis); a is the real parameter after the b = -1 normalization.
struct ScaledQuery {
  int m = 0;
  std::complex<double> s;
  double a = 0;
};

/// Right endpoint 2^{5/2} / 3^{3/4} of the limiting interval.
double j_endpoint();
/// Right endpoint of J1: j_endpoint() - 2a / (12^{1/4} sqrt(m)).
double j1_endpoint(double a, int m);
/// Right endpoint of J2: j_endpoint() + 2a / (12^{1/4} sqrt(m)).
double j2_endpoint(double a, int m);

/// phi(z, s) = s z - z^4 - Log z (principal branch).
/// Throws std::domain_error for z on the cut (-inf, 0].
std::complex<double> phi(std::complex<double> z, std::complex<double> s);

/// d^2 phi / dz^2 = -12 z^2 + 1/z^2.
std::complex<double> phi_zz(std::complex<double> z);

struct SaddleSolution {
  std::complex<double> zeta;
  double residual = 0;  // |phi_z(zeta,s) + 2 a zeta / sqrt(m)|
  std::array<std::complex<double>, 4> all_roots;
  bool quadrant_ok = false;
};

/// Raised when the fourth quadrant does not contain exactly one quartic root
/// (s outside the regime of the locus analysis).
class SaddleSelectionError : public std::runtime_error {
 public:
  SaddleSelectionError(std::string what, std::array<std::complex<double>, 4> roots)
      : std::runtime_error(std::move(what)), all_roots(roots) {}
  std::array<std::complex<double>, 4> all_roots;
};

/// Solves the critical-point equation phi_z + 2az/sqrt(m) = 0 through its
/// quartic form -4z^4 + (2a/sqrt(m))z^2 + sz - 1 = 0 (companion-matrix
/// eigenvalues plus Newton polish) and selects the unique open-fourth-quadrant
/// root. Throws SaddleSelectionError when the count differs from one.
SaddleSolution solve_saddle(const ScaledQuery& q);

/// Distance from sol.zeta to the nearest branch of the paper-style nested
/// radical closed form. Cross-check only; the quartic solve is authoritative.
double validate_closed_form(const ScaledQuery& q, const SaddleSolution& sol);

class DegenerateSaddleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MainTerm {
  double log_magnitude = 0;  // ln |g(zeta(s))|
  double phase = 0;          // arg g(zeta(s)), reduced mod 2 pi
  std::complex<double> value;
  bool value_representable = false;
  // Regime flags of the global asymptotic analysis (reported, not enforced):
  // [0] |s - J1 endpoint| bounded away from 0, [1] same for iJ2, [2] |s| >> ln m / m.
  std::array<bool, 3> regime{};
  std::complex<double> zeta;
};

/// Leading saddle-point term g(zeta(s)), carried as (log-magnitude, phase);
/// the complex value is materialized only when representable in double.
/// Throws DegenerateSaddleError when phi_zz(zeta) is numerically zero.
MainTerm main_term(const ScaledQuery& q);

/// H_m evaluated exactly at x (general rational parameters), in
/// high-precision floating point. precision_bits = 0 selects a precision
/// that absorbs the worst-case cancellation for this m.
BComplex eval_exact(int m, const BComplex& x, const Params& p, unsigned precision_bits = 0);

/// H_m(m^{3/4} s_scaled) for Params(a, -1).
BComplex exact_Hm(int m, const BComplex& s_scaled, const Rational& a,
                  unsigned precision_bits = 0);

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(std::string what, BComplex last, BComplex previous)
      : std::runtime_error(std::move(what)), last_estimate(std::move(last)),
        previous_estimate(std::move(previous)) {}
  BComplex last_estimate, previous_estimate;
};

struct ContourResult {
  BComplex value;
  int nodes = 0;          // node count of the final estimate
  double radius = 0;
  double last_rel_change = 0;
};

/// (m!/2 pi i) ∮_{|z|=radius} e^{sz+az^2+bz^4} / z^{m+1} dz by the periodic
/// trapezoidal rule, doubling the node count until two successive estimates
/// agree to 1e-13 relative. radius <= 0 selects a near-saddle radius.
/// Throws QuadratureError when doubling never stabilizes.
ContourResult contour_oracle(int m, const BComplex& s, const BigFloat& a, const BigFloat& b,
                             double radius = 0, int nodes = 64,
                             unsigned precision_bits = 0);

/// Near-saddle contour radius: the root of 4|b| r^4 + 2|a| r^3 + |s| r = m+1,
/// the minimizer of the real-axis proxy |s| r + |a| r^2 + |b| r^4 - (m+1) ln r.
double default_radius(int m, double abs_s, double abs_a, double abs_b);

struct TrendPoint {
  int m = 0;
  double rel_error = 0;     // |predicted - exact| / |exact|
  double log_mag_pred = 0;  // ln |predicted H_m(m^{3/4} s)|
  double log_mag_exact = 0;
};

/// Relative error of the main-term prediction of H_m(m^{3/4}s) against the
/// exact value, via the axis reconstruction H = m!/(m^{m/4} pi) * Im(g)
/// (Re(g) in the odd-degree imaginary-axis case). Log-space throughout.
TrendPoint main_term_error(int m, std::complex<double> s, double a);

}  // namespace sheffer
