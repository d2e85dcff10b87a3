#pragma once

#include <string>
#include <vector>

#include "sheffer/complexbig.hpp"
#include "sheffer/params.hpp"
#include "sheffer/poly.hpp"

namespace sheffer {

enum class RootClass { Real, Imaginary, Origin, OffAxis };

const char* to_string(RootClass c);

struct Root {
  BComplex value;
  RootClass cls;
  BigFloat residual;  // |P_n(root)| at working precision
};

struct RootSet {
  int n = 0;
  std::vector<Root> roots;
  std::vector<BComplex> reduced_roots;  // roots of Q where P_n(x) = x^parity Q(x^2)
  unsigned precision_bits = 0;
  double tol = 0;
  bool converged = true;
  std::string message;

  int count(RootClass c) const;
  /// Largest |Im w| over the reduced roots (0 when all w-roots are real).
  double max_reduced_imag() const;
};

/// ORIGIN if |root| <= tol; REAL / IMAGINARY by normalized axis distance
/// (ties broken by the smaller deviation); otherwise OFF_AXIS.
RootClass classify(const BComplex& root, double tol);

/// All n roots of poly. Strips the parity structure first (P = x^parity Q(x^2),
/// verified exactly), solves Q by Aberth-Ehrlich simultaneous iteration at the
/// requested precision, emits +/- sqrt of each w-root and polishes by Newton
/// iteration on the exact polynomial.
RootSet find_roots(const ExactPoly& poly, unsigned precision_bits = 256, double tol = 1e-10);

struct DegreeReport {
  int n = 0;
  int off_axis = 0;
  double max_residual = 0;
  double max_reduced_imag = 0;
  bool solver_ok = true;
  std::string message;
};

struct CertifyReport {
  bool hypothesis_met = true;  // b < 0
  int total_off_axis = 0;
  bool all_solved = true;
  std::vector<DegreeReport> degrees;
};

/// Runs find_roots + classify for every n <= n_max; root-finder failures are
/// recorded per degree without aborting the sweep.
CertifyReport certify_theorem(int n_max, const Params& p, unsigned precision_bits = 256,
                              double tol = 1e-8);

}  // namespace sheffer
