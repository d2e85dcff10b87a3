#include "sheffer/zero_locus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sheffer {

const char* to_string(RootClass c) {
  switch (c) {
    case RootClass::Real: return "REAL";
    case RootClass::Imaginary: return "IMAGINARY";
    case RootClass::Origin: return "ORIGIN";
    case RootClass::OffAxis: return "OFF_AXIS";
  }
  return "?";
}

int RootSet::count(RootClass c) const {
  int k = 0;
  for (const auto& r : roots) k += r.cls == c;
  return k;
}

double RootSet::max_reduced_imag() const {
  BigFloat m = 0;
  for (const auto& w : reduced_roots) m = std::max(m, BigFloat(boost::multiprecision::abs(w.im)));
  return m.convert_to<double>();
}

RootClass classify(const BComplex& root, double tol) {
  const BigFloat mag = abs(root);
  if (mag <= tol) return RootClass::Origin;
  const BigFloat scale = tol * (1 + mag);
  const BigFloat dre = boost::multiprecision::abs(root.re);
  const BigFloat dim = boost::multiprecision::abs(root.im);
  const bool real_ok = dim <= scale;
  const bool imag_ok = dre <= scale;
  if (real_ok && imag_ok) return dim <= dre ? RootClass::Real : RootClass::Imaginary;
  if (real_ok) return RootClass::Real;
  if (imag_ok) return RootClass::Imaginary;
  return RootClass::OffAxis;
}

namespace {

// Horner value and derivative of a BigFloat-coefficient polynomial.
void horner2(const std::vector<BComplex>& c, const BComplex& x, BComplex& p, BComplex& dp) {
  p = c.back();
  dp = BComplex(0.0);
  for (Eigen::Index k = static_cast<Eigen::Index>(c.size()) - 2; k >= 0; --k) {
    dp = dp * x + p;
    p = p * x + c[k];
  }
}

// Aberth-Ehrlich simultaneous iteration for all roots of a monic-ish
// polynomial given by BigFloat coefficients. Returns false on
// non-convergence; best iterates are left in `roots`.
bool aberth(const std::vector<BComplex>& coeffs, std::vector<BComplex>& roots, unsigned bits) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  roots.assign(deg, BComplex(0.0));

  // Fujiwara-style starting radius.
  BigFloat radius = 0;
  const BigFloat lead = abs(coeffs[deg]);
  for (int k = 0; k < deg; ++k) {
    const BigFloat ck = abs(coeffs[k]);
    if (ck == 0) continue;
    const BigFloat r = pow(2 * ck / lead, BigFloat(1) / (deg - k));
    radius = std::max(radius, r);
  }
  if (radius == 0) radius = 1;
  const BigFloat two_pi = 8 * atan(BigFloat(1));
  for (int i = 0; i < deg; ++i) {
    const BigFloat theta = two_pi * i / deg + BigFloat("0.4");
    roots[i] = radius * BComplex(cos(theta), sin(theta));
  }

  const BigFloat stop = pow(BigFloat(2), -static_cast<int>(bits) + 8);
  const int max_iter = 60 + 10 * deg;
  for (int iter = 0; iter < max_iter; ++iter) {
    BigFloat worst = 0;
    for (int i = 0; i < deg; ++i) {
      BComplex p, dp;
      horner2(coeffs, roots[i], p, dp);
      if (p.re == 0 && p.im == 0) continue;
      const BComplex newton = p / dp;
      BComplex sum(0.0);
      for (int j = 0; j < deg; ++j) {
        if (j == i) continue;
        sum = sum + BComplex(1.0) / (roots[i] - roots[j]);
      }
      const BComplex denom = BComplex(1.0) - newton * sum;
      const BComplex corr = newton / denom;
      roots[i] = roots[i] - corr;
      worst = std::max(worst, BigFloat(abs(corr) / (1 + abs(roots[i]))));
    }
    if (worst <= stop) return true;
  }
  return false;
}

}  // namespace

RootSet find_roots(const ExactPoly& poly, unsigned precision_bits, double tol) {
  if (poly.degree() < 1) throw std::domain_error("find_roots: degree >= 1 required");
  PrecisionGuard guard(precision_bits);

  RootSet out;
  out.n = static_cast<int>(poly.degree());
  out.precision_bits = precision_bits;
  out.tol = tol;

  const int n = out.n;
  const int parity = n % 2;

  // Exact parity reduction: P_n(x) = x^parity Q(x^2). The family guarantees
  // the structure; verify before any floating step.
  const int m = n / 2;
  ExactPoly q(m);
  for (int j = 0; j <= m; ++j) q.coeffs[j] = poly.coeffs[2 * j + parity];
  for (int k = 0; k <= n; ++k) {
    const Rational expected = ((k - parity) % 2 == 0 && k >= parity) ? q.coeffs[(k - parity) / 2] : Rational(0);
    if (poly.coeffs[k] != expected)
      throw std::domain_error("find_roots: polynomial lacks the parity structure");
  }

  if (parity == 1) {
    out.roots.push_back({BComplex(0.0), RootClass::Origin, BigFloat(0)});
  }
  if (m == 0) return out;

  // Deflate exact zero w-roots (P has a >1-fold root at the origin only if
  // the constant coefficient of Q vanishes).
  ExactPoly qd = q;
  int origin_pairs = 0;
  while (qd.degree() > 0 && qd.coeffs[0] == 0) {
    ExactPoly shifted(qd.degree() - 1);
    for (Eigen::Index j = 1; j <= qd.degree(); ++j) shifted.coeffs[j - 1] = qd.coeffs[j];
    qd = shifted;
    ++origin_pairs;
  }
  for (int i = 0; i < origin_pairs; ++i) {
    out.roots.push_back({BComplex(0.0), RootClass::Origin, BigFloat(0)});
    out.roots.push_back({BComplex(0.0), RootClass::Origin, BigFloat(0)});
    out.reduced_roots.push_back(BComplex(0.0));
  }

  if (qd.degree() > 0) {
    std::vector<BComplex> qc(qd.degree() + 1);
    for (Eigen::Index j = 0; j <= qd.degree(); ++j) qc[j] = BComplex(BigFloat(qd.coeffs[j]));
    std::vector<BComplex> wroots;
    if (!aberth(qc, wroots, precision_bits)) {
      out.converged = false;
      out.message = "Aberth iteration did not reach the requested precision";
    }

    const ExactPoly dpoly = derivative(poly);
    for (const auto& w : wroots) {
      out.reduced_roots.push_back(w);
      BComplex x = sqrt(w);
      for (int sign = 0; sign < 2; ++sign) {
        if (sign == 1) x = -x;
        // Newton polish on the exact polynomial.
        for (int it = 0; it < 6; ++it) {
          const BComplex p = evaluate(poly, x);
          const BComplex dp = evaluate(dpoly, x);
          if (norm(dp) == 0) break;
          x = x - p / dp;
        }
        const BigFloat residual = abs(evaluate(poly, x));
        out.roots.push_back({x, classify(x, tol), residual});
      }
    }
  }

  if (static_cast<int>(out.roots.size()) != n) {
    out.converged = false;
    out.message = "root count mismatch after reduction";
  }
  return out;
}

CertifyReport certify_theorem(int n_max, const Params& p, unsigned precision_bits, double tol) {
  CertifyReport report;
  report.hypothesis_met = p.locus_hypothesis();
  const auto seq = build_recurrence(n_max, p);
  for (int n = 1; n <= n_max; ++n) {
    DegreeReport d;
    d.n = n;
    try {
      const RootSet rs = find_roots(seq[n], precision_bits, tol);
      d.off_axis = rs.count(RootClass::OffAxis);
      d.max_reduced_imag = rs.max_reduced_imag();
      BigFloat worst = 0;
      for (const auto& r : rs.roots) worst = std::max(worst, r.residual);
      d.max_residual = worst.convert_to<double>();
      d.solver_ok = rs.converged;
      d.message = rs.message;
    } catch (const std::exception& e) {
      d.solver_ok = false;
      d.message = e.what();
    }
    report.total_off_axis += d.off_axis;
    report.all_solved = report.all_solved && d.solver_ok;
    report.degrees.push_back(std::move(d));
  }
  return report;
}

}  // namespace sheffer
