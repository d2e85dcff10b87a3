#include "sheffer/saddle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "sheffer/poly.hpp"

namespace sheffer {

namespace {
using Cd = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;

BComplex clog(const BComplex& z) { return {log(abs(z)), arg(z)}; }
BComplex cpow(const BComplex& z, const BigFloat& p) { return exp(p * clog(z)); }
}  // namespace

double j_endpoint() { return std::pow(2.0, 2.5) / std::pow(3.0, 0.75); }

double j1_endpoint(double a, int m) {
  return j_endpoint() - 2 * a / (std::pow(12.0, 0.25) * std::sqrt(double(m)));
}

double j2_endpoint(double a, int m) {
  return j_endpoint() + 2 * a / (std::pow(12.0, 0.25) * std::sqrt(double(m)));
}

Cd phi(Cd z, Cd s) {
  if (z.imag() == 0 && z.real() <= 0)
    throw std::domain_error("phi: z on the branch cut (-inf, 0]");
  return s * z - z * z * z * z - std::log(z);
}

Cd phi_zz(Cd z) { return -12.0 * z * z + 1.0 / (z * z); }

SaddleSolution solve_saddle(const ScaledQuery& q) {
  const double eta = 2 * q.a / std::sqrt(double(q.m));
  // Monic form of -4z^4 + eta z^2 + s z - 1 = 0:
  //   z^4 - (eta/4) z^2 - (s/4) z + 1/4 = 0.
  const Cd c2 = -eta / 4.0;
  const Cd c1 = -q.s / 4.0;
  const Cd c0 = 0.25;

  Eigen::Matrix4cd companion = Eigen::Matrix4cd::Zero();
  companion(0, 3) = -c0;
  companion(1, 3) = -c1;
  companion(2, 3) = -c2;
  companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(companion, false);

  SaddleSolution sol;
  for (int i = 0; i < 4; ++i) {
    Cd z = es.eigenvalues()(i);
    // Newton polish on the quartic.
    for (int it = 0; it < 4; ++it) {
      const Cd p = ((z * z + c2) * z + c1) * z + c0;
      const Cd dp = (4.0 * z * z + 2.0 * c2) * z + c1;
      if (dp == 0.0) break;
      z -= p / dp;
    }
    sol.all_roots[i] = z;
  }

  int hits = 0;
  for (const Cd& z : sol.all_roots)
    if (z.real() > 0 && z.imag() < 0) {
      sol.zeta = z;
      ++hits;
    }
  if (hits != 1)
    throw SaddleSelectionError("expected exactly one fourth-quadrant root, found " +
                                   std::to_string(hits),
                               sol.all_roots);
  sol.quadrant_ok = true;
  sol.residual = std::abs(q.s - 4.0 * std::pow(sol.zeta, 3) - 1.0 / sol.zeta + eta * sol.zeta);
  return sol;
}

double validate_closed_form(const ScaledQuery& q, const SaddleSolution& sol) {
  PrecisionGuard guard(160);
  const BigFloat eta = 2 * BigFloat(q.a) / sqrt(BigFloat(q.m));
  const BComplex s(BigFloat(q.s.real()), BigFloat(q.s.imag()));
  const BComplex target(sol.zeta);
  const BigFloat third = BigFloat(1) / 3;
  const BigFloat c13 = pow(BigFloat(2), third);
  const BigFloat c23 = c13 * c13;
  const BigFloat two_pi = 8 * atan(BigFloat(1));

  const BComplex s2 = s * s;
  const BComplex disc_inner =
      (BComplex(2 * eta * eta * eta - 288 * eta) - BigFloat(108) * s2) *
          (BComplex(2 * eta * eta * eta - 288 * eta) - BigFloat(108) * s2) -
      BComplex(BigFloat(4) * pow(eta * eta + 48, 3));
  const BComplex e48(eta * eta + 48);

  BigFloat best = -1;
  for (int sd = 0; sd < 2; ++sd) {
    const BComplex root_disc = (sd == 0 ? BigFloat(1) : BigFloat(-1)) * sqrt(disc_inner);
    const BComplex base =
        BComplex(-2 * eta * eta * eta + 288 * eta) - root_disc + BigFloat(108) * s2;
    if (norm(base) == 0) continue;
    const BComplex cbrt0 = cpow(base, third);
    for (int j = 0; j < 3; ++j) {
      const BigFloat angle = two_pi * j / 3;
      const BComplex A = cbrt0 * BComplex(cos(angle), sin(angle));
      if (norm(A) == 0) continue;
      const BComplex t_first =
          BComplex(eta / 6) + A / BigFloat(12 * c13) + e48 / (BigFloat(6) * c23 * A);
      for (int s1 = 0; s1 < 2; ++s1) {
        const BComplex r1 = (s1 == 0 ? BigFloat(1) : BigFloat(-1)) * sqrt(t_first);
        if (norm(r1) == 0) continue;
        const BComplex t_second = BComplex(eta / 3) - A / BigFloat(12 * c13) +
                                  s / (BigFloat(2) * r1) - e48 / (BigFloat(6) * c23 * A);
        for (int s2sign = 0; s2sign < 2; ++s2sign) {
          const BComplex r2 = (s2sign == 0 ? BigFloat(1) : BigFloat(-1)) * sqrt(t_second);
          const BComplex cand = (r1 - r2) / BigFloat(2);
          const BigFloat d = abs(cand - target);
          if (best < 0 || d < best) best = d;
        }
      }
    }
  }
  return best.convert_to<double>();
}

MainTerm main_term(const ScaledQuery& q) {
  const SaddleSolution sol = solve_saddle(q);
  const Cd zeta = sol.zeta;
  const double m = q.m;
  const Cd pzz = phi_zz(zeta);
  // At a saddle collision the double-precision root carries an O(sqrt(eps))
  // error, which puts |phi_zz| near 1e-7 rather than 0.
  if (std::abs(pzz) < 1e-6)
    throw DegenerateSaddleError("saddle degeneracy: phi_zz(zeta) ~ 0 near the interval endpoint");

  // g(zeta) = e^{m s zeta + a sqrt(m) zeta^2 - m zeta^4} / zeta^{m+1}
  //           * sqrt(2 pi) i e^{-i Arg(pzz)/2} / (sqrt(m) sqrt(|pzz|)).
  const Cd w = m * q.s * zeta + q.a * std::sqrt(m) * zeta * zeta -
               m * std::pow(zeta, 4) - (m + 1.0) * std::log(zeta);
  const double log_c = 0.5 * std::log(2 * kPi) - 0.5 * std::log(m) - 0.5 * std::log(std::abs(pzz));
  const double arg_c = kPi / 2 - std::arg(pzz) / 2;

  MainTerm out;
  out.zeta = zeta;
  out.log_magnitude = w.real() + log_c;
  out.phase = std::remainder(w.imag() + arg_c, 2 * kPi);
  out.value_representable = out.log_magnitude < 700.0;
  if (out.value_representable)
    out.value = std::exp(out.log_magnitude) * Cd(std::cos(out.phase), std::sin(out.phase));

  const double abs_s = std::abs(q.s);
  const bool is_real = std::abs(q.s.imag()) <= 1e-12 * (1 + abs_s);
  const bool is_imag = std::abs(q.s.real()) <= 1e-12 * (1 + abs_s);
  out.regime[0] = !is_real || std::abs(q.s.real() - j1_endpoint(q.a, q.m)) >= 0.25;
  out.regime[1] = !is_imag || std::abs(std::abs(q.s.imag()) - j2_endpoint(q.a, q.m)) >= 0.25;
  out.regime[2] = abs_s >= 10.0 * std::log(m) / m;
  return out;
}

namespace {
unsigned exact_eval_bits(int m, unsigned requested) {
  if (requested) return requested;
  const double guard = 1.2 * m * std::log2(std::max(m, 2));
  return std::max(256u, 64 + static_cast<unsigned>(guard));
}
}  // namespace

BComplex eval_exact(int m, const BComplex& x, const Params& p, unsigned precision_bits) {
  PrecisionGuard guard(exact_eval_bits(m, precision_bits));
  const ExactPoly poly = build_explicit(m, p);
  // Re-round the evaluation point at the working precision.
  const BComplex xp(BigFloat(x.re), BigFloat(x.im));
  return evaluate(poly, xp);
}

BComplex exact_Hm(int m, const BComplex& s_scaled, const Rational& a, unsigned precision_bits) {
  PrecisionGuard guard(exact_eval_bits(m, precision_bits));
  const BigFloat scale = pow(BigFloat(m), BigFloat(3) / 4);
  const BComplex x(scale * s_scaled.re, scale * s_scaled.im);
  return eval_exact(m, x, Params(a, Rational(-1)), exact_eval_bits(m, precision_bits));
}

double default_radius(int m, double abs_s, double abs_a, double abs_b) {
  // Unique positive root of 4|b| r^4 + 2|a| r^3 + |s| r - (m+1) = 0.
  if (abs_b == 0) abs_b = 1e-12;
  double lo = 0, hi = 1;
  auto f = [&](double r) { return 4 * abs_b * r * r * r * r + 2 * abs_a * r * r * r + abs_s * r - (m + 1); };
  while (f(hi) < 0) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ContourResult contour_oracle(int m, const BComplex& s, const BigFloat& a, const BigFloat& b,
                             double radius, int nodes, unsigned precision_bits) {
  if (nodes < 64) throw std::domain_error("contour_oracle: nodes >= 64 required");
  const unsigned bits = precision_bits ? precision_bits
                                       : std::max(512u, 64 + static_cast<unsigned>(
                                                             2.0 * m * std::log2(std::max(m, 2))));
  PrecisionGuard guard(bits);
  if (radius <= 0)
    radius = default_radius(m, abs(s).convert_to<double>(), fabs(a.convert_to<double>()),
                            fabs(b.convert_to<double>()));
  if (radius <= 0) throw std::domain_error("contour_oracle: radius > 0 required");

  const BigFloat r(radius);
  const BigFloat two_pi = 8 * atan(BigFloat(1));
  const BComplex sp(BigFloat(s.re), BigFloat(s.im));
  const BigFloat ap(a), bp(b);

  const BigFloat scale = BigFloat(factorial(m)) / pow(r, m);
  auto estimate = [&](int n_nodes) {
    BComplex sum(0.0);
    for (int j = 0; j < n_nodes; ++j) {
      const BigFloat theta = two_pi * j / n_nodes;
      const BComplex z = r * BComplex(cos(theta), sin(theta));
      const BComplex z2 = z * z;
      const BComplex expo = sp * z + ap * z2 + bp * z2 * z2;
      const BigFloat mtheta = -BigFloat(m) * theta;
      sum = sum + exp(expo) * BComplex(cos(mtheta), sin(mtheta));
    }
    return scale * sum / BigFloat(n_nodes);
  };

  BComplex prev2(0.0);
  BComplex prev = estimate(nodes);
  for (int n_nodes = 2 * nodes; n_nodes <= (1 << 22); n_nodes *= 2) {
    const BComplex cur = estimate(n_nodes);
    const BigFloat denom = abs(cur);
    const double rel = denom == 0 ? abs(cur - prev).convert_to<double>()
                                  : (abs(cur - prev) / denom).convert_to<double>();
    if (rel < 1e-13) {
      ContourResult out;
      out.value = cur;
      out.nodes = n_nodes;
      out.radius = radius;
      out.last_rel_change = rel;
      return out;
    }
    prev2 = prev;
    prev = cur;
  }
  throw QuadratureError("contour quadrature failed to stabilize under node doubling",
                        prev, prev2);
}

TrendPoint main_term_error(int m, std::complex<double> s, double a) {
  const MainTerm mt = main_term({m, s, a});
  const bool is_imag = std::abs(s.real()) <= 1e-12 * (1 + std::abs(s));
  const bool use_re = is_imag && (m % 2 == 1);

  // H_m(m^{3/4}s) = m!/(m^{m/4} pi) * Im(h); h ~ g. For odd m on the
  // imaginary axis the reconstruction reads off Re(h) instead, and H is
  // purely imaginary.
  const double scale_log = std::lgamma(m + 1.0) - 0.25 * m * std::log(double(m)) - std::log(kPi);
  const double trig = use_re ? std::cos(mt.phase) : std::sin(mt.phase);
  const double pred_log = scale_log + mt.log_magnitude + std::log(std::abs(trig));
  double pred_sign = trig >= 0 ? 1.0 : -1.0;
  if (use_re) pred_sign = -pred_sign;  // H = -i (m!/(m^{m/4} pi)) Re(h)

  const BComplex exact = exact_Hm(m, BComplex(s), Rational(a));
  const BigFloat part = use_re ? exact.im : exact.re;
  const double exact_sign = part >= 0 ? 1.0 : -1.0;
  const double exact_log = log(BigFloat(boost::multiprecision::abs(part))).convert_to<double>();

  TrendPoint out;
  out.m = m;
  out.log_mag_pred = pred_log;
  out.log_mag_exact = exact_log;
  const double ratio = pred_sign * exact_sign * std::exp(pred_log - exact_log);
  out.rel_error = std::abs(ratio - 1.0);
  return out;
}

}  // namespace sheffer
