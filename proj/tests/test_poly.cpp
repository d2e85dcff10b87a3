#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sheffer/poly.hpp"
#include "sheffer/series.hpp"

#include <random>

using namespace sheffer;

namespace {
const Params kSym(Rational(7, 3), Rational(-5, 2));  // generic rational parameters
Rational q(long num, long den = 1) { return Rational(num, den); }
}  // namespace

TEST_CASE("c_coeff closed form") {
  CHECK(c_coeff(0, kSym) == 1);
  // c_1 = a, c_2 = a^2/2 + b, c_3 = a^3/6 + ab
  const Rational a = kSym.a, b = kSym.b;
  CHECK(c_coeff(1, kSym) == a);
  CHECK(c_coeff(2, kSym) == a * a / 2 + b);
  CHECK(c_coeff(3, kSym) == a * a * a / 6 + a * b);
}

TEST_CASE("coefficient a_{n,k}") {
  const Rational a = kSym.a, b = kSym.b;
  CHECK(coefficient(2, 0, kSym) == 2 * a);
  CHECK(coefficient(4, 2, kSym) == 12 * a);
  CHECK(coefficient(4, 0, kSym) == 12 * (a * a + 2 * b));
  CHECK(coefficient(5, 1, kSym) == 60 * (a * a + 2 * b));
  CHECK(coefficient(5, 3, kSym) == 20 * a);
  for (int n : {0, 1, 7, 23}) CHECK(coefficient(n, n, kSym) == 1);
  CHECK(coefficient(5, 2, kSym) == 0);  // odd n-k
  CHECK_THROWS_AS(coefficient(3, 4, kSym), std::domain_error);
}

TEST_CASE("build_explicit small degrees") {
  const Rational a = kSym.a, b = kSym.b;
  const ExactPoly p0 = build_explicit(0, kSym);
  CHECK(p0.coeffs[0] == 1);
  const ExactPoly p1 = build_explicit(1, kSym);
  CHECK(p1.coeffs[0] == 0);
  CHECK(p1.coeffs[1] == 1);
  const ExactPoly p2 = build_explicit(2, kSym);
  CHECK(p2.coeffs[0] == 2 * a);
  CHECK(p2.coeffs[2] == 1);
  const ExactPoly p4 = build_explicit(4, kSym);
  CHECK(p4.coeffs[0] == 12 * a * a + 24 * b);
  CHECK(p4.coeffs[2] == 12 * a);
  CHECK(p4.coeffs[4] == 1);
}

TEST_CASE("build_recurrence seeds and hand-expanded P_4") {
  const Rational a = kSym.a, b = kSym.b;
  const auto seq = build_recurrence(4, kSym);
  CHECK(seq[3].coeffs[1] == 6 * a);
  CHECK(seq[3].coeffs[3] == 1);
  // x(6ax + x^3) + 6a(2a + x^2) + 24b, expanded by hand
  CHECK(seq[4].coeffs[0] == 12 * a * a + 24 * b);
  CHECK(seq[4].coeffs[2] == 12 * a);
  CHECK(seq[4].coeffs[4] == 1);
}

TEST_CASE("route equivalence explicit vs recurrence, n <= 60") {
  for (const Params& p : {kSym, Params(q(0), q(-1)), Params(q(2), q(3))}) {
    const auto seq = build_recurrence(60, p);
    for (int n = 0; n <= 60; ++n) CHECK(build_explicit(n, p) == seq[n]);
  }
}

TEST_CASE("derivative identity and trivia") {
  const auto seq = build_recurrence(60, kSym);
  CHECK(derivative(seq[0]).coeffs == ExactPoly(0).coeffs);
  for (int n = 1; n <= 60; ++n) {
    const ExactPoly d = derivative(seq[n]);
    REQUIRE(d.degree() == n - 1);
    for (Eigen::Index k = 0; k <= d.degree(); ++k)
      CHECK(d.coeffs[k] == Rational(n) * seq[n - 1].coeffs[k]);
  }
}

TEST_CASE("parity and monic invariants") {
  const auto seq = build_recurrence(40, kSym);
  for (int n = 0; n <= 40; ++n) {
    CHECK(seq[n].is_monic());
    for (Eigen::Index k = 0; k <= n; ++k)
      if ((n - k) % 2 == 1) CHECK(seq[n].coeffs[k] == 0);
    // P_n(-x) = (-1)^n P_n(x) at a rational sample point
    const Rational x(13, 7);
    const Rational lhs = evaluate(seq[n], Rational(-x));
    const Rational rhs = (n % 2 == 0 ? Rational(1) : Rational(-1)) * evaluate(seq[n], x);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("evaluate") {
  const auto seq = build_recurrence(4, Params(q(1), q(-1)));
  CHECK(evaluate(seq[2], Rational(0)) == 2);
  CHECK(evaluate(seq[1], Rational(17, 5)) == Rational(17, 5));
  // P_4(1) at a=1, b=-1: 1 + 12 + 12 - 24 = 1
  CHECK(evaluate(seq[4], Rational(1)) == 1);
}

TEST_CASE("generating-function check: [z^n] e^{az^2+bz^4} e^{xz} = P_n(x)/n!") {
  const int N = 21;
  for (const Params& p : {kSym, Params(q(3), q(-2))}) {
    Series u = Series::Zero(N);
    u[2] = p.a;
    u[4] = p.b;
    const Series g = series_exp(u, N);
    const auto seq = build_recurrence(N - 1, p);
    for (const Rational& x : {q(1), q(-2), q(5, 3)}) {
      Series e = Series::Zero(N);
      Rational term = 1;
      for (int j = 0; j < N; ++j) {
        e[j] = term;
        term = term * x / (j + 1);
      }
      const Series prod = series_mul(g, e, N);
      for (int n = 0; n < N; ++n)
        CHECK(prod[n] == evaluate(seq[n], x) / Rational(factorial(n)));
    }
  }
}
