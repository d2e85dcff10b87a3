#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sheffer/gentree.hpp"
#include "sheffer/poly.hpp"
#include "sheffer/riordan.hpp"

using namespace sheffer;

namespace {
const Params kP(Rational(1), Rational(-1));
}

TEST_CASE("counts_to_level: first levels at a=1, b=-1") {
  const auto levels = counts_to_level(4, kP);
  REQUIRE(levels.size() == 5);
  CHECK(levels[0].at(0) == 1);

  CHECK(levels[1].at(1) == 1);
  CHECK(levels[1].signed_counts.size() == 1);

  CHECK(levels[2].at(0) == 2);  // 2a
  CHECK(levels[2].at(2) == 1);

  CHECK(levels[3].at(1) == 6);  // 6a
  CHECK(levels[3].at(3) == 1);

  // P_4 = x^4 + 12x^2 - 12 at (1,-1)
  CHECK(levels[4].at(0) == -12);
  CHECK(levels[4].at(2) == 12);
  CHECK(levels[4].at(4) == 1);
}

TEST_CASE("step_level applies the succession rule") {
  const Params p(Rational(2), Rational(-1));
  TreeLevelCounts lv;
  lv.level = 3;
  lv.signed_counts = {{3, BigInt(1)}};
  const TreeLevelCounts next = step_level(lv, p);
  CHECK(next.level == 4);
  CHECK(next.at(4) == 1);
  CHECK(next.at(2) == 12);   // 2ak = 2*2*3
  CHECK(next.at(0) == -24);  // 24 b C(3,3), marked
  CHECK_THROWS_AS(step_level(lv, Params(Rational(1, 2), Rational(-1))), std::domain_error);
}

TEST_CASE("verify_interpretation matches P_n coefficients exactly") {
  for (long a : {1, 2, 3})
    for (long b : {-1, -2, -3}) {
      const InterpretationReport rep = verify_interpretation(20, Params(Rational(a), Rational(b)));
      CHECK(rep.ok);
      CHECK(rep.hypothesis_met);
      if (!rep.ok) MESSAGE("mismatch at n=", rep.first_n, " k=", rep.first_k, ": ", rep.detail);
    }
}

TEST_CASE("verify_interpretation: degenerate b = 0 still counts correctly") {
  const InterpretationReport rep = verify_interpretation(15, Params(Rational(1), Rational(0)));
  CHECK(rep.ok);
  CHECK_FALSE(rep.hypothesis_met);  // b < 0 fails, but the count identity holds
}

TEST_CASE("enumerate_explicit: level 4 at a=1, b=-1") {
  const auto levels = enumerate_explicit(4, kP);
  REQUIRE(levels.size() == 5);
  const ExplicitLevel& l4 = levels[4];
  // mu_4(0) = 12, mu_4(2) = 12, mu_4(4) = 1, marked mu-bar_4(0) = 24
  CHECK(l4.unmarked.at(0) == 12);
  CHECK(l4.unmarked.at(2) == 12);
  CHECK(l4.unmarked.at(4) == 1);
  CHECK(l4.marked.at(0) == 24);
  // signed difference reproduces the coefficients
  const auto signed_l4 = counts_to_level(4, kP)[4];
  for (const auto& [k, mu] : l4.unmarked) {
    BigInt bar = 0;
    if (auto it = l4.marked.find(k); it != l4.marked.end()) bar = it->second;
    CHECK(signed_l4.at(k) == mu - bar);
  }
}

TEST_CASE("enumerate_explicit respects the node budget") {
  CHECK_THROWS_AS(enumerate_explicit(30, Params(Rational(5), Rational(-5)), BigInt(1000)),
                  std::length_error);
}

TEST_CASE("cross-module: level step is the transpose action of the production matrix") {
  const Params p(Rational(3), Rational(-2));
  const int N = 12;
  const RationalMatrix P = production_matrix(N, p);
  const auto levels = counts_to_level(N - 2, p);
  for (int n = 0; n + 1 < static_cast<int>(levels.size()); ++n) {
    for (int k = 0; k < N; ++k) {
      Rational expect = 0;
      for (int j = 0; j < N; ++j)
        expect += P(j, k) * Rational(levels[n].at(j));
      CHECK(Rational(levels[n + 1].at(k)) == expect);
    }
  }
}
