#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sheffer {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Arbitrary-precision real with runtime-selectable precision (MPFR backend).
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// Sets the MPFR working precision (in bits) for the current scope and
/// restores the previous precision on destruction.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(bits_to_digits(bits));
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  static unsigned bits_to_digits(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 2;
  }

 private:
  unsigned saved_;
};

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
}

/// Serializes as "p" or "p/q" (never a float).
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace sheffer
