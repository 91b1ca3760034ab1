#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace giftex {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an enumeration or brute-force evaluation would exceed the
/// caller's element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum number of thefts allowed per gift.
class StealLimit {
 public:
  constexpr explicit StealLimit(unsigned sigma) : sigma_(sigma) {}
  constexpr unsigned value() const { return sigma_; }
  /// Largest admissible block size, sigma + 1.
  constexpr unsigned max_block() const { return sigma_ + 1; }
  constexpr auto operator<=>(const StealLimit&) const = default;

 private:
  unsigned sigma_;
};

/// num/den in canonical form (GMP arithmetic requires canonical operands).
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// n!, memoized for the lifetime of the process. Thread-safe.
const Integer& factorial(unsigned n);

/// C(k, i); zero when i > k.
Integer binomial(unsigned k, unsigned i);

/// 1/n! as an exact rational; zero for negative n (the reciprocal of a pole).
Rational inverse_factorial(long n);

Integer pow_int(unsigned long base, unsigned long exponent);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Parses "p" or "p/q" (canonicalized).
Rational parse_rational(const std::string& text);

/// Renders v with exactly `digits` digits after the decimal point, truncated
/// toward zero.
std::string to_decimal(const Rational& v, unsigned digits);

}  // namespace giftex
