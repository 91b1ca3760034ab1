#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "giftex/numeric.hpp"

namespace giftex {

/// Univariate polynomial in n with exact rational coefficients, stored in
/// ascending order of degree with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(const Rational& constant);  // NOLINT: implicit by design of the registry tables
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  /// Parses a sum of terms such as "32/3*n^3 - 16*n^2 + 22/3*n - 1".
  static Polynomial parse(std::string_view text);
  static Polynomial monomial(const Rational& coeff, unsigned degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& n) const;
  Rational operator()(long n) const { return (*this)(Rational(n)); }

  /// p(n + s).
  Polynomial shifted(long s) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a *= Rational(1) / c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Least common denominator of the coefficients (1 for the zero polynomial).
  Integer common_denominator() const;
  /// Integer numerators, ascending, after scaling by common_denominator().
  std::vector<Integer> scaled_numerators() const;

  std::string to_string(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace giftex
