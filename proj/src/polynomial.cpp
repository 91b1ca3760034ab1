#include "giftex/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace giftex {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(const Rational& constant) : coeffs_{constant} { trim(); }

Polynomial Polynomial::monomial(const Rational& coeff, unsigned degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::string(s.substr(start, pos - start));
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("polynomial parse error (") + what + ") in '" +
                                std::string(s) + "'");
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  Cursor cur{text};
  Polynomial result;
  bool first = true;
  for (;;) {
    cur.skip();
    if (cur.pos == text.size()) break;
    Rational sign(1);
    if (cur.eat('+')) {
    } else if (cur.eat('-')) {
      sign = -1;
    } else if (!first) {
      cur.fail("expected + or -");
    }
    first = false;
    Rational coeff(1);
    bool have_number = false;
    if (cur.peek_digit()) {
      std::string num = cur.digits();
      if (cur.eat('/')) num += "/" + cur.digits();
      coeff = parse_rational(num);
      have_number = true;
      cur.eat('*');
    }
    unsigned degree = 0;
    if (cur.eat('n')) {
      degree = 1;
      if (cur.eat('^')) {
        std::string e = cur.digits();
        if (e.empty()) cur.fail("missing exponent");
        degree = static_cast<unsigned>(std::stoul(e));
      }
    } else if (!have_number) {
      cur.fail("empty term");
    }
    result += monomial(sign * coeff, degree);
  }
  return result;
}

Rational Polynomial::operator()(const Rational& n) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Polynomial Polynomial::shifted(long s) const {
  // Horner in the polynomial ring: p(n+s) = (...(c_d (n+s) + c_{d-1})(n+s) + ...).
  Polynomial linear(std::vector<Rational>{Rational(s), Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + Polynomial(*it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Integer Polynomial::common_denominator() const {
  Integer l(1);
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::vector<Integer> Polynomial::scaled_numerators() const {
  Integer d = common_denominator();
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(Integer(c.get_num() * (d / c.get_den())));
  return out;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1) && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace giftex
