#include "giftex/numeric.hpp"

#include <deque>
#include <mutex>

namespace giftex {

namespace {

std::mutex factorial_mutex;
// deque: push_back keeps references to existing elements valid.
std::deque<Integer>& factorial_cache() {
  static std::deque<Integer> cache{Integer(1)};
  return cache;
}

}  // namespace

const Integer& factorial(unsigned n) {
  std::lock_guard<std::mutex> lock(factorial_mutex);
  auto& cache = factorial_cache();
  for (std::size_t i = cache.size(); i <= n; ++i) {
    cache.push_back(cache.back() * static_cast<unsigned long>(i));
  }
  return cache[n];
}

Integer binomial(unsigned k, unsigned i) {
  if (i > k) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), k, i);
  return result;
}

Rational inverse_factorial(long n) {
  if (n < 0) return 0;
  return ratio(Integer(1), factorial(static_cast<unsigned>(n)));
}

Integer pow_int(unsigned long base, unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& v, unsigned digits) {
  Integer scaled = v.get_num() * pow_int(10, digits);
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
  bool negative = sgn(v) < 0;
  Integer mag = abs(q);
  std::string s = mag.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return negative ? "-" + out : out;
}

}  // namespace giftex
