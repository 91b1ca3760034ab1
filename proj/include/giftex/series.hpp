#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "giftex/core_tables.hpp"
#include "giftex/numeric.hpp"

namespace giftex {

/// Truncated power series sum_{i=0}^{order} c_i x^i over a coefficient ring R
/// (exact rationals, or another PowerSeries for bivariate expansions).
/// Results of binary operations carry the smaller of the two orders.
template <class R>
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("PowerSeries: at least one coefficient required");
  }

  /// Constant c padded with zeros up to `order`.
  static PowerSeries constant(const R& c, unsigned order) {
    std::vector<R> v(order + 1, zero_like(c));
    v[0] = c;
    return PowerSeries(std::move(v));
  }

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const R& operator[](unsigned i) const { return c_.at(i); }
  R& operator[](unsigned i) { return c_.at(i); }
  const std::vector<R>& coefficients() const { return c_; }

  PowerSeries truncated(unsigned order) const {
    std::vector<R> v(c_.begin(), c_.begin() + std::min<std::size_t>(order + 1, c_.size()));
    return PowerSeries(std::move(v));
  }

  static R zero_like(const R& prototype) { return R(prototype * Rational(0)); }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<R> c_;
};

using ExactSeries = PowerSeries<Rational>;
/// Series in x whose coefficients are series in y.
using BivariateSeries = PowerSeries<ExactSeries>;

inline bool is_zero(const Rational& r) { return r == 0; }

template <class R>
bool is_zero(const PowerSeries<R>& s) {
  return std::all_of(s.coefficients().begin(), s.coefficients().end(),
                     [](const R& c) { return is_zero(c); });
}

template <class R>
PowerSeries<R> operator*(const PowerSeries<R>& s, const Rational& k) {
  std::vector<R> v;
  v.reserve(s.order() + 1);
  for (const auto& c : s.coefficients()) v.push_back(R(c * k));
  return PowerSeries<R>(std::move(v));
}

template <class R>
PowerSeries<R> operator+(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  unsigned n = std::min(a.order(), b.order());
  std::vector<R> v;
  v.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) v.push_back(R(a[i] + b[i]));
  return PowerSeries<R>(std::move(v));
}

template <class R>
PowerSeries<R> operator-(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  return a + b * Rational(-1);
}

/// Cauchy product truncated to min(a.order(), b.order()).
template <class R>
PowerSeries<R> operator*(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  unsigned n = std::min(a.order(), b.order());
  std::vector<R> v(n + 1, PowerSeries<R>::zero_like(a[0]));
  for (unsigned i = 0; i <= n; ++i) {
    if (is_zero(a[i])) continue;
    for (unsigned j = 0; i + j <= n; ++j) v[i + j] = R(v[i + j] + a[i] * b[j]);
  }
  return PowerSeries<R>(std::move(v));
}

template <class R>
PowerSeries<R> series_mul(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  return a * b;
}

/// d/dx; the result has order order()-1 (order 0 maps to the zero constant).
template <class R>
PowerSeries<R> series_derivative(const PowerSeries<R>& s) {
  if (s.order() == 0) return PowerSeries<R>::constant(PowerSeries<R>::zero_like(s[0]), 0);
  std::vector<R> v;
  v.reserve(s.order());
  for (unsigned i = 1; i <= s.order(); ++i) v.push_back(R(s[i] * Rational(i)));
  return PowerSeries<R>(std::move(v));
}

/// exp(f) for f with zero constant term, to f's order, via g' = f' g:
/// n g_n = sum_{i=1}^{n} i f_i g_{n-i}.
template <class R, class One>
PowerSeries<R> series_exp(const PowerSeries<R>& f, const One& one) {
  if (!is_zero(f[0])) throw std::invalid_argument("series_exp: constant term must be zero");
  const unsigned n_max = f.order();
  std::vector<R> g(n_max + 1, PowerSeries<R>::zero_like(f[0]));
  g[0] = one;
  for (unsigned n = 1; n <= n_max; ++n) {
    R acc = PowerSeries<R>::zero_like(f[0]);
    for (unsigned i = 1; i <= n; ++i) {
      if (is_zero(f[i])) continue;
      acc = R(acc + (f[i] * g[n - i]) * Rational(i));
    }
    g[n] = R(acc * Rational(1, n));
  }
  return PowerSeries<R>(std::move(g));
}

inline ExactSeries series_exp(const ExactSeries& f) { return series_exp(f, Rational(1)); }

/// Square root of a series with constant term 1, to s's order.
ExactSeries series_sqrt(const ExactSeries& s);

/// 1/s for s with nonzero constant term, to s's order.
ExactSeries series_inverse(const ExactSeries& s);

/// n! [x^n] of exp(1 - sqrt(1-2x)) / sqrt(1-2x) for n <= N. Throws
/// std::logic_error if any scaled coefficient is not an integer.
std::vector<Integer> egf_g1_closed(unsigned N);

/// The EGF of (G(0), ..., G(N)) as a series of order N.
ExactSeries egf_from_values(const std::vector<Integer>& values);

/// Residual G'' - 3G' - 2x G'' - G of a series of order N, of order N-2.
ExactSeries g1_ode_residual(const ExactSeries& egf);

/// True iff the closed-form EGF satisfies the G_1 differential equation to
/// order N-2. Requires N >= 2.
bool ode_check_g1(unsigned N);

/// k! [x^n y^k] exp(x (y + y^2/2! + ... + y^{sigma+1}/(sigma+1)!)) for
/// n <= n_max, k <= k_max, indexed [n][k]. Throws std::logic_error on a
/// non-integer coefficient.
std::vector<std::vector<Integer>> egf_bivariate_e(StealLimit sigma, unsigned n_max, unsigned k_max);

}  // namespace giftex
