#include "giftex/series.hpp"

namespace giftex {

ExactSeries series_sqrt(const ExactSeries& s) {
  if (s[0] != 1) throw std::invalid_argument("series_sqrt: constant term must be 1");
  std::vector<Rational> r(s.order() + 1, Rational(0));
  r[0] = 1;
  for (unsigned n = 1; n <= s.order(); ++n) {
    Rational acc = s[n];
    for (unsigned i = 1; i < n; ++i) acc -= r[i] * r[n - i];
    r[n] = acc / 2;
  }
  return ExactSeries(std::move(r));
}

ExactSeries series_inverse(const ExactSeries& s) {
  if (s[0] == 0) throw std::invalid_argument("series_inverse: constant term must be nonzero");
  std::vector<Rational> r(s.order() + 1, Rational(0));
  r[0] = 1 / s[0];
  for (unsigned n = 1; n <= s.order(); ++n) {
    Rational acc(0);
    for (unsigned i = 1; i <= n; ++i) acc += s[i] * r[n - i];
    r[n] = -acc * r[0];
  }
  return ExactSeries(std::move(r));
}

namespace {

std::vector<Integer> scale_by_factorials(const ExactSeries& s, const char* what) {
  std::vector<Integer> out;
  out.reserve(s.order() + 1);
  for (unsigned n = 0; n <= s.order(); ++n) {
    Rational v = s[n] * Rational(factorial(n));
    if (v.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integer coefficient");
    out.push_back(v.get_num());
  }
  return out;
}

ExactSeries closed_form_g1_egf(unsigned N) {
  std::vector<Rational> base(N + 1, Rational(0));
  base[0] = 1;
  if (N >= 1) base[1] = -2;
  ExactSeries root = series_sqrt(ExactSeries(base));  // sqrt(1 - 2x)
  ExactSeries one = ExactSeries::constant(Rational(1), N);
  return series_exp(one - root) * series_inverse(root);
}

}  // namespace

std::vector<Integer> egf_g1_closed(unsigned N) {
  return scale_by_factorials(closed_form_g1_egf(N), "egf_g1_closed");
}

ExactSeries egf_from_values(const std::vector<Integer>& values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  for (unsigned n = 0; n < values.size(); ++n) c.push_back(ratio(values[n], factorial(n)));
  return ExactSeries(std::move(c));
}

ExactSeries g1_ode_residual(const ExactSeries& egf) {
  if (egf.order() < 2) throw std::invalid_argument("g1_ode_residual: order must be at least 2");
  const unsigned out_order = egf.order() - 2;
  ExactSeries d1 = series_derivative(egf);
  ExactSeries d2 = series_derivative(d1);
  std::vector<Rational> r(out_order + 1, Rational(0));
  for (unsigned n = 0; n <= out_order; ++n) {
    Rational x_d2 = n >= 1 ? d2[n - 1] : Rational(0);  // [x^n] x G''
    r[n] = d2[n] - 3 * d1[n] - 2 * x_d2 - egf[n];
  }
  return ExactSeries(std::move(r));
}

bool ode_check_g1(unsigned N) {
  if (N < 2) throw std::invalid_argument("ode_check_g1: N must be at least 2");
  return is_zero(g1_ode_residual(closed_form_g1_egf(N)));
}

std::vector<std::vector<Integer>> egf_bivariate_e(StealLimit sigma, unsigned n_max, unsigned k_max) {
  // P(y) = y + y^2/2! + ... + y^{sigma+1}/(sigma+1)!
  std::vector<Rational> p(k_max + 1, Rational(0));
  for (unsigned j = 1; j <= sigma.max_block() && j <= k_max; ++j) p[j] = inverse_factorial(j);
  ExactSeries py(std::move(p));
  ExactSeries y_zero = ExactSeries::constant(Rational(0), k_max);

  std::vector<ExactSeries> fx(n_max + 1, y_zero);
  if (n_max >= 1) fx[1] = py;
  BivariateSeries f(std::move(fx));
  BivariateSeries g = series_exp(f, ExactSeries::constant(Rational(1), k_max));

  std::vector<std::vector<Integer>> out(n_max + 1, std::vector<Integer>(k_max + 1));
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= k_max; ++k) {
      Rational v = g[n][k] * Rational(factorial(k));
      if (v.get_den() != 1) throw std::logic_error("egf_bivariate_e: non-integer coefficient");
      out[n][k] = v.get_num();
    }
  }
  return out;
}

}  // namespace giftex
