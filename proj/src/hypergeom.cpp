#include "giftex/hypergeom.hpp"

#include "giftex/core_tables.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace giftex {

namespace {

std::optional<unsigned> nonpositive_integer(const Rational& a) {
  if (a.get_den() != 1 || sgn(a) > 0) return std::nullopt;
  Integer m = -a.get_num();
  if (!m.fits_uint_p()) throw std::domain_error("hypergeometric parameter too large");
  return static_cast<unsigned>(m.get_ui());
}

Rational rational_pow(const Rational& base, long e) {
  Rational r(1);
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return r;
}

}  // namespace

unsigned termination_index(const HypParams& p) {
  std::optional<unsigned> t;
  for (const auto& a : p.upper) {
    if (auto m = nonpositive_integer(a)) t = t ? std::min(*t, *m) : *m;
  }
  if (!t) throw std::domain_error("hyp_terminating: no nonpositive-integer upper parameter");
  return *t;
}

Rational hyp_terminating(const HypParams& p) {
  const unsigned T = termination_index(p);
  for (const auto& b : p.lower) {
    if (auto m = nonpositive_integer(b); m && *m < T) {
      throw std::domain_error("hyp_terminating: lower parameter " + b.get_str() +
                              " vanishes before termination");
    }
  }
  Rational sum(0);
  Rational term(1);
  for (unsigned i = 0; i <= T; ++i) {
    sum += term;
    // term_{i+1} = term_i * prod(a+i) / prod(b+i) * z / (i+1)
    for (const auto& a : p.upper) term *= a + i;
    for (const auto& b : p.lower) term /= b + i;
    term *= p.z;
    term /= i + 1;
  }
  return sum;
}

Integer g1_via_2f0(unsigned n) {
  Rational v = hyp_terminating({{Rational(n + 1), -Rational(n)}, {}, Rational(-1, 2)});
  if (v.get_den() != 1) throw std::logic_error("g1_via_2f0: non-integer value");
  return v.get_num();
}

namespace {

const Rational kEightThirds(8, 3);

Rational e2_small_excess(unsigned n, unsigned eta, const Rational& z) {
  Rational pre = ratio(factorial(n + eta), factorial(eta) * factorial(n - eta) * pow_int(2, eta));
  const Rational a = ratio(-static_cast<long>(eta), 2);
  return pre * hyp_terminating({{a, a + Rational(1, 2)}, {Rational(n - eta + 1)}, z});
}

}  // namespace

Rational e2_large_excess_form(long n, long eta, const Rational& z) {
  if (2 * n - eta < 0 || eta - n < 0) return 0;
  if (eta + n < 0) throw std::domain_error("e2_large_excess_form: negative numerator factorial");
  Rational pre = ratio(factorial(static_cast<unsigned>(eta + n)),
                       factorial(static_cast<unsigned>(2 * n - eta)) *
                           factorial(static_cast<unsigned>(eta - n)));
  pre *= rational_pow(Rational(2), -n) * rational_pow(Rational(3), -(eta - n));
  const Rational a = ratio(eta - 2 * n, 2);
  return pre * hyp_terminating({{a, a + Rational(1, 2)}, {Rational(eta - n + 1)}, z});
}

Integer e2_via_2f1(unsigned n, unsigned k, E2Branch branch) {
  if (k < n || k > 3 * n) throw std::out_of_range("e2_via_2f1: need n <= k <= 3n");
  const unsigned eta = k - n;
  Rational v;
  if (branch == E2Branch::SmallExcess) {
    if (eta > n) throw std::out_of_range("e2_via_2f1: small-excess form needs k-n <= n");
    v = e2_small_excess(n, eta, kEightThirds);
  } else {
    if (eta < n) throw std::out_of_range("e2_via_2f1: large-excess form needs k-n >= n");
    v = e2_large_excess_form(n, eta, kEightThirds);
  }
  if (v.get_den() != 1) throw std::logic_error("e2_via_2f1: non-integer value");
  return v.get_num();
}

Integer e2_via_2f1(unsigned n, unsigned k) {
  if (k < n || k > 3 * n) throw std::out_of_range("e2_via_2f1: need n <= k <= 3n");
  return e2_via_2f1(n, k, k - n <= n ? E2Branch::SmallExcess : E2Branch::LargeExcess);
}

Integer g2_via_2f1(unsigned n) {
  Integer total(0);
  for (unsigned eta = 0; eta < n; ++eta) total += e2_via_2f1(n, n + eta, E2Branch::SmallExcess);
  for (unsigned eta = n; eta <= 2 * n; ++eta) total += e2_via_2f1(n, n + eta, E2Branch::LargeExcess);
  return total;
}

Rational PhiPolynomial::operator()(const Rational& n, const Rational& eta, const Rational& z) const {
  Rational total(0);
  for (const auto& [zp, terms] : by_z_power) {
    Rational c(0);
    for (const auto& t : terms) {
      c += Rational(t.coeff) * rational_pow(n, t.n_exp) * rational_pow(eta, t.eta_exp);
    }
    total += c * rational_pow(z, zp);
  }
  return total;
}

// Terms listed exactly as tabulated; each entry is {coeff, power of n, power of eta}.
const PhiPolynomials& appendix_phi() {
  static const PhiPolynomials tables{
      PhiPolynomial{{
          {6, {{486, 0, 0}, {729, 1, 1}, {-2349, 1, 0}, {2916, 2, 0}, {-162, 0, 1}, {-729, 3, 0},
               {-729, 2, 1}}},
          {5, {{-45, 1, 0}, {306, 0, 1}, {-1080, 2, 0}, {207, 3, 0}, {180, 0, 3}, {-216, 0, 2},
               {-324, 1, 2}, {-1539, 1, 1}, {1647, 2, 1}, {-54, 0, 0}}},
          {4, {{3441, 3, 0}, {-4023, 2, 1}, {24621, 1, 0}, {-348, 0, 3}, {-16884, 2, 0},
               {1260, 1, 2}, {-10650, 0, 1}, {-1800, 0, 2}, {13203, 1, 1}, {-9054, 0, 0}}},
          {3, {{341, 3, 0}, {948, 1, 2}, {8614, 0, 1}, {-3359, 1, 0}, {261, 2, 1}, {984, 0, 2},
               {-6081, 1, 1}, {-484, 0, 3}, {3270, 0, 0}}},
          {2, {{-35572, 1, 0}, {-36712, 1, 1}, {-4092, 3, 0}, {13512, 0, 2}, {2572, 0, 3},
               {14952, 0, 0}, {25892, 0, 1}, {11164, 2, 1}, {-9244, 1, 2}, {22472, 2, 0}}},
          {1, {{11200, 1, 2}, {-20160, 0, 2}, {-3200, 0, 3}, {-21120, 0, 0}, {-24320, 2, 0},
               {45760, 1, 1}, {4160, 3, 0}, {-38080, 0, 1}, {42560, 1, 0}, {-12160, 2, 1}}},
          {0, {{7680, 0, 0}, {7680, 2, 0}, {14080, 0, 1}, {-15360, 1, 1}, {-3840, 1, 2},
               {1280, 0, 3}, {-14080, 1, 0}, {-1280, 3, 0}, {7680, 0, 2}, {3840, 2, 1}}},
      }},
      PhiPolynomial{{
          {5, {{27, 0, 2}, {216, 1, 1}, {-189, 0, 1}, {324, 0, 0}, {189, 2, 0}, {-675, 1, 0}}},
          {4, {{-9, 0, 2}, {-9, 2, 0}, {-504, 1, 1}, {495, 0, 1}, {9, 1, 0}, {486, 0, 0}}},
          {3, {{-15, 0, 2}, {600, 1, 1}, {-1191, 0, 1}, {-789, 2, 0}, {-3672, 0, 0}, {3399, 1, 0}}},
          {2, {{-243, 0, 2}, {408, 1, 1}, {-555, 0, 1}, {-303, 2, 0}, {-978, 0, 0}, {1155, 1, 0}}},
          {1, {{560, 0, 2}, {-1360, 1, 1}, {3040, 0, 1}, {-3440, 1, 0}, {720, 2, 0}, {3840, 0, 0}}},
          {0, {{-320, 0, 2}, {640, 1, 1}, {-1600, 0, 1}, {-320, 2, 0}, {-1920, 0, 0}, {1600, 1, 0}}},
      }},
  };
  return tables;
}

namespace {

// a*n + b*eta + c
struct Lin {
  long n, eta, c;
  long at(long nv, long ev) const { return n * nv + eta * ev + c; }
};

// coeff(n) * num! / (den1! den2! 2^pow2 3^pow3) * 2F1[a, a+1/2; lower; z]
// with a = eta/2 - n + upper_half/2 and lower = eta - n + lower_shift.
struct NineTerm {
  const char* coeff;
  Lin num, den1, den2, pow2, pow3;
  long upper_half;
  long lower_shift;
};

// The alternating combination E_2(n,k) - (right-hand side of the E_2
// recurrence), every E_2 written in the large-excess 2F1 form.
const NineTerm kNineTerms[] = {
    {"1", {1, 1, 0}, {-1, 1, 0}, {2, -1, 0}, {1, 0, 0}, {-1, 1, 0}, 0, 1},
    {"-9/2*n^2 + 9/2*n - 1", {1, 1, -3}, {-1, 1, -1}, {2, -1, 0}, {1, 0, -1}, {-1, 1, -1}, 0, 0},
    {"5/2", {1, 1, -1}, {-1, 1, 1}, {2, -1, -2}, {1, 0, -1}, {-1, 1, 1}, 2, 2},
    {"-9/2*n^2 + 18*n - 35/2", {1, 1, -4}, {-1, 1, 0}, {2, -1, -2}, {1, 0, -2}, {-1, 1, 0}, 2, 1},
    {"-6*n + 6", {1, 1, -3}, {-1, 1, 1}, {2, -1, -3}, {1, 0, -2}, {-1, 1, 1}, 3, 2},
    {"3/2", {1, 1, -2}, {-1, 1, 2}, {2, -1, -4}, {1, 0, -2}, {-1, 1, 2}, 4, 3},
    {"-6*n + 15", {1, 1, -4}, {-1, 1, 2}, {2, -1, -5}, {1, 0, -3}, {-1, 1, 2}, 5, 3},
    {"-5/2", {1, 1, -3}, {-1, 1, 3}, {2, -1, -6}, {1, 0, -3}, {-1, 1, 3}, 6, 4},
    {"-5/2", {1, 1, -4}, {-1, 1, 4}, {2, -1, -8}, {1, 0, -4}, {-1, 1, 4}, 8, 5},
};

Rational f21_half_pair(long n, long eta, long upper_half, long lower_shift, const Rational& z) {
  const Rational a = ratio(eta - 2 * n + upper_half, 2);
  return hyp_terminating({{a, a + Rational(1, 2)}, {Rational(eta - n + lower_shift)}, z});
}

}  // namespace

PhiIdentitySides phi_identity_sides(unsigned n_u, unsigned eta_u, const Rational& z,
                                    const PhiPolynomials& phi, Phi2Scaling scaling) {
  const long n = n_u, eta = eta_u;
  if (z == 0 || z == 1) throw std::domain_error("phi_identity: z must not be 0 or 1");
  if (eta < n + 1 || eta > 2 * n) throw std::domain_error("phi_identity: need n+1 <= eta <= 2n");

  PhiIdentitySides out{Rational(0), Rational(0)};
  for (const auto& t : kNineTerms) {
    long d1 = t.den1.at(n, eta), d2 = t.den2.at(n, eta), top = t.num.at(n, eta);
    if (d1 < 0 || d2 < 0) continue;  // 1/(negative)! = 0
    if (top < 0) throw std::domain_error("phi_identity: negative numerator factorial");
    Rational pre = Polynomial::parse(t.coeff)(n) *
                   ratio(factorial(static_cast<unsigned>(top)),
                         factorial(static_cast<unsigned>(d1)) * factorial(static_cast<unsigned>(d2)));
    pre *= rational_pow(Rational(2), -t.pow2.at(n, eta)) * rational_pow(Rational(3), -t.pow3.at(n, eta));
    out.nine_term += pre * f21_half_pair(n, eta, t.upper_half, t.lower_shift, z);
  }

  const long d1 = eta - n + 1, d2 = 2 * n - eta - 2, top = eta + n - 4;
  if (d1 >= 0 && d2 >= 0) {
    if (top < 0) throw std::domain_error("phi_identity: negative numerator factorial");
    Rational pre = ratio(factorial(static_cast<unsigned>(top)),
                         factorial(static_cast<unsigned>(d1)) * factorial(static_cast<unsigned>(d2)));
    pre *= (3 * z - 8);
    pre /= Rational(324) * rational_pow(Rational(2), n) * rational_pow(Rational(3), eta - n) *
           rational_pow(z, 3) * rational_pow(z - 1, 3);
    const Rational nr(n), er(eta);
    Rational s2 = scaling == Phi2Scaling::Corrected ? Rational(4 * (eta - n + 1)) : Rational(1);
    out.factored = pre * (phi.phi1(nr, er, z) * f21_half_pair(n, eta, 2, 2, z) +
                          s2 * phi.phi2(nr, er, z) * f21_half_pair(n, eta, 0, 1, z));
  }
  return out;
}

bool phi_identity_check(unsigned n, unsigned eta, const Rational& z, const PhiPolynomials& phi,
                        Phi2Scaling scaling) {
  auto sides = phi_identity_sides(n, eta, z, phi, scaling);
  return sides.nine_term == sides.factored;
}

Rational asym_ratio_exact(unsigned sigma, unsigned n) {
  StealLimit s(sigma);
  Integer num = g(s, n) * factorial(n);
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), factorial(s.max_block()).get_mpz_t(), n);
  num *= p;
  return ratio(num, factorial(s.max_block() * n));
}

std::string asym_ratio(unsigned sigma, unsigned n, unsigned digits) {
  if (n == 0) throw std::invalid_argument("asym_ratio: n must be positive");
  return to_decimal(asym_ratio_exact(sigma, n), digits);
}

Rational euler_e(unsigned digits) {
  // Tail after 1/m! is below 2/(m+1)!.
  Integer bound = pow_int(10, digits + 5);
  Rational sum(0);
  unsigned m = 0;
  for (;; ++m) {
    sum += inverse_factorial(m);
    if (factorial(m + 1) > 2 * bound) break;
  }
  return sum;
}

}  // namespace giftex
