#include "giftex/core_tables.hpp"

#include <stdexcept>

namespace giftex {

namespace {
const Integer kZero(0);
}

ETable::ETable(StealLimit sigma, unsigned n_max) : sigma_(sigma), n_max_(n_max), rows_(n_max + 1) {
  for (unsigned n = 0; n <= n_max; ++n) rows_[n].assign(sigma.value() * n + 1, Integer(0));
}

bool ETable::in_support(long n, long k) const {
  return n >= 0 && n <= static_cast<long>(n_max_) && k >= n &&
         k <= static_cast<long>(sigma_.max_block()) * n;
}

const Integer& ETable::operator()(long n, long k) const {
  if (!in_support(n, k)) return kZero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - n)];
}

Integer ETable::row_sum(unsigned n) const {
  if (n > n_max_) throw std::out_of_range("ETable::row_sum: n beyond table");
  Integer s(0);
  for (const auto& v : rows_[n]) s += v;
  return s;
}

ETable build_e_table(StealLimit sigma, unsigned n_max) {
  ETable t(sigma, n_max);
  t.slot(0, 0) = 1;
  const unsigned h = sigma.max_block();
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned k = n; k <= h * n; ++k) {
      Integer acc(0);
      for (unsigned i = 0; i <= sigma.value() && i + 1 <= k; ++i) {
        const Integer& prev = t(static_cast<long>(n) - 1, static_cast<long>(k) - 1 - i);
        if (prev != 0) acc += binomial(k - 1, i) * prev;
      }
      t.slot(n, k) = acc;
    }
  }
  return t;
}

GSequence g_sequence(StealLimit sigma, unsigned n_max) {
  ETable t = build_e_table(sigma, n_max);
  GSequence out{sigma, {}};
  out.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.values.push_back(t.row_sum(n));
  return out;
}

namespace {

// Assigns a_{i}, ..., a_{sigma+1} (1-based block sizes) recursively; a_1 is
// fixed by the two linear constraints once a_2.. are chosen.
void compose(unsigned size, unsigned max_size, long count_left, long weight_left, Composition& c,
             const std::function<void(const Composition&)>& visit) {
  if (size > max_size) {
    // Remaining blocks are singletons: a_1 = count_left must equal weight_left.
    if (count_left >= 0 && count_left == weight_left) {
      c.parts[0] = static_cast<unsigned>(count_left);
      visit(c);
    }
    return;
  }
  for (long a = 0;; ++a) {
    long count = count_left - a;
    long weight = weight_left - a * static_cast<long>(size);
    if (count < 0 || weight < count) break;  // a_1 < 0 or weight no longer coverable
    c.parts[size - 1] = static_cast<unsigned>(a);
    compose(size + 1, max_size, count, weight, c, visit);
  }
}

}  // namespace

void for_each_composition(StealLimit sigma, unsigned n, unsigned k,
                          const std::function<void(const Composition&)>& visit) {
  Composition c{std::vector<unsigned>(sigma.max_block(), 0)};
  if (sigma.max_block() == 1) {
    if (n == k) {
      c.parts[0] = n;
      visit(c);
    }
    return;
  }
  compose(2, sigma.max_block(), n, k, c, visit);
}

Integer e_multinomial(StealLimit sigma, unsigned n, unsigned k) {
  Integer total(0);
  const Integer& kf = factorial(k);
  for_each_composition(sigma, n, k, [&](const Composition& c) {
    Integer denom(1);
    for (unsigned i = 0; i < c.parts.size(); ++i) {
      unsigned a = c.parts[i];
      denom *= factorial(a);
      if (a > 0) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), factorial(i + 1).get_mpz_t(), a);
        denom *= p;
      }
    }
    total += kf / denom;
  });
  return total;
}

Integer e1_closed(unsigned n, unsigned k) {
  if (k < n || k > 2 * n) return 0;
  return factorial(k) / (factorial(2 * n - k) * factorial(k - n) * pow_int(2, k - n));
}

Integer g(StealLimit sigma, unsigned n) { return build_e_table(sigma, n).row_sum(n); }

Integer h(StealLimit sigma, unsigned n) {
  if (n == 0) throw std::invalid_argument("h: the number of gifts must be positive");
  return factorial(n) * g(sigma, n - 1);
}

namespace {

void ordered_sum(unsigned remaining, unsigned max_part, unsigned total, const Integer& denom, Integer& acc) {
  if (remaining == 0) {
    acc += factorial(total) / denom;
    return;
  }
  for (unsigned part = 1; part <= max_part; ++part) {
    ordered_sum(remaining - 1, max_part, total + part, denom * factorial(part), acc);
  }
}

}  // namespace

Integer g_ordered_multinomial(StealLimit sigma, unsigned n, std::uint64_t budget) {
  // (sigma+1)^n tuples; compare without overflow.
  Integer tuples = pow_int(sigma.max_block(), n);
  if (tuples > Integer(std::to_string(budget))) {
    throw BudgetExceeded("g_ordered_multinomial: " + tuples.get_str() + " tuples exceed budget " +
                         std::to_string(budget));
  }
  Integer acc(0);
  ordered_sum(n, sigma.max_block(), 0, Integer(1), acc);
  const Integer& nf = factorial(n);
  if (acc % nf != 0) throw std::logic_error("g_ordered_multinomial: sum not divisible by n!");
  return acc / nf;
}

Rational bessel_y(unsigned n, const Rational& z) {
  Rational acc(0);
  Rational zp(1);
  for (unsigned i = 0; i <= n; ++i) {
    Integer num = factorial(n + i);
    Integer den = factorial(n - i) * factorial(i) * pow_int(2, i);
    acc += ratio(num, den) * zp;
    zp *= z;
  }
  return acc;
}

}  // namespace giftex
