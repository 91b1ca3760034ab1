#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "giftex/numeric.hpp"

namespace giftex {

/// E_sigma(n,k): the number of partitions of {1..k} into exactly n blocks,
/// each of size at most sigma+1 (a restricted Stirling number of the second
/// kind). Stored densely over the trapezoid n <= k <= (sigma+1)n; every other
/// (n,k), including negative arguments, reads as zero.
class ETable {
 public:
  ETable(StealLimit sigma, unsigned n_max);

  StealLimit sigma() const { return sigma_; }
  unsigned n_max() const { return n_max_; }
  /// Largest k with a possibly nonzero entry, (sigma+1)*n_max.
  unsigned k_max() const { return sigma_.max_block() * n_max_; }

  const Integer& operator()(long n, long k) const;
  bool in_support(long n, long k) const;

  /// Sum over k of row n, i.e. G_sigma(n).
  Integer row_sum(unsigned n) const;

 private:
  friend ETable build_e_table(StealLimit, unsigned);
  Integer& slot(unsigned n, unsigned k) { return rows_[n][k - n]; }

  StealLimit sigma_;
  unsigned n_max_;
  std::vector<std::vector<Integer>> rows_;  // rows_[n][k - n]
};

/// Fills E_sigma row by row with
///   E(n,k) = sum_{i=0}^{sigma} C(k-1, i) E(n-1, k-1-i),  E(0,0) = 1.
ETable build_e_table(StealLimit sigma, unsigned n_max);

/// G_sigma(0), G_sigma(1), ...
struct GSequence {
  StealLimit sigma;
  std::vector<Integer> values;

  const Integer& operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.size(); }
};

/// G_sigma(n) for n <= n_max as row sums of the E table.
GSequence g_sequence(StealLimit sigma, unsigned n_max);

/// Block-size multiplicities (a_1, ..., a_{sigma+1}) of a partition.
struct Composition {
  std::vector<unsigned> parts;
};

/// Calls visit for every composition with sum a_i = n and sum i*a_i = k, in
/// lexicographic order of (a_2, ..., a_{sigma+1}).
void for_each_composition(StealLimit sigma, unsigned n, unsigned k,
                          const std::function<void(const Composition&)>& visit);

/// E_sigma(n,k) as a sum of k!/(prod a_i! prod (i!)^{a_i}) over compositions.
Integer e_multinomial(StealLimit sigma, unsigned n, unsigned k);

/// k!/((2n-k)! (k-n)! 2^{k-n}) for n <= k <= 2n, zero otherwise.
Integer e1_closed(unsigned n, unsigned k);

Integer g(StealLimit sigma, unsigned n);

/// Number of scenarios with n gifts, n! G_sigma(n-1). Throws for n = 0.
Integer h(StealLimit sigma, unsigned n);

/// G_sigma(n) from the sum of multinomial coefficients over all ordered
/// part-size tuples in {1..sigma+1}^n, divided by n!. Throws BudgetExceeded
/// when (sigma+1)^n exceeds budget.
Integer g_ordered_multinomial(StealLimit sigma, unsigned n, std::uint64_t budget = 10'000'000);

/// Bessel polynomial y_n(z) = sum_{i=0}^{n} (n+i)! z^i / ((n-i)! i! 2^i).
Rational bessel_y(unsigned n, const Rational& z);

}  // namespace giftex
