#include <doctest.h>

#include "giftex/core_tables.hpp"

using namespace giftex;

TEST_CASE("build_e_table: printed values") {
  CHECK(build_e_table(StealLimit(1), 3)(3, 4) == 6);
  CHECK(build_e_table(StealLimit(2), 2)(2, 4) == 7);
  CHECK(build_e_table(StealLimit(3), 3)(3, 9) == 1855);
  CHECK(build_e_table(StealLimit(3), 4)(4, 13) == 725725);
}

TEST_CASE("ETable: out-of-range reads are zero") {
  auto t = build_e_table(StealLimit(2), 5);
  CHECK(t(0, 0) == 1);
  CHECK(t(-1, 0) == 0);
  CHECK(t(2, -1) == 0);
  CHECK(t(3, 2) == 0);
  CHECK(t(3, 10) == 0);
  CHECK(t(6, 6) == 0);
  CHECK(t(100, 100) == 0);
  CHECK_FALSE(t.in_support(3, 2));
  CHECK(t.in_support(3, 9));
  CHECK(t.k_max() == 15);
  CHECK_THROWS_AS(t.row_sum(6), std::out_of_range);
}

TEST_CASE("ETable: diagonal, top corner and row sums") {
  for (unsigned s = 0; s <= 3; ++s) {
    const StealLimit sigma(s);
    const unsigned b = s + 1;
    auto t = build_e_table(sigma, 8);
    auto gs = g_sequence(sigma, 8);
    for (unsigned n = 0; n <= 8; ++n) {
      CHECK(t(n, n) == 1);
      // All blocks of maximal size: (bn)! / (n! (b!)^n).
      Integer top = factorial(b * n) / (factorial(n) * pow_int(factorial(b).get_ui(), n));
      CHECK(t(n, b * n) == top);
      Integer sum(0);
      for (unsigned k = 0; k <= b * n; ++k) sum += t(n, k);
      CHECK(sum == gs[n]);
      CHECK(t.row_sum(n) == gs[n]);
    }
  }
}

TEST_CASE("e_multinomial") {
  CHECK(e_multinomial(StealLimit(1), 2, 3) == 3);
  CHECK(e_multinomial(StealLimit(2), 3, 5) == 25);
  for (unsigned s = 0; s <= 4; ++s)
    for (unsigned n = 1; n <= 6; ++n) CHECK(e_multinomial(StealLimit(s), n, n - 1) == 0);
}

TEST_CASE("e_multinomial equals the recurrence table") {
  for (unsigned s = 0; s <= 3; ++s) {
    auto t = build_e_table(StealLimit(s), 10);
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= (s + 1) * n + 1; ++k) CHECK(e_multinomial(StealLimit(s), n, k) == t(n, k));
  }
}

TEST_CASE("compositions satisfy both constraints") {
  for (unsigned s = 0; s <= 3; ++s)
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned k = n; k <= (s + 1) * n; ++k) {
        std::size_t count = 0;
        std::vector<unsigned> prev;
        for_each_composition(StealLimit(s), n, k, [&](const Composition& c) {
          REQUIRE(c.parts.size() == s + 1);
          unsigned total = 0, weight = 0;
          for (unsigned i = 0; i <= s; ++i) {
            total += c.parts[i];
            weight += (i + 1) * c.parts[i];
          }
          CHECK(total == n);
          CHECK(weight == k);
          std::vector<unsigned> tail(c.parts.begin() + 1, c.parts.end());
          if (count > 0) CHECK(prev < tail);
          prev = tail;
          ++count;
        });
        CHECK(count > 0);
      }
}

TEST_CASE("e1_closed") {
  CHECK(e1_closed(3, 5) == 15);
  CHECK(e1_closed(4, 8) == 105);
  for (unsigned n = 0; n <= 12; ++n) CHECK(e1_closed(n, n) == 1);
  CHECK(e1_closed(3, 2) == 0);
  CHECK(e1_closed(3, 7) == 0);
  auto t = build_e_table(StealLimit(1), 12);
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= 2 * n + 2; ++k) CHECK(e1_closed(n, k) == t(n, k));
}

TEST_CASE("g and h") {
  CHECK(g(StealLimit(2), 3) == 842);
  CHECK(g(StealLimit(3), 3) == 18252);
  for (unsigned n = 0; n <= 20; ++n) CHECK(g(StealLimit(0), n) == 1);
  CHECK(h(StealLimit(1), 3) == 42);
  CHECK(h(StealLimit(0), 4) == 24);
  CHECK(h(StealLimit(2), 2) == 6);
  CHECK_THROWS_AS(h(StealLimit(1), 0), std::invalid_argument);
  CHECK(g(StealLimit(8), 5) == Integer("476872353039366288373555323"));
}

TEST_CASE("G is strictly increasing for sigma >= 1") {
  for (unsigned s = 1; s <= 5; ++s) {
    auto gs = g_sequence(StealLimit(s), 15);
    CHECK(gs[0] == 1);
    for (unsigned n = 1; n < 15; ++n) CHECK(gs[n] < gs[n + 1]);
  }
}

TEST_CASE("g_ordered_multinomial") {
  CHECK(g_ordered_multinomial(StealLimit(1), 2) == 7);
  CHECK(g_ordered_multinomial(StealLimit(2), 2) == 31);
  for (unsigned s = 0; s <= 6; ++s) CHECK(g_ordered_multinomial(StealLimit(s), 0) == 1);
  for (unsigned s = 0; s <= 3; ++s)
    for (unsigned n = 0; n <= 6; ++n) CHECK(g_ordered_multinomial(StealLimit(s), n) == g(StealLimit(s), n));
  CHECK_THROWS_AS(g_ordered_multinomial(StealLimit(3), 8, 1000), BudgetExceeded);
}

TEST_CASE("bessel_y") {
  CHECK(bessel_y(2, 1) == 7);
  CHECK(bessel_y(4, 1) == 266);
  CHECK(bessel_y(0, Rational(5, 7)) == 1);
  CHECK(bessel_y(1, Rational(2)) == 3);
  auto gs = g_sequence(StealLimit(1), 50);
  for (unsigned n = 0; n <= 50; ++n) CHECK(bessel_y(n, 1) == gs[n]);
}

TEST_CASE("monotone in sigma") {
  for (unsigned s = 0; s < 4; ++s) {
    auto a = build_e_table(StealLimit(s), 8);
    auto b = build_e_table(StealLimit(s + 1), 8);
    for (long n = 0; n <= 8; ++n)
      for (long k = 0; k <= static_cast<long>(s + 2) * n; ++k) CHECK(a(n, k) <= b(n, k));
  }
}

TEST_CASE("columns stabilize once the block bound is inactive") {
  std::vector<ETable> tables;
  for (unsigned s = 0; s <= 5; ++s) tables.push_back(build_e_table(StealLimit(s), 8));
  for (unsigned s = 0; s <= 5; ++s)
    for (unsigned other = s; other <= 5; ++other)
      for (long n = 0; n <= 8; ++n)
        for (long k = n; k <= 13 && k - n <= static_cast<long>(s); ++k)
          CHECK(tables[s](n, k) == tables[other](n, k));
}
