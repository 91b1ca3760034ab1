#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "giftex/core_tables.hpp"
#include "giftex/numeric.hpp"
#include "giftex/polynomial.hpp"

namespace giftex {

/// One term c(n) T(n - offset) of a sequence recurrence.
struct Term1D {
  unsigned offset;
  Polynomial coeff;
};

/// leading(n) T(n) = sum over terms of coeff(n) T(n - offset), for n >= n_min.
/// Terms are kept as written, so a repeated offset is allowed; evaluation sums
/// them.
struct Recurrence1D {
  std::string name;
  StealLimit sigma{0};
  Polynomial leading{1};
  std::vector<Term1D> terms;
  long n_min = 0;
  std::vector<Integer> seeds;  // T(0), ..., T(n_min - 1)

  unsigned depth() const;
  bool monic() const { return leading == Polynomial(1); }
  /// Coefficient of T(n - offset), duplicates summed.
  Polynomial coefficient(unsigned offset) const;
};

struct Shift {
  unsigned i, j;
  auto operator<=>(const Shift&) const = default;
};

struct Term2D {
  Shift shift;
  Polynomial coeff;
};

/// E(n,k) = sum over terms of coeff(n) E(n - i, k - j), for n >= n_min and
/// every k.
struct Recurrence2D {
  std::string name;
  StealLimit sigma{0};
  std::vector<Term2D> terms;
  long n_min = 0;

  /// Largest i or j among the shifts.
  unsigned depth() const;
  Polynomial coefficient(Shift s) const;
};

struct Registry {
  std::map<std::string, Recurrence1D> sequences;
  std::map<std::string, Recurrence2D> tables;

  std::vector<std::string> names() const;
  bool contains(const std::string& name) const;
};

/// G1d, E1d, E2d, G2d, G2e, G3e, G4e, G4e-corrected, E3app.
const Registry& registry();

/// Collapses an E-level recurrence to the sequence recurrence for its row
/// sums: c_i(n) = sum_j c_{i,j}(n).
Recurrence1D sum_over_k(const Recurrence2D& rec, std::string name);

/// Extends the seeds with the recurrence up to n_max. Throws domain_error if
/// the leading coefficient vanishes or a value comes out non-integral.
std::vector<Integer> generate(const Recurrence1D& rec, unsigned n_max);

struct VerificationReport {
  std::string name;
  long n_lo = 0, n_hi = 0;
  bool pass = true;
  std::vector<long> first_failure;  // {n} or {n, k}; empty on pass
  Rational residual{0};
  std::size_t checked = 0;

  std::string to_text() const;
  std::string to_json() const;
};

/// Exact residuals over n in [n_lo, n_hi]; T at negative indices is zero.
/// Throws invalid_argument when seq does not reach n_hi. With jobs > 1 the
/// range is split across threads; the reported failure is the smallest.
VerificationReport verify_1d(const Recurrence1D& rec, const GSequence& seq, long n_lo, long n_hi,
                             unsigned jobs = 1);

/// Exact residuals over n in [n_lo, n_hi] and every k up to (sigma+1)n plus
/// the largest column shift.
VerificationReport verify_2d(const Recurrence2D& rec, const ETable& table, long n_lo, long n_hi,
                             unsigned jobs = 1);

/// Verifies by name against freshly built tables over [n_min, n_max].
VerificationReport verify_named(const std::string& name, long n_max, unsigned jobs = 1);

/// k!/((2n-k+c)! (k-n-2c)! c! 2^{k-n-c} 3^c), zero if any factorial argument
/// is negative. Summed over c this gives E_2(n,k).
Rational d2_summand(long n, long k, long c);

struct CelineIndex {
  unsigned r, s, t;
  auto operator<=>(const CelineIndex&) const = default;
};

/// Coefficients C(r,s,t)(n) with (r,s,t) in [0,4]^3 of
///   sum C(r,s,t) d2_summand(n+r, k+s, c+t) = 0.
struct CelineCertificate {
  std::map<CelineIndex, Polynomial> entries;

  Polynomial at(unsigned r, unsigned s, unsigned t) const;
  std::size_t nonzero_count() const;
  std::vector<CelineIndex> support() const;
};

/// The 19 constants in the form in which they are usually quoted. They do not
/// annihilate the summand; see celine_certificate().
CelineCertificate celine_certificate_constants();

/// The certificate on the same 19-point support with coefficients polynomial
/// in n, normalized by C(4,4,1) = 1. It annihilates the summand wherever every
/// shifted factorial argument is nonnegative.
CelineCertificate celine_certificate();

/// Solves for a certificate on `support` with coefficient degree <= degree,
/// sampling interior points with n in [n_lo, n_hi]. Returns nullopt unless the
/// solution is unique up to scale; normalizes the last support entry to 1.
std::optional<CelineCertificate> solve_celine(const std::vector<CelineIndex>& support,
                                              unsigned degree, long n_lo, long n_hi);

struct CelinePoint {
  long n, k, c;
};

/// Points with n in [n_lo, n_hi], n+2 <= k <= 3n-2, c >= 0, such that every
/// shifted factorial argument over the support is nonnegative.
std::vector<CelinePoint> celine_interior_grid(const std::vector<CelineIndex>& support, long n_lo,
                                              long n_hi);

/// Annihilation at every grid point. Throws invalid_argument on an empty grid.
VerificationReport celine_annihilation_check(const CelineCertificate& cert,
                                             const std::vector<CelinePoint>& grid);

/// One term coeff(n) E(n + r, k + s) of a forward-shifted identity.
struct ForwardTerm {
  unsigned r, s;
  Polynomial coeff;
};

/// sum_t C(r,s,t)(n) for each (r,s).
std::vector<ForwardTerm> celine_collapse(const CelineCertificate& cert);

/// The E2d identity shifted by (4,4): E(n+4,k+4) - sum c_{ij}(n+4) E(n+4-i, k+4-j).
std::vector<ForwardTerm> e2d_shifted();

/// The shifted identity with the coefficient of E(n+2,k+1) as +6(n+3), as it
/// is commonly quoted.
std::vector<ForwardTerm> e2d_shifted_quoted();

/// sum coeff(n) E(n+r, k+s) = 0 for n in [n_lo, n_hi] and all k.
VerificationReport check_forward_identity(const std::string& name,
                                          const std::vector<ForwardTerm>& terms,
                                          const ETable& table, long n_lo, long n_hi);

/// True when both term lists describe the same polynomial identity.
bool same_identity(const std::vector<ForwardTerm>& a, const std::vector<ForwardTerm>& b);

struct CelineReport {
  VerificationReport annihilation;
  VerificationReport collapse;
  bool collapse_matches_e2d = false;
  bool pass() const { return annihilation.pass && collapse.pass && collapse_matches_e2d; }
};

/// Annihilation on the interior grid with n in [n_lo, n_hi] and the collapsed
/// identity on E_2 for n <= collapse_n_max.
CelineReport celine_check(const CelineCertificate& cert, long n_lo, long n_hi,
                          long collapse_n_max);

struct StructureReport {
  unsigned expected_depth = 0;  // C(sigma+1, 2) + 1
  unsigned depth = 0;
  bool depth_ok = false;
  bool zero_pattern_ok = false;
  bool degree_ok = false;
  std::vector<std::string> violations;
  // The depth and zero-pattern formulas are read with sigma where the
  // conjecture is sometimes written with n.
  std::string note;

  bool pass() const { return depth_ok && zero_pattern_ok && degree_ok; }
};

unsigned conjectured_depth(StealLimit sigma);

/// Whether shift (i,j) is allowed by the zero-pattern conjecture.
bool allowed_shift(StealLimit sigma, Shift s);

StructureReport structure_check(const Recurrence2D& rec, StealLimit sigma);

std::string to_json(const Recurrence1D& rec);
std::string to_json(const Recurrence2D& rec);

}  // namespace giftex
