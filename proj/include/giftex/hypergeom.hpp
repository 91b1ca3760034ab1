#pragma once

#include <map>
#include <string>
#include <vector>

#include "giftex/numeric.hpp"
#include "giftex/polynomial.hpp"

namespace giftex {

/// Parameters of pFq[upper; lower; z].
struct HypParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational z;
};

/// Index of the last possibly nonzero term: the smallest |a| over upper
/// parameters a that are nonpositive integers. Throws std::domain_error when
/// no upper parameter terminates the series.
unsigned termination_index(const HypParams& p);

/// Exact finite sum sum_{i=0}^{T} prod (a)_i / prod (b)_i z^i / i!. Throws
/// std::domain_error for non-terminating parameters or when a lower parameter
/// is a nonpositive integer whose Pochhammer symbol vanishes before T.
Rational hyp_terminating(const HypParams& p);

/// G_1(n) = 2F0[n+1, -n; ; -1/2].
Integer g1_via_2f0(unsigned n);

enum class E2Branch { SmallExcess, LargeExcess };

/// E_2(n,k) from the terminating 2F1 representation at z = 8/3, choosing
/// the small-excess form when k-n <= n. Throws std::out_of_range unless
/// n <= k <= 3n.
Integer e2_via_2f1(unsigned n, unsigned k);
/// Same, forcing one branch (either is valid at k-n = n).
Integer e2_via_2f1(unsigned n, unsigned k, E2Branch branch);

/// G_2(n) as the sum over excess 0..n-1 (small-excess form) and n..2n
/// (large-excess form).
Integer g2_via_2f1(unsigned n);

/// One monomial coeff * n^n_exp * eta^eta_exp.
struct PhiTerm {
  long coeff;
  unsigned n_exp;
  unsigned eta_exp;
};

/// Polynomial in z whose coefficients are polynomials in (n, eta), keyed by
/// the power of z.
struct PhiPolynomial {
  std::map<unsigned, std::vector<PhiTerm>> by_z_power;

  unsigned z_degree() const { return by_z_power.empty() ? 0 : by_z_power.rbegin()->first; }
  Rational operator()(const Rational& n, const Rational& eta, const Rational& z) const;
};

struct PhiPolynomials {
  PhiPolynomial phi1;  // degree 6 in z
  PhiPolynomial phi2;  // degree 5 in z
};

/// The two multiplier polynomials of the contiguity reduction for the E_2
/// recurrence, as tabulated (verbatim).
const PhiPolynomials& appendix_phi();

/// How the phi_2 term of the factored form is scaled. The tabulated phi_2 is
/// missing a factor 4(eta-n+1) relative to phi_1; AsPrinted omits it.
enum class Phi2Scaling { Corrected, AsPrinted };

struct PhiIdentitySides {
  Rational nine_term;  ///< the alternating nine-term 2F1 combination
  Rational factored;   ///< the (3z-8)-factored form built from phi_1, phi_2
};

/// Evaluates both sides for k = n + eta >= 2n+1 (eta in [n+1, 2n]) at z.
/// A term whose factorial prefactor has a negative argument in the
/// denominator is zero. Throws std::domain_error for z in {0, 1}, eta
/// outside [n+1, 2n], or a non-terminating 2F1 with a nonzero prefactor.
PhiIdentitySides phi_identity_sides(unsigned n, unsigned eta, const Rational& z,
                                    const PhiPolynomials& phi = appendix_phi(),
                                    Phi2Scaling scaling = Phi2Scaling::Corrected);

bool phi_identity_check(unsigned n, unsigned eta, const Rational& z,
                        const PhiPolynomials& phi = appendix_phi(),
                        Phi2Scaling scaling = Phi2Scaling::Corrected);

/// The large-excess closed form of E_2 with the 2F1 argument replaced by z:
/// (eta+n)! / ((2n-eta)! (eta-n)! 2^n 3^(eta-n)) 2F1[eta/2-n, eta/2-n+1/2; eta-n+1; z].
/// Zero when a denominator factorial argument is negative.
Rational e2_large_excess_form(long n, long eta, const Rational& z);

/// G_sigma(n) n! ((sigma+1)!)^n / ((sigma+1)n)!, exactly.
Rational asym_ratio_exact(unsigned sigma, unsigned n);

/// asym_ratio_exact rendered with `digits` decimals (truncated).
std::string asym_ratio(unsigned sigma, unsigned n, unsigned digits);

/// Partial sum of 1/i! with truncation error below 10^-(digits+5).
Rational euler_e(unsigned digits);

}  // namespace giftex
