#pragma once

#include <functional>

#include "zetafib/real.hpp"
#include "zetafib/sequences.hpp"

namespace zetafib {

/// Certified geometric tail majorant. For every k >= k0,
///   |term(k+1) / term(k)| <= ratio_bound(k) < 1,
/// and ratio_bound is non-increasing on k >= k0, so after summing through K
/// the omitted tail is at most |term(K+1)| / (1 - ratio_bound(K)).
struct TailRule {
    std::function<Real(long)> ratio_bound;
    long k0 = 1;
};

/// A summable family: term generator, start index, certified tail rule.
struct SeriesSpec {
    long start_k = 1;
    std::function<Real(long)> term;
    TailRule tail;
};

/// Value with a rigorous absolute error bound: the true sum lies within
/// [value - bound, value + bound] under the TailRule contract.
struct CertifiedValue {
    Real value;
    Real abs_error_bound;
    long terms_used = 0;
};

inline constexpr long kDefaultMaxTerms = 100000;

/// Envelope factor for the zeta tail rules: zeta(k) - 1 <= 3 * 2^{-k} for all
/// k >= 2. The naive 2^{1-k} envelope fails at k = 2 (zeta(2) - 1 = 0.6449 >
/// 1/2); factor 3 covers k = 2 directly and dominates the integral bound
/// zeta(k) - 1 <= 2^{-k} (1 + 2/(k-1)) for k >= 3.
inline constexpr int kZetaM1EnvelopeFactor = 3;

/// Sums spec.term from start_k, stopping at the first K >= tail.k0 with
/// |term(K+1)| / (1 - ratio_bound(K)) <= target_abs_err / 2. The returned
/// bound is that tail majorant plus an accumulated-rounding allowance of
/// terms_used * 2^{2-working_prec} * (running magnitude). Exceeding
/// max_terms raises NonConvergenceError, never a silent truncation.
CertifiedValue eval_series(const SeriesSpec& spec, const Real& target_abs_err,
                           long max_terms = kDefaultMaxTerms);

/// Rule for terms p(k) (zeta(k)-1) x^k and relatives, |x| < 2, built on the
/// envelope zeta(k)-1 <= 3 * 2^{-k} (k >= 2): ratio bound
/// ((k+1)/k)^poly_degree * |x|/2, valid from k0_min onward (entries pass a
/// later k0_min when their sequence-growth factor needs one).
TailRule tail_rule_zeta_family(long poly_degree, const Real& x, long k0_min = 1);

/// Rule for terms zeta(k)/(k base^k) and relatives with integer base >= 2:
/// |term(k)| <= zeta(2) base^{-k}, ratio bound 1/base.
TailRule tail_rule_reciprocal_family(const SeqValue& base);

// Closed forms of the generating functions behind the catalog; each matches
// its defining series on the stated domain (the containment suite checks
// them against direct summation).

/// sum_{k>=1} (zeta(2k)-1) z^{2k-1}  for 0 < |z| < 2, z != +-1.
Real gf_even_zeta(const Real& z);

/// sum_{k>=1} (2k-1)(zeta(2k)-1) z^{2k}  for 0 < |z| < 2, z != +-1.
Real gf_even_zeta_deriv(const Real& z);

/// sum_{k>=2} (zeta(k)-1) z^k / k  for |z| < 2.
Real gf_log_gamma(const Real& z);

/// sum_{k>=2} (k+1)(zeta(k)-1) z^k / k  for |z| < 2.
Real gf_log_gamma_deriv(const Real& z);

/// sum_{k>=1} (zeta(2k+1)-1) z^{2k}  for |z| < 2.
Real gf_odd_zeta(const Real& z);

/// sum_{k>=2} zeta(k,a) z^k / k  for |z| < a, a > 0.
Real gf_hurwitz_log(const Real& z, const Real& a);

/// sum_{k>=1} zeta(2k,a) z^{2k} / k  for |z| < a, a > 0.
Real gf_hurwitz_even(const Real& z, const Real& a);

/// sum_{k>=1} zeta(2k+1,a) z^{2k+1} / (2k+1)  for |z| < a, a > 0.
Real gf_hurwitz_odd(const Real& z, const Real& a);

} // namespace zetafib
