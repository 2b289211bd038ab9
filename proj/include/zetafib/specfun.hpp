#pragma once

#include "zetafib/real.hpp"

namespace zetafib {

/// Euler-Mascheroni constant, cached per working precision and cross-checked
/// against -digamma(1) by the property suite.
Real euler_gamma(Precision prec);

/// ln Gamma(x) for x > 0, by upward argument shift plus the Stirling
/// asymptotic series with the remainder bounded by the first omitted term.
Real ln_gamma(const Real& x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
Real digamma(const Real& x);

/// psi^(m)(x) for m >= 0, x > 0: recurrence shift to the asymptotic range,
/// then the Bernoulli asymptotic expansion. Independent of hurwitz_zeta,
/// so the polygamma/Hurwitz relation is a genuine two-route check.
Real polygamma(long m, const Real& x);

/// zeta(s) for real s > 0, s != 1 (Euler-Maclaurin reference path).
Real riemann_zeta(const Real& s, Precision prec);

/// zeta(s) - 1 for s > 1, computed directly so the tiny value keeps full
/// relative precision (never as a cancelling subtraction from zeta).
Real riemann_zeta_m1(const Real& s, Precision prec);

/// zeta(k) - 1 at integer k >= 2; cached per (k, working precision).
Real riemann_zeta_m1_int(long k, Precision prec);

/// Independent second path for zeta: the alternating (eta) series
/// continuation zeta(s) = (1 - 2^{1-s})^{-1} sum (-1)^{k+1} k^{-s},
/// accelerated with certified error control. Used for cross-checking only.
Real riemann_zeta_eta(const Real& s, Precision prec);

/// Hurwitz zeta(s, a) for s > 1, a > 0 via Euler-Maclaurin.
Real hurwitz_zeta(const Real& s, const Real& a, Precision prec);

/// omega(m, x) = x^m (psi(x+2) + x psi'(x+2) + psi(2-x) - x psi'(2-x)),
/// for x in (-2, 2).
Real omega(long m, const Real& x);

enum class TrigKind { cot, csc, sec, tan, csc2, sec2 };

/// Trig values for closed forms, with a pole guard: arguments within
/// 2^{-prec/2} of a pole of the requested function are rejected rather
/// than returning huge values.
Real trig_closed(TrigKind kind, const Real& arg);

} // namespace zetafib
