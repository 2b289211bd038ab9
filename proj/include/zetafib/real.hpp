#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "zetafib/errors.hpp"

namespace zetafib {

/// Precision request: target significand bits plus extra working (guard) bits.
/// All internal arithmetic runs at working() bits; results are reported
/// against the target. The guard default absorbs cancellation in the
/// log-gamma / digamma difference combinations that appear in closed forms.
struct Precision {
    static constexpr long kDefaultGuardBits = 64;
    static constexpr long kMinBits = 64;

    long bits;
    long guard_bits;

    explicit Precision(long target_bits, long guard = kDefaultGuardBits)
        : bits(target_bits), guard_bits(guard) {
        if (bits < kMinBits)
            throw DomainError("Precision: target bits must be >= 64");
        if (guard_bits < 0)
            throw DomainError("Precision: guard bits must be >= 0");
    }

    long working() const { return bits + guard_bits; }
};

/// Immutable-after-construction arbitrary-precision binary float.
///
/// Thin RAII wrapper over an mpfr_t. Every operation rounds to nearest;
/// binary operations carry max(precision of operands). The transcendental
/// wrappers below inherit MPFR's correct rounding, which is stronger than
/// the 2-ulp faithfulness this library's error accounting assumes.
class Real {
  public:
    Real() { init(kMinPrec); }
    explicit Real(long prec_bits) { init(prec_bits); }

    Real(const Real& o) {
        init(o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        init(kMinPrec);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long i, long prec_bits) {
        Real r(prec_bits);
        mpfr_set_si(r.v_, i, MPFR_RNDN);
        return r;
    }
    static Real of_ratio(long num, long den, long prec_bits) {
        Real r = of(num, prec_bits);
        mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
        return r;
    }
    static Real from_mpz(const mpz_class& z, long prec_bits) {
        Real r(prec_bits);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    /// 2^e at the given precision (exact).
    static Real two_pow(long e, long prec_bits) {
        Real r(prec_bits);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    /// Parses a base-10 decimal (integer, fixed or scientific form).
    static Real parse(const std::string& dec, long prec_bits);

    long precision() const { return mpfr_get_prec(v_); }
    Real with_precision(long prec_bits) const {
        Real r(prec_bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Binary exponent e with 2^{e-1} <= |x| < 2^e; requires x != 0.
    long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    /// Decimal rendering with the given number of significant digits.
    std::string to_string(int sig_digits = 50) const;

    // -- arithmetic ---------------------------------------------------------

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }

    friend Real operator+(const Real& a, long b) { return bin_si(mpfr_add_si, a, b); }
    friend Real operator-(const Real& a, long b) { return bin_si(mpfr_sub_si, a, b); }
    friend Real operator*(const Real& a, long b) { return bin_si(mpfr_mul_si, a, b); }
    friend Real operator/(const Real& a, long b) { return bin_si(mpfr_div_si, a, b); }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.precision());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.precision());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    Real operator-() const {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }
    Real& operator+=(long o) { return *this = *this + o; }
    Real& operator-=(long o) { return *this = *this - o; }
    Real& operator*=(long o) { return *this = *this * o; }
    Real& operator/=(long o) { return *this = *this / o; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend int cmp(const Real& a, long b) { return mpfr_cmp_si(a.v_, b); }

    // -- elementary functions (correctly rounded via MPFR) -------------------

    friend Real abs(const Real& a) { return un(mpfr_abs, a); }
    friend Real sqrt(const Real& a) { return un(mpfr_sqrt, a); }
    friend Real ln(const Real& a) { return un(mpfr_log, a); }
    friend Real exp(const Real& a) { return un(mpfr_exp, a); }
    friend Real sin(const Real& a) { return un(mpfr_sin, a); }
    friend Real cos(const Real& a) { return un(mpfr_cos, a); }
    friend Real tan(const Real& a) { return un(mpfr_tan, a); }
    friend Real atan(const Real& a) { return un(mpfr_atan, a); }
    friend Real pow(const Real& a, const Real& b) { return bin(mpfr_pow, a, b); }
    friend Real pow_si(const Real& a, long e) {
        Real r(a.precision());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    /// a * 2^e (exact).
    friend Real ldexp2(const Real& a, long e) {
        Real r(a.precision());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend Real round_nearest(const Real& a) {
        Real r(a.precision());
        mpfr_round(r.v_, a.v_);
        return r;
    }
    friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
    friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    static constexpr long kMinPrec = 2; // MPFR's own floor; moved-from shells only

    void init(long prec_bits) {
        mpfr_init2(v_, std::max(prec_bits, kMinPrec));
        mpfr_set_zero(v_, 1);
    }

    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using BinSiFn = int (*)(mpfr_ptr, mpfr_srcptr, long, mpfr_rnd_t);
    using UnFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    static Real bin(BinFn f, const Real& a, const Real& b) {
        Real r(std::max(a.precision(), b.precision()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real bin_si(BinSiFn f, const Real& a, long b) {
        Real r(a.precision());
        f(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    static Real un(UnFn f, const Real& a) {
        Real r(a.precision());
        f(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

// Cached fundamental constants, computed once per working precision.
// Safe under concurrent first use; callers receive independent copies.
Real const_pi(Precision prec);
Real const_sqrt5(Precision prec);
Real golden_alpha(Precision prec);
Real golden_beta(Precision prec);
Real const_ln2(Precision prec);

} // namespace zetafib
