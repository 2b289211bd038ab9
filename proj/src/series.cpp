#include "zetafib/series.hpp"

#include "zetafib/errors.hpp"
#include "zetafib/specfun.hpp"

namespace zetafib {

namespace {
constexpr long kBoundPrec = 96; // plenty for conservative tail bookkeeping
}

CertifiedValue eval_series(const SeriesSpec& spec, const Real& target_abs_err,
                           long max_terms) {
    if (!(target_abs_err.sign() > 0))
        throw DomainError("eval_series: target_abs_err must be > 0");
    if (!spec.term)
        throw DomainError("eval_series: term generator missing");
    {
        const Real rho0 = spec.tail.ratio_bound(spec.tail.k0);
        if (!(rho0 < Real::of(1, rho0.precision())))
            throw DomainError("eval_series: ratio bound >= 1 at k0");
    }

    Real sum = spec.term(spec.start_k);
    const long wp = sum.precision();
    Real magnitude = abs(sum);
    const Real half_target = target_abs_err / 2;
    long k = spec.start_k;
    long used = 1;

    while (true) {
        if (k >= spec.tail.k0) {
            const Real next = spec.term(k + 1);
            const Real rho = spec.tail.ratio_bound(k);
            const Real tail_bound = abs(next) / (1 - rho);
            if (tail_bound <= half_target) {
                const Real rounding =
                    ldexp2(magnitude * (used + 1), -wp + 2);
                return {sum, tail_bound + rounding, used};
            }
            sum += next;
            magnitude = max(magnitude, max(abs(next), abs(sum)));
            ++k;
            ++used;
        } else {
            ++k;
            const Real t = spec.term(k);
            sum += t;
            magnitude = max(magnitude, max(abs(t), abs(sum)));
            ++used;
        }
        if (used > max_terms)
            throw NonConvergenceError("eval_series: max_terms reached");
    }
}

TailRule tail_rule_zeta_family(long poly_degree, const Real& x, long k0_min) {
    const Real half_x = abs(x).with_precision(kBoundPrec) / 2;
    if (!(half_x < Real::of(1, kBoundPrec)))
        throw DomainError("tail_rule_zeta_family: requires |x| < 2");
    if (poly_degree < 0)
        throw DomainError("tail_rule_zeta_family: poly_degree must be >= 0");
    if (k0_min < 1)
        k0_min = 1;

    auto ratio = [poly_degree, half_x](long k) {
        const Real kk = Real::of(k, kBoundPrec);
        return pow_si((kk + 1) / kk, poly_degree) * half_x;
    };
    long k0 = k0_min;
    while (!(ratio(k0) < Real::of(1, kBoundPrec)))
        ++k0; // terminates: the bound decreases to |x|/2 < 1
    return {ratio, k0};
}

TailRule tail_rule_reciprocal_family(const SeqValue& base) {
    if (base <= 1)
        throw DomainError("tail_rule_reciprocal_family: requires base >= 2");
    const Real rho = 1 / Real::from_mpz(base, kBoundPrec);
    return {[rho](long) { return rho; }, 1};
}

// ---------------------------------------------------------------------------
// Generating-function closed forms
// ---------------------------------------------------------------------------

namespace {

Precision local_prec(const Real& x) {
    return Precision(std::max(x.precision(), Precision::kMinBits), 0);
}

void require_even_gf_domain(const Real& z, const char* fn) {
    const Real az = abs(z);
    if (z.is_zero() || !(az < Real::of(2, z.precision())))
        throw DomainError(std::string(fn) + ": requires 0 < |z| < 2");
    if (cmp(az, 1) == 0)
        throw PoleError(std::string(fn) + ": pole at z = +-1");
}

void require_disk2(const Real& z, const char* fn) {
    if (!(abs(z) < Real::of(2, z.precision())))
        throw DomainError(std::string(fn) + ": requires |z| < 2");
}

void require_hurwitz_domain(const Real& z, const Real& a, const char* fn) {
    if (a.sign() <= 0)
        throw DomainError(std::string(fn) + ": requires a > 0");
    if (!(abs(z) < a))
        throw DomainError(std::string(fn) + ": requires |z| < a");
}

} // namespace

Real gf_even_zeta(const Real& z) {
    require_even_gf_domain(z, "gf_even_zeta");
    const Real pi = const_pi(local_prec(z));
    const Real z2 = z * z;
    return -(pi / 2) * trig_closed(TrigKind::cot, pi * z) +
           (3 * z2 - 1) / (2 * z * (z2 - 1));
}

Real gf_even_zeta_deriv(const Real& z) {
    require_even_gf_domain(z, "gf_even_zeta_deriv");
    const Real pi = const_pi(local_prec(z));
    const Real z2 = z * z;
    const Real z2m1 = z2 - 1;
    const Real csc2 = trig_closed(TrigKind::csc2, pi * z);
    return (pi * pi * z2 * csc2 - (3 * z2 * z2 + 1) / (z2m1 * z2m1)) / 2;
}

Real gf_log_gamma(const Real& z) {
    require_disk2(z, "gf_log_gamma");
    const Real g = euler_gamma(local_prec(z));
    return (1 - g) * z + ln_gamma(2 - z);
}

Real gf_log_gamma_deriv(const Real& z) {
    require_disk2(z, "gf_log_gamma_deriv");
    const Real g = euler_gamma(local_prec(z));
    const Real two_minus_z = 2 - z;
    return 2 * ((1 - g) * z) + ln_gamma(two_minus_z) - z * digamma(two_minus_z);
}

Real gf_odd_zeta(const Real& z) {
    require_disk2(z, "gf_odd_zeta");
    const Real g = euler_gamma(local_prec(z));
    return (1 - g) - (digamma(2 + z) + digamma(2 - z)) / 2;
}

Real gf_hurwitz_log(const Real& z, const Real& a) {
    require_hurwitz_domain(z, a, "gf_hurwitz_log");
    return ln_gamma(a - z) - ln_gamma(a) + z * digamma(a);
}

Real gf_hurwitz_even(const Real& z, const Real& a) {
    require_hurwitz_domain(z, a, "gf_hurwitz_even");
    return ln_gamma(a + z) + ln_gamma(a - z) - 2 * ln_gamma(a);
}

Real gf_hurwitz_odd(const Real& z, const Real& a) {
    require_hurwitz_domain(z, a, "gf_hurwitz_odd");
    return (ln_gamma(a - z) - ln_gamma(a + z)) / 2 + z * digamma(a);
}

} // namespace zetafib
