#include "zetafib/specfun.hpp"

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "zetafib/errors.hpp"

namespace zetafib {

namespace {

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

// B_{2j} as exact rationals via tangent numbers (integer triangle recurrence):
//   T_1 = 1, T_k = (k-1) T_{k-1}, then the in-place pass turns the row into
//   tangent numbers; B_{2n} = (-1)^{n-1} * 2n * T_n / (4^n (4^n - 1)).
std::vector<mpq_class> compute_bernoulli(std::size_t jmax) {
    std::vector<mpz_class> t(jmax + 1);
    t[1] = 1;
    for (std::size_t k = 2; k <= jmax; ++k)
        t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
    for (std::size_t k = 2; k <= jmax; ++k)
        for (std::size_t j = k; j <= jmax; ++j)
            t[j] = t[j - 1] * static_cast<unsigned long>(j - k) +
                   t[j] * static_cast<unsigned long>(j - k + 2);
    std::vector<mpq_class> b(jmax + 1);
    b[0] = 1;
    mpz_class four_n = 1;
    for (std::size_t n = 1; n <= jmax; ++n) {
        four_n *= 4;
        mpz_class num = t[n] * static_cast<unsigned long>(2 * n);
        if (n % 2 == 0)
            num = -num;
        b[n] = mpq_class(num, four_n * (four_n - 1));
        b[n].canonicalize();
    }
    return b;
}

// B_{2j}, growable shared table.
mpq_class bernoulli_2j(std::size_t j) {
    static std::mutex mu;
    static std::vector<mpq_class> table;
    std::lock_guard<std::mutex> lock(mu);
    if (j >= table.size()) {
        std::size_t need = std::max<std::size_t>(j + 1, 64);
        std::size_t grown = std::max(need, table.size() * 2);
        table = compute_bernoulli(grown - 1);
    }
    return table[j];
}

// Per-precision coefficient tables derived from B_{2j}; one rounding each.
enum class CoefKind {
    b_over_fact, // B_{2j} / (2j)!          (Euler-Maclaurin correction)
    b_over_2j,   // B_{2j} / (2j)           (digamma asymptotic)
    b_over_poch  // B_{2j} / ((2j)(2j-1))   (Stirling series)
};

Real bern_coef(CoefKind kind, std::size_t j, long prec) {
    static std::mutex mu;
    static std::map<std::pair<int, long>, std::vector<Real>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto& tab = tables[{static_cast<int>(kind), prec}];
    while (tab.size() <= j) {
        std::size_t i = tab.size();
        if (i == 0) {
            tab.emplace_back(Real::of(1, prec));
            continue;
        }
        mpq_class q = bernoulli_2j(i);
        switch (kind) {
        case CoefKind::b_over_fact: {
            mpz_class f = 1;
            for (unsigned long v = 2; v <= 2 * i; ++v)
                f *= v;
            q /= f;
            break;
        }
        case CoefKind::b_over_2j:
            q /= mpq_class(static_cast<unsigned long>(2 * i));
            break;
        case CoefKind::b_over_poch:
            q /= mpq_class(static_cast<unsigned long>(2 * i) *
                           static_cast<unsigned long>(2 * i - 1));
            break;
        }
        q.canonicalize();
        Real r(prec);
        mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
        tab.push_back(std::move(r));
    }
    return tab[j];
}

Real factorial_real(long m, long prec) {
    mpz_class f = 1;
    for (long v = 2; v <= m; ++v)
        f *= v;
    return Real::from_mpz(f, prec);
}

constexpr long kInternalSlack = 32;

bool is_integer(const Real& x) { return mpfr_integer_p(x.raw()) != 0; }

// ---------------------------------------------------------------------------
// Euler-Maclaurin Hurwitz zeta
// ---------------------------------------------------------------------------

// zeta(s, a) for real s > 0, s != 1, a > 0.
//
// Partial sum over n < N, then integral + half-term + Bernoulli corrections.
// The summand x -> (x+a)^{-s} is completely monotone for real s > 0, so the
// remainder after truncating the correction series is bounded in magnitude
// by the first omitted correction; we stop once that drops below one ulp of
// the accumulated value. If corrections start growing before that, N was too
// small and is doubled.
Real em_hurwitz(const Real& s, const Real& a, long out_prec) {
    const long pi_bits = out_prec + kInternalSlack;
    const Real sw = s.with_precision(pi_bits);
    const Real aw = a.with_precision(pi_bits);
    const Real neg_s = -sw;
    const double sd = sw.to_double();
    const double ad = aw.to_double();
    const bool int_args = is_integer(sw) && is_integer(aw) && sd > 1 && ad >= 1;

    long n_terms = std::max<long>(
        {static_cast<long>(std::ceil(0.30 * static_cast<double>(pi_bits))),
         static_cast<long>(std::ceil(ad)) + 2,
         static_cast<long>(std::ceil(0.35 * sd)), 8});

    for (int attempt = 0; attempt < 8; ++attempt, n_terms *= 2) {
        Real sum(pi_bits);
        if (int_args) {
            // (n+a)^{-s} by exact integer power then one rounded inversion.
            const unsigned long su = static_cast<unsigned long>(sd);
            const unsigned long a0 = static_cast<unsigned long>(ad);
            mpz_class p;
            Real t(pi_bits);
            for (long n = 0; n < n_terms; ++n) {
                mpz_ui_pow_ui(p.get_mpz_t(), a0 + static_cast<unsigned long>(n), su);
                mpfr_set_z(t.raw(), p.get_mpz_t(), MPFR_RNDN);
                mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
                sum += t;
            }
        } else {
            for (long n = 0; n < n_terms; ++n)
                sum += pow(aw + n, neg_s);
        }

        const Real eps = ldexp2(max(abs(sum), Real::two_pow(-pi_bits, pi_bits)),
                                -pi_bits + 6);
        const Real y = aw + n_terms;
        const Real inv_y2 = 1 / (y * y);
        Real total = sum + pow(y, 1 - sw) / (sw - 1) + pow(y, neg_s) / 2;

        Real runner = sw * pow(y, neg_s - 1); // (s)_{2j-1} * y^{-s-2j+1}
        Real prev_mag(pi_bits);
        bool have_prev = false;
        bool converged = false;
        for (long j = 1; j <= 4 * pi_bits; ++j) {
            const Real t = bern_coef(CoefKind::b_over_fact, static_cast<std::size_t>(j),
                                     pi_bits) *
                           runner;
            const Real mag = abs(t);
            if (mag <= eps) {
                converged = true;
                break;
            }
            if (have_prev && mag >= prev_mag)
                break; // corrections no longer shrink: restart with larger N
            total += t;
            prev_mag = mag;
            have_prev = true;
            runner = runner * (sw + (2 * j - 1)) * (sw + 2 * j) * inv_y2;
        }
        if (converged)
            return total.with_precision(out_prec);
    }
    throw NonConvergenceError("hurwitz zeta: Euler-Maclaurin did not converge");
}

// zeta(s) - 1 for large s by direct summation from n = 2 with the integral
// tail bound; only a handful of terms are needed once s exceeds ~prec/5.
Real zetam1_direct(const Real& s, long out_prec) {
    const long pi_bits = out_prec + 16;
    const Real sw = s.with_precision(pi_bits);
    const Real neg_s = -sw;
    Real sum = pow(Real::of(2, pi_bits), neg_s);
    for (long n = 3; n < 4096; ++n) {
        const Real t = pow(Real::of(n, pi_bits), neg_s);
        sum += t;
        // remaining tail <= integral_n^inf x^{-s} dx = t * n / (s-1)
        if (t * n / (sw - 1) <= ldexp2(sum, -pi_bits + 2))
            return sum.with_precision(out_prec);
    }
    throw NonConvergenceError("zeta - 1: direct summation did not converge");
}

bool use_direct_zetam1(double sd, long wp) {
    return sd >= static_cast<double>(wp) / 5.0 + 2.0;
}

// ---------------------------------------------------------------------------
// Polygamma / log-gamma asymptotics
// ---------------------------------------------------------------------------

long asymptotic_threshold(long pi_bits, long m) {
    // The Bernoulli tail of the psi/lnGamma asymptotic bottoms out near
    // e^{-2 pi y}; y >= ~0.135 * bits leaves margin to reach one ulp.
    return static_cast<long>(std::ceil(0.135 * static_cast<double>(pi_bits))) + m + 8;
}

// psi^(m)(y) for y at/above the asymptotic threshold.
Real polygamma_asymptotic(long m, const Real& y, long pi_bits) {
    const Real inv_y2 = 1 / (y * y);
    if (m == 0) {
        Real total = ln(y) - 1 / (y * 2);
        const Real eps = ldexp2(max(abs(total), Real::of(1, pi_bits)), -pi_bits + 4);
        Real u = inv_y2; // y^{-2j}
        Real prev_mag(pi_bits);
        bool have_prev = false;
        for (long j = 1; j <= 4 * pi_bits; ++j) {
            const Real t = bern_coef(CoefKind::b_over_2j, static_cast<std::size_t>(j),
                                     pi_bits) *
                           u;
            const Real mag = abs(t);
            if (mag <= eps)
                return total;
            if (have_prev && mag >= prev_mag)
                throw NonConvergenceError("digamma: asymptotic series stalled");
            total -= t;
            prev_mag = mag;
            have_prev = true;
            u *= inv_y2;
        }
        throw NonConvergenceError("digamma: asymptotic series too long");
    }

    // psi^(m)(y) = (-1)^{m-1} [ (m-1)!/y^m + m!/(2 y^{m+1})
    //                           + sum_j B_{2j} (2j+m-1)! / ((2j)! y^{2j+m}) ]
    const Real fact_m1 = factorial_real(m - 1, pi_bits);
    const Real inv_ym = pow_si(y, -m);
    Real total = fact_m1 * inv_ym + fact_m1 * m * inv_ym / (y * 2);
    const Real eps = ldexp2(abs(total), -pi_bits + 4);
    // g_j = (2j+m-1)! * y^{-2j-m}, advanced by (2j+m)(2j+m+1)/y^2.
    Real g = factorial_real(m + 1, pi_bits) * inv_ym * inv_y2;
    Real prev_mag(pi_bits);
    bool have_prev = false;
    for (long j = 1; j <= 4 * pi_bits; ++j) {
        const Real t =
            bern_coef(CoefKind::b_over_fact, static_cast<std::size_t>(j), pi_bits) * g;
        const Real mag = abs(t);
        if (mag <= eps)
            break;
        if (have_prev && mag >= prev_mag)
            throw NonConvergenceError("polygamma: asymptotic series stalled");
        total += t;
        prev_mag = mag;
        have_prev = true;
        g = g * (2 * j + m) * (2 * j + m + 1) * inv_y2;
    }
    return (m % 2 == 0) ? -total : total;
}

void check_positive_argument(const Real& x, const char* fn) {
    if (x.sign() > 0)
        return;
    if (is_integer(x))
        throw PoleError(std::string(fn) + ": pole at non-positive integer argument");
    throw DomainError(std::string(fn) + ": requires x > 0");
}

Real polygamma_core(long m, const Real& x, long out_prec) {
    const long pi_bits = out_prec + kInternalSlack;
    const Real xw = x.with_precision(pi_bits);
    const long x0 = asymptotic_threshold(pi_bits, m);
    const double xd = xw.to_double();
    const long shift =
        xd >= static_cast<double>(x0) ? 0 : static_cast<long>(std::ceil(x0 - xd));

    Real result = polygamma_asymptotic(m, xw + shift, pi_bits);
    if (shift > 0) {
        Real d(pi_bits);
        for (long i = 0; i < shift; ++i)
            d += pow_si(xw + i, -(m + 1));
        d *= factorial_real(m, pi_bits);
        // psi^(m)(x) = psi^(m)(x + K) - (-1)^m m! sum 1/(x+i)^{m+1}
        result = (m % 2 == 0) ? result - d : result + d;
    }
    return result.with_precision(out_prec);
}

} // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

Real euler_gamma(Precision prec) {
    static std::mutex mu;
    static std::map<long, Real> cache;
    const long wp = prec.working();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(wp);
    if (it == cache.end()) {
        Real v(wp);
        mpfr_const_euler(v.raw(), MPFR_RNDN);
        it = cache.emplace(wp, std::move(v)).first;
    }
    return it->second;
}

Real ln_gamma(const Real& x) {
    check_positive_argument(x, "ln_gamma");
    const long out_prec = x.precision();
    const long pi_bits = out_prec + kInternalSlack;
    const Real xw = x.with_precision(pi_bits);
    const long x0 = asymptotic_threshold(pi_bits, 0);
    const double xd = xw.to_double();
    const long shift =
        xd >= static_cast<double>(x0) ? 0 : static_cast<long>(std::ceil(x0 - xd));

    const Real y = xw + shift;
    const Real two_pi = ldexp2(const_pi(Precision(pi_bits, 0)), 1);
    Real total = (y - Real::of_ratio(1, 2, pi_bits)) * ln(y) - y + ln(two_pi) / 2;
    const Real eps = ldexp2(max(abs(total), Real::of(1, pi_bits)), -pi_bits + 4);
    const Real inv_y2 = 1 / (y * y);
    Real u = 1 / y; // y^{1-2j}
    Real prev_mag(pi_bits);
    bool have_prev = false;
    for (long j = 1; j <= 4 * pi_bits; ++j) {
        const Real t =
            bern_coef(CoefKind::b_over_poch, static_cast<std::size_t>(j), pi_bits) * u;
        const Real mag = abs(t);
        if (mag <= eps)
            break;
        if (have_prev && mag >= prev_mag)
            throw NonConvergenceError("ln_gamma: Stirling series stalled");
        total += t;
        prev_mag = mag;
        have_prev = true;
        u *= inv_y2;
    }
    for (long i = 0; i < shift; ++i)
        total -= ln(xw + i);
    return total.with_precision(out_prec);
}

Real digamma(const Real& x) {
    check_positive_argument(x, "digamma");
    return polygamma_core(0, x, x.precision());
}

Real polygamma(long m, const Real& x) {
    if (m < 0)
        throw DomainError("polygamma: order must be >= 0");
    check_positive_argument(x, "polygamma");
    return polygamma_core(m, x, x.precision());
}

Real riemann_zeta(const Real& s, Precision prec) {
    const long wp = prec.working();
    if (s.sign() <= 0)
        throw DomainError("riemann_zeta: requires s > 0");
    if (cmp(s, 1) == 0)
        throw PoleError("riemann_zeta: pole at s = 1");
    if (cmp(s, 1) > 0)
        return riemann_zeta_m1(s, prec) + 1;
    return em_hurwitz(s, Real::of(1, wp), wp);
}

Real riemann_zeta_m1(const Real& s, Precision prec) {
    if (cmp(s, 1) <= 0)
        throw DomainError("riemann_zeta_m1: requires s > 1");
    const long wp = prec.working();
    if (use_direct_zetam1(s.to_double(), wp))
        return zetam1_direct(s, wp);
    return em_hurwitz(s, Real::of(2, wp), wp); // zeta(s) - 1 == zeta(s, 2)
}

Real riemann_zeta_m1_int(long k, Precision prec) {
    if (k < 2)
        throw DomainError("riemann_zeta_m1_int: requires k >= 2");
    static std::mutex mu;
    static std::map<std::pair<long, long>, Real> cache;
    const long wp = prec.working();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({k, wp});
        if (it != cache.end())
            return it->second;
    }
    Real v = riemann_zeta_m1(Real::of(k, wp), prec);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(k, wp), std::move(v)).first->second;
}

Real riemann_zeta_eta(const Real& s, Precision prec) {
    if (s.sign() <= 0)
        throw DomainError("riemann_zeta_eta: requires s > 0");
    if (cmp(s, 1) == 0)
        throw PoleError("riemann_zeta_eta: pole at s = 1");
    const long wp = prec.working();
    const long pi_bits = wp + kInternalSlack;
    // Chebyshev-accelerated alternating sum; truncation error is below
    // 3 / (3+sqrt8)^n, i.e. ~2.54 bits per term.
    const long n = static_cast<long>(std::ceil(static_cast<double>(pi_bits + 6) *
                                               0.6931471805599453 / 2.5431066)) +
                   4;
    std::vector<mpz_class> d(static_cast<std::size_t>(n) + 1);
    mpz_class t = 1;
    d[0] = 1;
    for (long k = 1; k <= n; ++k) {
        t *= 4 * (n + k - 1);
        t *= (n - k + 1);
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(2 * k));
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                        static_cast<unsigned long>(2 * k - 1));
        d[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k) - 1] + t;
    }
    const Real sw = s.with_precision(pi_bits);
    const Real neg_s = -sw;
    Real sum(pi_bits);
    for (long k = 0; k < n; ++k) {
        const Real coef =
            Real::from_mpz(d[static_cast<std::size_t>(n)] - d[static_cast<std::size_t>(k)],
                           pi_bits);
        const Real term = coef * pow(Real::of(k + 1, pi_bits), neg_s);
        sum = (k % 2 == 0) ? sum + term : sum - term;
    }
    sum /= Real::from_mpz(d[static_cast<std::size_t>(n)], pi_bits);
    const Real denom = 1 - pow(Real::of(2, pi_bits), 1 - sw);
    return (sum / denom).with_precision(wp);
}

Real hurwitz_zeta(const Real& s, const Real& a, Precision prec) {
    if (cmp(s, 1) <= 0)
        throw DomainError("hurwitz_zeta: requires s > 1");
    if (a.sign() <= 0)
        throw DomainError("hurwitz_zeta: requires a > 0");
    return em_hurwitz(s, a, prec.working());
}

Real omega(long m, const Real& x) {
    if (m < 0)
        throw DomainError("omega: requires m >= 0");
    const long wp = x.precision();
    const Real two = Real::of(2, wp);
    if (!(abs(x) < two))
        throw DomainError("omega: requires |x| < 2");
    const Real xp2 = x + 2;
    const Real twomx = two - x;
    const Real bracket = digamma(xp2) + x * polygamma(1, xp2) + digamma(twomx) -
                         x * polygamma(1, twomx);
    return pow_si(x, m) * bracket;
}

Real trig_closed(TrigKind kind, const Real& arg) {
    const long wp = arg.precision();
    const Real pi = const_pi(Precision(std::max<long>(wp, Precision::kMinBits), 0))
                        .with_precision(wp);
    const bool sin_pole = (kind == TrigKind::cot || kind == TrigKind::csc ||
                           kind == TrigKind::csc2);
    // Poles at k*pi for the sin family, pi/2 + k*pi for the cos family.
    const Real offset = sin_pole ? Real(wp) : pi / 2;
    const Real q = (arg - offset) / pi;
    const Real dist = abs(q - round_nearest(q)) * pi;
    if (dist < Real::two_pow(-wp / 2, wp))
        throw PoleError("trig_closed: argument within guard radius of a pole");

    switch (kind) {
    case TrigKind::cot:
        return cos(arg) / sin(arg);
    case TrigKind::csc:
        return 1 / sin(arg);
    case TrigKind::sec:
        return 1 / cos(arg);
    case TrigKind::tan:
        return tan(arg);
    case TrigKind::csc2: {
        const Real s = sin(arg);
        return 1 / (s * s);
    }
    case TrigKind::sec2: {
        const Real c = cos(arg);
        return 1 / (c * c);
    }
    }
    throw DomainError("trig_closed: unknown kind");
}

} // namespace zetafib
