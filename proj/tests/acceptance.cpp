// Acceptance suite: end-to-end checks of the verification pipeline at its
// contractual tolerances. Prints one line per criterion; exits nonzero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "zetafib/harness.hpp"
#include "zetafib/specfun.hpp"

using namespace zetafib;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
                detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

// --- criterion 1: full-catalog sweep ---------------------------------------

void criterion_full_sweep() {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepConfig cfg; // all entries, m 0..8, n 1..10, 256 bits, 1e-40
    const auto results = sweep(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Summary s = summarize(results);
    const bool ok = s.fail == 0 && s.non_converged == 0 && secs < 300.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "full sweep: %zu cells, pass=%ld fail=%ld skip=%ld "
                  "non_converged=%ld in %.2fs",
                  results.size(), s.pass, s.fail, s.domain_skip, s.non_converged,
                  secs);
    report(1, ok, buf);
}

// --- criterion 2: odd zeta over powers of four at 320 bits ------------------

void criterion_e24_hi() {
    SweepConfig cfg;
    cfg.precision_bits = 320;
    cfg.tolerance = "1e-50";
    const VerificationResult r = verify_one("E24", {}, cfg);
    const bool ok = r.status == Status::pass &&
                    *r.abs_diff < Real::parse("1e-50", 384);
    report(2, ok,
           "E24 at 320 bits: status=" + to_string(r.status) +
               " abs_diff=" + (r.abs_diff ? r.abs_diff->to_string(6) : "-"));
}

// --- criterion 3: known value sums ------------------------------------------

void criterion_known_sums() {
    const SweepConfig cfg;
    const Real tol = Real::parse("1e-40", 320);
    bool ok = true;
    std::string detail = "known sums:";
    for (const char* id : {"K1", "K2", "K3"}) {
        const VerificationResult r = verify_one(id, {}, cfg);
        const bool this_ok = r.status == Status::pass && *r.abs_diff < tol;
        ok = ok && this_ok;
        detail += std::string(" ") + id + (this_ok ? " ok" : " FAIL");
    }
    report(3, ok, detail);
}

// --- criterion 4: printed example evaluations --------------------------------

void criterion_printed_examples() {
    const SweepConfig cfg;
    const Real tol = Real::parse("1e-40", 320);
    bool ok = true;
    std::string detail = "printed forms:";
    for (const char* id : {"EX1-F2", "EX1-F3", "EX1-L2", "EX1-L3"}) {
        const VerificationResult r = verify_one(id, {}, cfg);
        const bool this_ok = r.status == Status::pass && *r.abs_diff < tol;
        ok = ok && this_ok;
        detail += std::string(" ") + id + (this_ok ? " ok" : " FAIL");
    }
    report(4, ok, detail);
}

// --- criterion 5: generating-function containment ----------------------------

void criterion_gf_containment() {
    const Precision prec(256);
    const long wp = prec.working();
    const Real target = Real::two_pow(-prec.bits + 6, wp);
    const Real slack = Real::two_pow(-prec.bits + 8, wp);
    const Real alpha = golden_alpha(prec);
    auto zm1 = [&](long k) { return riemann_zeta_m1_int(k, prec); };
    auto hz = [&](long k, const Real& a) {
        return hurwitz_zeta(Real::of(k, wp), a, prec);
    };

    long checked = 0;
    bool ok = true;
    auto contain = [&](const Real& closed, const SeriesSpec& spec) {
        const CertifiedValue cv = eval_series(spec, target);
        const bool this_ok = abs(closed - cv.value) <= cv.abs_error_bound + slack;
        ok = ok && this_ok;
        ++checked;
    };

    const std::vector<Real> zs = {Real::parse("0.5", wp), Real::parse("0.9", wp),
                                  alpha, Real::parse("-0.7", wp),
                                  Real::parse("1.9", wp)};
    for (const Real& z : zs) {
        contain(gf_even_zeta(z),
                {1, [&, z](long k) { return zm1(2 * k) * pow_si(z, 2 * k - 1); },
                 tail_rule_zeta_family(0, z * z / 2)});
        contain(gf_even_zeta_deriv(z),
                {1,
                 [&, z](long k) {
                     return (2 * k - 1) * zm1(2 * k) * pow_si(z, 2 * k);
                 },
                 tail_rule_zeta_family(2, z * z / 2)});
        contain(gf_log_gamma(z),
                {2, [&, z](long k) { return zm1(k) * pow_si(z, k) / k; },
                 tail_rule_zeta_family(0, z)});
        contain(gf_log_gamma_deriv(z),
                {2,
                 [&, z](long k) {
                     return Real::of_ratio(k + 1, k, wp) * zm1(k) * pow_si(z, k);
                 },
                 tail_rule_zeta_family(0, z)});
        contain(gf_odd_zeta(z),
                {1, [&, z](long k) { return zm1(2 * k + 1) * pow_si(z, 2 * k); },
                 tail_rule_zeta_family(0, z * z / 2)});
    }

    const std::vector<std::pair<Real, Real>> pts = {
        {Real::parse("0.5", wp), Real::of(1, wp)},
        {Real::of_ratio(1, 3, wp), Real::of(2, wp)},
        {alpha, Real::of(2, wp)},
        {Real::parse("-0.4", wp), Real::of(1, wp)},
        {Real::parse("0.9", wp), Real::parse("1.5", wp)}};
    for (const auto& [z, a] : pts) {
        const Real const_ratio = (abs(z) / a).with_precision(96);
        const Real sq_ratio = (z * z / (a * a)).with_precision(96);
        contain(gf_hurwitz_log(z, a),
                {2, [&, z, a](long k) { return hz(k, a) * pow_si(z, k) / k; },
                 TailRule{[const_ratio](long) { return const_ratio; }, 2}});
        contain(gf_hurwitz_even(z, a),
                {1, [&, z, a](long k) { return hz(2 * k, a) * pow_si(z, 2 * k) / k; },
                 TailRule{[sq_ratio](long) { return sq_ratio; }, 1}});
        contain(gf_hurwitz_odd(z, a),
                {1,
                 [&, z, a](long k) {
                     return hz(2 * k + 1, a) * pow_si(z, 2 * k + 1) / (2 * k + 1);
                 },
                 TailRule{[sq_ratio](long) { return sq_ratio; }, 1}});
    }

    report(5, ok,
           "generating functions vs defining series: " + std::to_string(checked) +
               " containment checks (8 forms x 5 points)");
}

// --- criterion 6: special-function property suite ----------------------------

void criterion_specfun_properties() {
    const Precision prec(256);
    const long wp = prec.working();
    const Real slack = Real::two_pow(-prec.bits + 16, wp);
    const Real pi = const_pi(prec);
    const Real g = euler_gamma(prec);
    const Real alpha = golden_alpha(prec);
    const Real beta = golden_beta(prec);
    bool ok = true;
    long checks = 0;
    auto expect = [&](const Real& deviation) {
        ok = ok && (abs(deviation) < slack);
        ++checks;
    };

    // polygamma recurrence
    const Real xs[] = {Real::parse("0.25", wp), alpha - 1, Real::parse("1.5", wp),
                       beta * beta};
    for (long m = 0; m <= 3; ++m) {
        Real mfact = Real::of(1, wp);
        for (long i = 2; i <= m; ++i)
            mfact *= i;
        for (const Real& x : xs)
            expect(polygamma(m, x + 1) - polygamma(m, x) -
                   (m % 2 == 0 ? mfact : -mfact) / pow_si(x, m + 1));
    }
    // reflection, orders 0 and 1
    for (const char* xstr : {"0.25", "0.4"}) {
        const Real x = Real::parse(xstr, wp);
        expect(digamma(1 - x) - digamma(x) - pi * trig_closed(TrigKind::cot, pi * x));
        expect(polygamma(1, 1 - x) + polygamma(1, x) -
               pi * pi * trig_closed(TrigKind::csc2, pi * x));
    }
    // harmonic formula
    for (long n : {2L, 5L, 10L}) {
        Real h(wp);
        for (long k = 1; k < n; ++k)
            h += Real::of_ratio(1, k, wp);
        expect(digamma(Real::of(n, wp)) - (h - g));
    }
    // polygamma vs Hurwitz
    for (long m = 1; m <= 3; ++m) {
        Real mfact = Real::of(1, wp);
        for (long i = 2; i <= m; ++i)
            mfact *= i;
        for (const Real& x : {Real::parse("0.25", wp), alpha})
            expect(polygamma(m, x) - (m % 2 == 1 ? mfact : -mfact) *
                                         hurwitz_zeta(Real::of(m + 1, wp), x, prec));
    }
    // gamma reflection
    for (const Real& z : {Real::of(1, wp) / 3, Real::of(1, wp) / 9, Real::of(1, wp) / 10})
        expect(ln_gamma(1 + z) + ln_gamma(1 - z) -
               ln(pi * z * trig_closed(TrigKind::csc, pi * z)));
    // eta continuation vs Euler-Maclaurin
    for (const char* sstr : {"1.5", "2", "3"}) {
        const Real s = Real::parse(sstr, wp);
        expect(riemann_zeta_eta(s, prec) - riemann_zeta(s, prec));
    }

    report(6, ok,
           "special-function properties: " + std::to_string(checks) +
               " relations at 2^-240 slack");
}

// --- criterion 7: sequence suite ----------------------------------------------

void criterion_sequences() {
    bool ok = true;

    // doubling vs naive recurrence
    {
        SeqValue a = 0, b = 1; // F_0, F_1
        for (long n = 0; n <= 90; ++n) {
            ok = ok && (fib(n) == a);
            const SeqValue c = a + b;
            a = b;
            b = c;
        }
        for (long n = 1; n <= 90; ++n) {
            const SeqValue expect = (n % 2 == 1) ? fib(n) : SeqValue(-fib(n));
            ok = ok && (fib(-n) == expect);
        }
        SeqValue la = 2, lb = 1;
        for (long n = 0; n <= 90; ++n) {
            ok = ok && (lucas(n) == la);
            const SeqValue c = la + lb;
            la = lb;
            lb = c;
        }
    }
    // negative-index laws to 100
    for (long m = 1; m <= 100; ++m) {
        ok = ok && (fib(-m) == ((m % 2 == 1) ? fib(m) : SeqValue(-fib(m))));
        ok = ok && (lucas(-m) == ((m % 2 == 0) ? lucas(m) : SeqValue(-lucas(m))));
    }
    // product identities, exact
    for (long n = 1; n <= 60 && ok; ++n) {
        for (long m = 1; m <= n; ++m) {
            if (n > m)
                ok = ok && (id_catalan_like(n, m) == fib(n - m) * fib(n + m));
            ok = ok && (id_lucas_fib(n, m) == lucas(m) * fib(n));
            ok = ok && (id_double(n, m) == 2 * fib(n + m));
            ok = ok && (id_lucas_lucas(n, m) == lucas(m) * lucas(n));
            ok = ok && (id_five_fib(n, m) == 5 * fib(m) * fib(n));
        }
    }
    // Binet residual bound
    {
        const Precision prec(128);
        const double l2a = std::log2((1.0 + std::sqrt(5.0)) / 2.0);
        for (long n = -100; n <= 100; ++n) {
            const long slack_bits =
                static_cast<long>(std::ceil(std::abs(n) * l2a)) + 16;
            const Real bound = Real::two_pow(-prec.bits + slack_bits, prec.working());
            ok = ok &&
                 (abs(binet_fib(n, prec) - Real::from_mpz(fib(n), prec.working())) <
                  bound);
            ok = ok && (abs(binet_lucas(n, prec) -
                            Real::from_mpz(lucas(n), prec.working())) < bound);
        }
    }

    report(7, ok,
           "sequences: doubling==naive |n|<=90, reflection m<=100, product "
           "identities m<=n<=60, Binet residuals |n|<=100");
}

// --- criterion 8: tail-bound soundness over sampled catalog cells ------------

void criterion_tail_soundness() {
    const Precision prec(256);
    const Real target = Real::parse("5e-41", prec.working());

    // all in-domain cells of the standard sweep
    struct Cell {
        const IdentityEntry* e;
        ParamSet p;
    };
    std::vector<Cell> pool;
    for (const auto& e : catalog_entries()) {
        std::vector<ParamSet> params;
        if (e.uses_m && e.uses_n) {
            for (long m = 0; m <= 8; ++m)
                for (long n = 1; n <= 10; ++n)
                    params.push_back(ParamSet{m, n});
        } else if (e.uses_m) {
            for (long m = 0; m <= 8; ++m)
                params.push_back(ParamSet{m, std::nullopt});
        } else if (e.uses_n) {
            for (long n = 1; n <= 10; ++n)
                params.push_back(ParamSet{std::nullopt, n});
        } else {
            params.push_back(ParamSet{});
        }
        for (const auto& p : params)
            if (!e.domain_violation(p))
                pool.push_back({&e, p});
    }

    std::mt19937 rng(20240911);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t sample = std::min<std::size_t>(20, pool.size());

    bool ok = true;
    for (std::size_t i = 0; i < sample; ++i) {
        const SeriesSpec spec = build_lhs(*pool[i].e, pool[i].p, prec);
        const CertifiedValue cv = eval_series(spec, target);
        Real extended(prec.working());
        for (long k = spec.start_k; k < spec.start_k + 2 * cv.terms_used; ++k)
            extended += spec.term(k);
        ok = ok && (abs(extended - cv.value) <= cv.abs_error_bound);
    }
    report(8, ok,
           "tail soundness: doubling terms moved " + std::to_string(sample) +
               " sampled catalog sums by less than their reported bounds");
}

// --- criterion 9: determinism --------------------------------------------------

void criterion_determinism() {
    SweepConfig cfg;
    cfg.jobs = 1;
    const auto r1 = sweep(cfg);
    const auto r2 = sweep(cfg);
    const std::string j1 = report_json(r1);
    const std::string j2 = report_json(r2);
    cfg.jobs = 0; // hardware concurrency
    const std::string jn = report_json(sweep(cfg));
    const bool ok = (j1 == j2) && (j1 == jn);
    report(9, ok,
           "determinism: repeated sweeps and --jobs 1 vs --jobs N reports are "
           "byte-identical");
}

} // namespace

int main() {
    criterion_full_sweep();
    criterion_e24_hi();
    criterion_known_sums();
    criterion_printed_examples();
    criterion_gf_containment();
    criterion_specfun_properties();
    criterion_sequences();
    criterion_tail_soundness();
    criterion_determinism();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
}
