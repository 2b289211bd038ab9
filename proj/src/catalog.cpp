#include "zetafib/catalog.hpp"

#include <mutex>

#include "zetafib/errors.hpp"
#include "zetafib/specfun.hpp"

namespace zetafib {

namespace {

// ---------------------------------------------------------------------------
// Shared right-hand-side building blocks
// ---------------------------------------------------------------------------

Real tan_s5h(Precision prec) { // tan(sqrt5 pi / 2)
    return trig_closed(TrigKind::tan, const_sqrt5(prec) * const_pi(prec) / 2);
}

Real sec2_s5h(Precision prec) { // sec^2(sqrt5 pi / 2)
    return trig_closed(TrigKind::sec2, const_sqrt5(prec) * const_pi(prec) / 2);
}

// c1 = (sqrt5 pi / 5) tan(sqrt5 pi / 2): value of sum 1/(n^2+n-1) minus 1.
Real aux_c1(Precision prec) {
    return const_sqrt5(prec) * const_pi(prec) / 5 * tan_s5h(prec);
}

// c2 = ((5+sqrt5)/10) pi tan(sqrt5 pi / 2).
Real aux_c2(Precision prec) {
    return (5 + const_sqrt5(prec)) / 10 * const_pi(prec) * tan_s5h(prec);
}

Real zeta_int(long k, Precision prec) { return riemann_zeta_m1_int(k, prec) + 1; }

Real real_of(const SeqValue& v, Precision prec) {
    return Real::from_mpz(v, prec.working());
}

// lnGamma((b-1)/b) - gamma/b for integer b >= 2.
Real lgamma_ratio_form(const SeqValue& b, Precision prec) {
    const Real rb = real_of(b, prec);
    return ln_gamma((rb - 1) / rb) - euler_gamma(prec) / rb;
}

// ln(pi/X) + ln csc(pi/X) for integer X >= 2.
Real log_csc_form(const SeqValue& x, Precision prec) {
    const Real rx = real_of(x, prec);
    const Real pi_over = const_pi(prec) / rx;
    return ln(pi_over) + ln(trig_closed(TrigKind::csc, pi_over));
}

// ---------------------------------------------------------------------------
// Shared left-hand-side series families
// ---------------------------------------------------------------------------

// sum_{k>=2} zeta(k) / (k b^k), b >= 2.
SeriesSpec zeta_k_reciprocal(const SeqValue& b, Precision prec) {
    const Real rb = real_of(b, prec);
    return {2,
            [rb, prec](long k) { return zeta_int(k, prec) / (pow_si(rb, k) * k); },
            tail_rule_reciprocal_family(b)};
}

// sum_{k>=1} zeta(2k) / (k B^k), B >= 2.
SeriesSpec zeta_even_reciprocal(const SeqValue& big_b, Precision prec) {
    const Real rb = real_of(big_b, prec);
    return {1,
            [rb, prec](long k) { return zeta_int(2 * k, prec) / (pow_si(rb, k) * k); },
            tail_rule_reciprocal_family(big_b)};
}

// sum_{k>=1} zeta(2k+1) / ((2k+1) B^k), B >= 2.
SeriesSpec zeta_odd_reciprocal(const SeqValue& big_b, Precision prec) {
    const Real rb = real_of(big_b, prec);
    return {1,
            [rb, prec](long k) {
                return zeta_int(2 * k + 1, prec) / (pow_si(rb, k) * (2 * k + 1));
            },
            tail_rule_reciprocal_family(big_b)};
}

// sum_{k>=1} (2k-1)(zeta(2k)-1) G_{2k+m+1} with G = fib or lucas.
// Ratio: (2k+1)/(2k-1) <= ((k+1)/k)^2, zeta-minus-one halves per unit
// argument step (two steps here), and G_{j+2}/G_j <= 3 once j >= 2, so
// ((k+1)/k)^2 * 3/4 certifies the tail.
SeriesSpec t1_series(SeqValue (*seq)(long), long m, Precision prec) {
    return {1,
            [seq, m, prec](long k) {
                return (2 * k - 1) * riemann_zeta_m1_int(2 * k, prec) *
                       real_of(seq(2 * k + m + 1), prec);
            },
            tail_rule_zeta_family(2, Real::of_ratio(3, 2, 96))};
}

// sum_{k>=2} (k+1)/k (zeta(k)-1) G_{k+m}. Single-index sequence step:
// F_{j+1}/F_j <= 5/3 from j = 3, L_{j+1}/L_j <= 7/4 from j = 2.
SeriesSpec t2_series(SeqValue (*seq)(long), long m, Precision prec, long num,
                     long den, long k0_min) {
    return {2,
            [seq, m, prec](long k) {
                return Real::of_ratio(k + 1, k, prec.working()) *
                       riemann_zeta_m1_int(k, prec) * real_of(seq(k + m), prec);
            },
            tail_rule_zeta_family(0, Real::of_ratio(num, den, 96), k0_min)};
}

// sum_{k>=1} (2k+1)(zeta(2k+1)-1) G_{2k+m}.
SeriesSpec t3_series(SeqValue (*seq)(long), long m, Precision prec) {
    return {1,
            [seq, m, prec](long k) {
                return (2 * k + 1) * riemann_zeta_m1_int(2 * k + 1, prec) *
                       real_of(seq(2 * k + m), prec);
            },
            tail_rule_zeta_family(2, Real::of_ratio(3, 2, 96))};
}

// ---------------------------------------------------------------------------
// Domain predicate helpers
// ---------------------------------------------------------------------------

using Violation = std::optional<std::string>;

Violation need_m(const ParamSet& p, long lo) {
    if (!p.m)
        return "m required";
    if (*p.m < lo)
        return "m>=" + std::to_string(lo);
    return std::nullopt;
}

Violation need_n(const ParamSet& p, long lo) {
    if (!p.n)
        return "n required";
    if (*p.n < lo)
        return "n>=" + std::to_string(lo);
    return std::nullopt;
}

Violation need_mn(const ParamSet& p, bool strict) {
    if (auto v = need_m(p, 1))
        return v;
    if (auto v = need_n(p, 1))
        return v;
    if (strict ? !(*p.n > *p.m) : !(*p.n >= *p.m))
        return strict ? "n>m" : "n>=m";
    return std::nullopt;
}

Violation no_params(const ParamSet&) { return std::nullopt; }

// ---------------------------------------------------------------------------
// The registry
// ---------------------------------------------------------------------------

std::vector<IdentityEntry> make_catalog() {
    std::vector<IdentityEntry> cat;
    cat.reserve(40);

    auto add = [&cat](IdentityEntry e) { cat.push_back(std::move(e)); };

    // --- known single-parameter-free sums -----------------------------------

    add({"K1", "odd zeta against even Fibonacci over powers of five",
         "sum_{k>=1} zeta(2k+1) F_{2k} / 5^k = 1/2", "no parameters", false, false,
         false, no_params,
         [](const ParamSet&, Precision prec) -> SeriesSpec {
             // zeta(2k+3) <= zeta(2k+1) and F_{2k+2} <= 3 F_{2k}: ratio 3/5.
             return {1,
                     [prec](long k) {
                         mpz_class p5;
                         mpz_ui_pow_ui(p5.get_mpz_t(), 5,
                                       static_cast<unsigned long>(k));
                         return zeta_int(2 * k + 1, prec) * real_of(fib(2 * k), prec) /
                                real_of(p5, prec);
                     },
                     tail_rule_zeta_family(0, Real::of_ratio(6, 5, 96))};
         },
         [](const ParamSet&, Precision prec) {
             return Real::of_ratio(1, 2, prec.working());
         }});

    add({"K2", "shifted odd zeta against even Fibonacci",
         "sum_{k>=1} (zeta(2k+1)-1) F_{2k} = 1/2", "no parameters", false, false,
         false, no_params,
         [](const ParamSet&, Precision prec) -> SeriesSpec {
             return {1,
                     [prec](long k) {
                         return riemann_zeta_m1_int(2 * k + 1, prec) *
                                real_of(fib(2 * k), prec);
                     },
                     tail_rule_zeta_family(0, Real::of_ratio(3, 2, 96))};
         },
         [](const ParamSet&, Precision prec) {
             return Real::of_ratio(1, 2, prec.working());
         }});

    add({"K3", "shifted zeta against lagged Fibonacci",
         "sum_{k>=2} (zeta(k)-1) F_{k-1} = 1 + (pi/sqrt5) tan(sqrt5 pi/2)",
         "no parameters", false, false, false, no_params,
         [](const ParamSet&, Precision prec) -> SeriesSpec {
             // F_k/F_{k-1} <= 5/3 once k >= 4.
             return {2,
                     [prec](long k) {
                         return riemann_zeta_m1_int(k, prec) *
                                real_of(fib(k - 1), prec);
                     },
                     tail_rule_zeta_family(0, Real::of_ratio(5, 3, 96), 4)};
         },
         [](const ParamSet&, Precision prec) {
             return 1 + const_pi(prec) / const_sqrt5(prec) * tan_s5h(prec);
         }});

    // --- weighted even-zeta series, Fibonacci and Lucas ---------------------

    add({"T1-F", "weighted even zeta against shifted Fibonacci",
         "sum_{k>=1} (2k-1)(zeta(2k)-1) F_{2k+m+1} = (pi^2/2) sec^2(sqrt5 pi/2) "
         "F_{m+3} - (9 F_m + 7 F_{m-1})/2",
         "m >= 2", true, false, false,
         [](const ParamSet& p) { return need_m(p, 2); },
         [](const ParamSet& p, Precision prec) { return t1_series(fib, *p.m, prec); },
         [](const ParamSet& p, Precision prec) {
             const long m = *p.m;
             const Real pi = const_pi(prec);
             return pi * pi / 2 * sec2_s5h(prec) * real_of(fib(m + 3), prec) -
                    real_of(9 * fib(m) + 7 * fib(m - 1), prec) / 2;
         }});

    add({"T1-L", "weighted even zeta against shifted Lucas",
         "sum_{k>=1} (2k-1)(zeta(2k)-1) L_{2k+m+1} = (pi^2/2) sec^2(sqrt5 pi/2) "
         "L_{m+3} - (9 L_m + 7 L_{m-1})/2",
         "m >= 2", true, false, false,
         [](const ParamSet& p) { return need_m(p, 2); },
         [](const ParamSet& p, Precision prec) { return t1_series(lucas, *p.m, prec); },
         [](const ParamSet& p, Precision prec) {
             const long m = *p.m;
             const Real pi = const_pi(prec);
             return pi * pi / 2 * sec2_s5h(prec) * real_of(lucas(m + 3), prec) -
                    real_of(9 * lucas(m) + 7 * lucas(m - 1), prec) / 2;
         }});

    // --- (k+1)/k weighted zeta series ---------------------------------------

    auto t2l_rhs = [](long m, Precision prec) {
        const Real a = golden_alpha(prec);
        const Real b = golden_beta(prec);
        const Real g = euler_gamma(prec);
        const Real pa = digamma(a * a);
        const Real pb = digamma(b * b);
        return 2 * ((1 - g) * real_of(lucas(m + 1), prec)) +
               pow_si(a, m) * (ln_gamma(b * b) - a * pb) +
               pow_si(b, m) * (ln_gamma(a * a) - b * pa);
    };
    auto t2f_rhs = [](long m, Precision prec) {
        const Real a = golden_alpha(prec);
        const Real b = golden_beta(prec);
        const Real g = euler_gamma(prec);
        const Real s5 = const_sqrt5(prec);
        const Real pa = digamma(a * a);
        const Real pb = digamma(b * b);
        return 2 * ((1 - g) * real_of(fib(m + 1), prec)) +
               pow_si(a, m) / s5 * (ln_gamma(b * b) - a * pb) -
               pow_si(b, m) / s5 * (ln_gamma(a * a) - b * pa);
    };

    add({"T2-L", "growth-weighted zeta against shifted Lucas",
         "sum_{k>=2} (k+1)/k (zeta(k)-1) L_{k+m} = 2(1-gamma) L_{m+1} + alpha^m "
         "(lngamma(beta^2) - alpha psi(beta^2)) + beta^m (lngamma(alpha^2) - beta "
         "psi(alpha^2))",
         "m >= 0", true, false, false,
         [](const ParamSet& p) { return need_m(p, 0); },
         [](const ParamSet& p, Precision prec) {
             return t2_series(lucas, *p.m, prec, 7, 4, 2);
         },
         [t2l_rhs](const ParamSet& p, Precision prec) { return t2l_rhs(*p.m, prec); }});

    add({"T2-F", "growth-weighted zeta against shifted Fibonacci",
         "sum_{k>=2} (k+1)/k (zeta(k)-1) F_{k+m} = 2(1-gamma) F_{m+1} + alpha^m/"
         "sqrt5 (lngamma(beta^2) - alpha psi(beta^2)) - beta^m/sqrt5 "
         "(lngamma(alpha^2) - beta psi(alpha^2))",
         "m >= 0", true, false, false,
         [](const ParamSet& p) { return need_m(p, 0); },
         [](const ParamSet& p, Precision prec) {
             return t2_series(fib, *p.m, prec, 5, 3, 3);
         },
         [t2f_rhs](const ParamSet& p, Precision prec) { return t2f_rhs(*p.m, prec); }});

    // --- auxiliary quadratic-denominator sums --------------------------------
    //
    // sum_{n>=1} 1/(n^2+n-1) and sum_{n>=1} 1/(n(n^2+n-1)) converge too slowly
    // to certify directly; n^2+n-1 = (n+alpha)(n+beta) lets both collapse into
    // geometrically convergent zeta-Fibonacci series via partial fractions:
    //   sum 1/(n^2+n-1)    = 1 + sum_{k>=1} (-1)^{k+1} F_k     (zeta(k+1)-1)
    //   sum 1/(n(n^2+n-1)) = 1 + sum_{k>=2} (-1)^k     F_{k-1} (zeta(k+1)-1)
    // (the unit tests pin both against direct partial sums).

    add({"AUX-1", "reciprocal quadratic denominator sum",
         "sum_{n>=1} 1/(n^2+n-1) = 1 + (sqrt5 pi/5) tan(sqrt5 pi/2)",
         "no parameters", false, false, false, no_params,
         [](const ParamSet&, Precision prec) -> SeriesSpec {
             return {0,
                     [prec](long k) {
                         if (k == 0)
                             return Real::of(1, prec.working());
                         const Real t =
                             real_of(fib(k), prec) * riemann_zeta_m1_int(k + 1, prec);
                         return (k % 2 == 1) ? t : -t;
                     },
                     tail_rule_zeta_family(0, Real::of_ratio(5, 3, 96), 3)};
         },
         [](const ParamSet&, Precision prec) { return 1 + aux_c1(prec); }});

    add({"AUX-2", "reciprocal cubic denominator sum",
         "sum_{n>=1} 1/(n(n^2+n-1)) = 1 - gamma - psi(alpha) + ((5+sqrt5)/10) pi "
         "tan(sqrt5 pi/2)",
         "no parameters", false, false, false, no_params,
         [](const ParamSet&, Precision prec) -> SeriesSpec {
             return {0,
                     [prec](long k) {
                         if (k == 0)
                             return Real::of(1, prec.working());
                         if (k == 1)
                             return Real(prec.working()); // F_0 = 0
                         const Real t = real_of(fib(k - 1), prec) *
                                        riemann_zeta_m1_int(k + 1, prec);
                         return (k % 2 == 0) ? t : -t;
                     },
                     tail_rule_zeta_family(0, Real::of_ratio(5, 3, 96), 4)};
         },
         [](const ParamSet&, Precision prec) {
             return 1 - euler_gamma(prec) - digamma(golden_alpha(prec)) + aux_c2(prec);
         }});

    // --- digamma combinations at the golden-ratio squares --------------------
    //
    // alpha^{m+1} psi(beta^2) + beta^{m+1} psi(alpha^2) expands, through the
    // same partial-fraction route as AUX-1/AUX-2, into
    //   (1-gamma) L_{m+1} - L_{m+3} - sum_{k>=1} L_{m+1-k} (zeta(k+1)-1),
    // and the Fibonacci combination into
    //   gamma F_{m+1} + F_{m+2} + sum_{k>=1} F_{m+1-k} (zeta(k+1)-1);
    // negative indices enter through the reflection laws. The series side is
    // built from exact integers and zeta only, keeping it independent of the
    // digamma evaluations in the closed form.

    add({"AUX-PSI-L", "Lucas-weighted digamma combination",
         "alpha^{m+1} psi(beta^2) + beta^{m+1} psi(alpha^2) = (psi(alpha) - 1 - "
         "((5+sqrt5)/10) pi tan(sqrt5 pi/2)) L_{m+1} - (1 + (sqrt5 pi/5) "
         "tan(sqrt5 pi/2)) L_m",
         "m >= 0", true, false, false,
         [](const ParamSet& p) { return need_m(p, 0); },
         [](const ParamSet& p, Precision prec) -> SeriesSpec {
             const long m = *p.m;
             // |L_{j-1}/L_j| <= 7/4 once the index is <= -3, i.e. k >= m+4.
             return {0,
                     [m, prec](long k) {
                         if (k == 0)
                             return (1 - euler_gamma(prec)) *
                                        real_of(lucas(m + 1), prec) -
                                    real_of(lucas(m + 3), prec);
                         return -(real_of(lucas(m + 1 - k), prec) *
                                  riemann_zeta_m1_int(k + 1, prec));
                     },
                     tail_rule_zeta_family(0, Real::of_ratio(7, 4, 96), m + 4)};
         },
         [](const ParamSet& p, Precision prec) {
             const long m = *p.m;
             return (digamma(golden_alpha(prec)) - 1 - aux_c2(prec)) *
                        real_of(lucas(m + 1), prec) -
                    (1 + aux_c1(prec)) * real_of(lucas(m), prec);
         }});

    add({"AUX-PSI-F", "Fibonacci-weighted digamma combination",
         "(beta^{m+1} psi(alpha^2) - alpha^{m+1} psi(beta^2))/sqrt5 = F_{m+2} + "
         "((sqrt5 pi/5) tan(sqrt5 pi/2)) F_m + (((5+sqrt5)/10) pi tan(sqrt5 pi/2) "
         "- psi(alpha)) F_{m+1}",
         "m >= 0", true, false, false,
         [](const ParamSet& p) { return need_m(p, 0); },
         [](const ParamSet& p, Precision prec) -> SeriesSpec {
             const long m = *p.m;
             return {0,
                     [m, prec](long k) {
                         if (k == 0)
                             return euler_gamma(prec) * real_of(fib(m + 1), prec) +
                                    real_of(fib(m + 2), prec);
                         return real_of(fib(m + 1 - k), prec) *
                                riemann_zeta_m1_int(k + 1, prec);
                     },
                     tail_rule_zeta_family(0, Real::of_ratio(5, 3, 96), m + 4)};
         },
         [](const ParamSet& p, Precision prec) {
             const long m = *p.m;
             return real_of(fib(m + 2), prec) + aux_c1(prec) * real_of(fib(m), prec) +
                    (aux_c2(prec) - digamma(golden_alpha(prec))) *
                        real_of(fib(m + 1), prec);
         }});

    // --- strong closed forms at m = 0 ----------------------------------------

    add({"T2-L0", "growth-weighted zeta against Lucas, elementary closed form",
         "sum_{k>=2} (k+1)/k (zeta(k)-1) L_k = 5 - 2 gamma - psi(alpha) + ln(-pi "
         "sec(sqrt5 pi/2)) + ((1+sqrt5)/2) pi tan(sqrt5 pi/2)",
         "no parameters", false, false, false, no_params,
         [](const ParamSet&, Precision prec) {
             return t2_series(lucas, 0, prec, 7, 4, 2);
         },
         [](const ParamSet&, Precision prec) {
             const Real q =
                 -(const_pi(prec) *
                   trig_closed(TrigKind::sec, const_sqrt5(prec) * const_pi(prec) / 2));
             if (q.sign() <= 0)
                 throw DomainError("T2-L0: -pi sec(sqrt5 pi/2) not positive");
             return 5 - 2 * euler_gamma(prec) - digamma(golden_alpha(prec)) + ln(q) +
                    golden_alpha(prec) * const_pi(prec) * tan_s5h(prec);
         }});

    add({"T2-F0", "growth-weighted zeta against Fibonacci, elementary closed form",
         "sum_{k>=2} (k+1)/k (zeta(k)-1) F_k = 3 - 2 gamma + (1/sqrt5) "
         "ln(Gamma(beta^2)/Gamma(alpha^2)) + ((5+sqrt5)/10) pi tan(sqrt5 pi/2) - "
         "psi(alpha)",
         "no parameters", false, false, false, no_params,
         [](const ParamSet&, Precision prec) {
             return t2_series(fib, 0, prec, 5, 3, 3);
         },
         [](const ParamSet&, Precision prec) {
             const Real a = golden_alpha(prec);
             const Real b = golden_beta(prec);
             return 3 - 2 * euler_gamma(prec) +
                    (ln_gamma(b * b) - ln_gamma(a * a)) / const_sqrt5(prec) +
                    aux_c2(prec) - digamma(a);
         }});

    // --- weighted odd-zeta series --------------------------------------------

    add({"T3-F", "weighted odd zeta against shifted Fibonacci",
         "sum_{k>=1} (2k+1)(zeta(2k+1)-1) F_{2k+m} = (1-gamma) F_m - "
         "(omega(m,alpha) - omega(m,beta)) / (2 sqrt5)",
         "m >= 0", true, false, false,
         [](const ParamSet& p) { return need_m(p, 0); },
         [](const ParamSet& p, Precision prec) { return t3_series(fib, *p.m, prec); },
         [](const ParamSet& p, Precision prec) {
             const long m = *p.m;
             return (1 - euler_gamma(prec)) * real_of(fib(m), prec) -
                    (omega(m, golden_alpha(prec)) - omega(m, golden_beta(prec))) /
                        (2 * const_sqrt5(prec));
         }});

    add({"T3-L", "weighted odd zeta against shifted Lucas",
         "sum_{k>=1} (2k+1)(zeta(2k+1)-1) L_{2k+m} = (1-gamma) L_m - "
         "(omega(m,alpha) + omega(m,beta)) / 2",
         "m >= 0", true, false, false,
         [](const ParamSet& p) { return need_m(p, 0); },
         [](const ParamSet& p, Precision prec) { return t3_series(lucas, *p.m, prec); },
         [](const ParamSet& p, Precision prec) {
             const long m = *p.m;
             return (1 - euler_gamma(prec)) * real_of(lucas(m), prec) -
                    (omega(m, golden_alpha(prec)) + omega(m, golden_beta(prec))) / 2;
         }});

    // --- zeta over reciprocal sequence powers (log-gamma forms) --------------

    add({"T4-a", "zeta over cross-product power, log-gamma form",
         "sum_{k>=2} zeta(k)/(k (L_n F_m + F_n L_m)^k) = lngamma((2 F_{n+m} - 1)/"
         "(2 F_{n+m})) - gamma/(2 F_{n+m})",
         "n >= m >= 1", true, true, false,
         [](const ParamSet& p) { return need_mn(p, false); },
         [](const ParamSet& p, Precision prec) {
             return zeta_k_reciprocal(id_double(*p.n, *p.m), prec);
         },
         [](const ParamSet& p, Precision prec) {
             return lgamma_ratio_form(2 * fib(*p.n + *p.m), prec);
         }});

    add({"T4-b", "zeta over Fibonacci-square power, log-gamma form",
         "sum_{k>=2} zeta(k)/(k (F_n^2 + (-1)^{n+m-1} F_m^2)^k) = "
         "lngamma((F_{n-m} F_{n+m} - 1)/(F_{n-m} F_{n+m})) - gamma/(F_{n-m} "
         "F_{n+m})",
         "n > m >= 1", true, true, false,
         [](const ParamSet& p) { return need_mn(p, true); },
         [](const ParamSet& p, Precision prec) {
             return zeta_k_reciprocal(id_catalan_like(*p.n, *p.m), prec);
         },
         [](const ParamSet& p, Precision prec) {
             return lgamma_ratio_form(fib(*p.n - *p.m) * fib(*p.n + *p.m), prec);
         }});

    add({"T4-c", "zeta over Lucas-sum power, log-gamma form",
         "sum_{k>=2} zeta(k)/(k (L_{n+m} + (-1)^m L_{n-m})^k) = lngamma((L_m L_n "
         "- 1)/(L_m L_n)) - gamma/(L_m L_n)",
         "n >= m >= 1 and L_m L_n >= 2", true, true, false,
         [](const ParamSet& p) -> Violation {
             if (auto v = need_mn(p, false))
                 return v;
             if (lucas(*p.m) * lucas(*p.n) < 2)
                 return "base>=2";
             return std::nullopt;
         },
         [](const ParamSet& p, Precision prec) {
             return zeta_k_reciprocal(id_lucas_lucas(*p.n, *p.m), prec);
         },
         [](const ParamSet& p, Precision prec) {
             return lgamma_ratio_form(lucas(*p.m) * lucas(*p.n), prec);
         }});

    add({"T4-d", "zeta over five-Fibonacci-product power, log-gamma form",
         "sum_{k>=2} zeta(k)/(k (5 F_m F_n)^k) = lngamma((L_{n+m} + (-1)^{m-1} "
         "L_{n-m} - 1)/(L_{n+m} + (-1)^{m-1} L_{n-m})) - gamma/(L_{n+m} + "
         "(-1)^{m-1} L_{n-m})",
         "n >= m >= 1", true, true, false,
         [](const ParamSet& p) { return need_mn(p, false); },
         [](const ParamSet& p, Precision prec) {
             return zeta_k_reciprocal(5 * fib(*p.m) * fib(*p.n), prec);
         },
         [](const ParamSet& p, Precision prec) {
             return lgamma_ratio_form(id_five_fib(*p.n, *p.m), prec);
         }});

    add({"T4-e", "zeta over Fibonacci-Lucas product power, log-gamma form",
         "sum_{k>=2} zeta(k)/(k (F_m L_n)^k) = lngamma((F_{n+m} + (-1)^{m-1} "
         "F_{n-m} - 1)/(F_{n+m} + (-1)^{m-1} F_{n-m})) - gamma/(F_{n+m} + "
         "(-1)^{m-1} F_{n-m})",
         "n >= m >= 1 and F_m L_n >= 2", true, true, false,
         [](const ParamSet& p) -> Violation {
             if (auto v = need_mn(p, false))
                 return v;
             if (fib(*p.m) * lucas(*p.n) < 2)
                 return "base>=2";
             return std::nullopt;
         },
         [](const ParamSet& p, Precision prec) {
             return zeta_k_reciprocal(fib(*p.m) * lucas(*p.n), prec);
         },
         [](const ParamSet& p, Precision prec) {
             const long sign = (*p.m % 2 == 0) ? -1 : 1;
             return lgamma_ratio_form(fib(*p.n + *p.m) + sign * fib(*p.n - *p.m),
                                      prec);
         }});

    add({"E19", "zeta over five-Fibonacci-square power",
         "sum_{k>=2} zeta(k)/(k (5 F_n^2)^k) = lngamma((L_{2n} + 2(-1)^{n-1} - 1)/"
         "(L_{2n} + 2(-1)^{n-1})) - gamma/(L_{2n} + 2(-1)^{n-1})",
         "n >= 2", false, true, false,
         [](const ParamSet& p) { return need_n(p, 2); },
         [](const ParamSet& p, Precision prec) {
             return zeta_k_reciprocal(5 * fib(*p.n) * fib(*p.n), prec);
         },
         [](const ParamSet& p, Precision prec) {
             const long sign = (*p.n % 2 == 1) ? 2 : -2;
             return lgamma_ratio_form(lucas(2 * *p.n) + sign, prec);
         }});

    add({"E20", "zeta over split even-Fibonacci power",
         "sum_{k>=2} zeta(k)/(k (F_n L_n)^k) = lngamma((F_{2n} - 1)/F_{2n}) - "
         "gamma/F_{2n}",
         "n >= 2", false, true, false,
         [](const ParamSet& p) { return need_n(p, 2); },
         [](const ParamSet& p, Precision prec) {
             return zeta_k_reciprocal(fib(*p.n) * lucas(*p.n), prec);
         },
         [](const ParamSet& p, Precision prec) {
             return lgamma_ratio_form(fib(2 * *p.n), prec);
         }});

    // --- even zeta over reciprocal squared powers (log-csc forms) ------------

    add({"T5-a", "even zeta over Fibonacci-square-product power",
         "sum_{k>=1} zeta(2k)/(k (F_{n-m}^2 F_{n+m}^2)^k) = ln(pi/(F_n^2 + "
         "(-1)^{n+m-1} F_m^2)) + ln csc(pi/(F_n^2 + (-1)^{n+m-1} F_m^2))",
         "n > m >= 1", true, true, false,
         [](const ParamSet& p) -> Violation {
             if (auto v = need_mn(p, true))
                 return v;
             if (fib(*p.n - *p.m) * fib(*p.n + *p.m) < 2)
                 return "base>=2";
             return std::nullopt;
         },
         [](const ParamSet& p, Precision prec) {
             const SeqValue x = fib(*p.n - *p.m) * fib(*p.n + *p.m);
             return zeta_even_reciprocal(x * x, prec);
         },
         [](const ParamSet& p, Precision prec) {
             return log_csc_form(id_catalan_like(*p.n, *p.m), prec);
         }});

    add({"T5-b", "even zeta over Lucas-Fibonacci-square power",
         "sum_{k>=1} zeta(2k)/(k (L_m^2 F_n^2)^k) = ln(pi/(F_{n+m} + (-1)^m "
         "F_{n-m})) + ln csc(pi/(F_{n+m} + (-1)^m F_{n-m}))",
         "n >= m >= 1 and L_m F_n >= 2", true, true, false,
         [](const ParamSet& p) -> Violation {
             if (auto v = need_mn(p, false))
                 return v;
             if (lucas(*p.m) * fib(*p.n) < 2)
                 return "base>=2";
             return std::nullopt;
         },
         [](const ParamSet& p, Precision prec) {
             const SeqValue x = lucas(*p.m) * fib(*p.n);
             return zeta_even_reciprocal(x * x, prec);
         },
         [](const ParamSet& p, Precision prec) {
             return log_csc_form(id_lucas_fib(*p.n, *p.m), prec);
         }});

    add({"T5-c", "even zeta over doubled-Fibonacci power",
         "sum_{k>=1} zeta(2k)/(4^k k F_{n+m}^{2k}) = ln(pi/(L_n F_m + F_n L_m)) + "
         "ln csc(pi/(L_n F_m + F_n L_m))",
         "n >= m >= 1", true, true, false,
         [](const ParamSet& p) { return need_mn(p, false); },
         [](const ParamSet& p, Precision prec) {
             const SeqValue f = fib(*p.n + *p.m);
             return zeta_even_reciprocal(4 * f * f, prec);
         },
         [](const ParamSet& p, Precision prec) {
             return log_csc_form(id_double(*p.n, *p.m), prec);
         }});

    add({"T5-d", "even zeta over Lucas-square-product power",
         "sum_{k>=1} zeta(2k)/(k (L_m^2 L_n^2)^k) = ln(pi/(L_{n+m} + (-1)^m "
         "L_{n-m})) + ln csc(pi/(L_{n+m} + (-1)^m L_{n-m}))",
         "n >= m >= 1 and L_m L_n >= 2", true, true, false,
         [](const ParamSet& p) -> Violation {
             if (auto v = need_mn(p, false))
                 return v;
             if (lucas(*p.m) * lucas(*p.n) < 2)
                 return "base>=2";
             return std::nullopt;
         },
         [](const ParamSet& p, Precision prec) {
             const SeqValue x = lucas(*p.m) * lucas(*p.n);
             return zeta_even_reciprocal(x * x, prec);
         },
         [](const ParamSet& p, Precision prec) {
             return log_csc_form(id_lucas_lucas(*p.n, *p.m), prec);
         }});

    add({"T5-e", "even zeta over five-scaled Fibonacci-square power",
         "sum_{k>=1} zeta(2k)/(25^k k (F_m^2 F_n^2)^k) = ln(pi/(L_{n+m} + "
         "(-1)^{m-1} L_{n-m})) + ln csc(pi/(L_{n+m} + (-1)^{m-1} L_{n-m}))",
         "n >= m >= 1", true, true, false,
         [](const ParamSet& p) { return need_mn(p, false); },
         [](const ParamSet& p, Precision prec) {
             const SeqValue x = 5 * fib(*p.m) * fib(*p.n);
             return zeta_even_reciprocal(x * x, prec);
         },
         [](const ParamSet& p, Precision prec) {
             return log_csc_form(id_five_fib(*p.n, *p.m), prec);
         }});

    add({"E21", "even zeta over fourth-power even Fibonacci",
         "sum_{k>=1} zeta(2k)/(k F_{2n}^{4k}) = ln(pi/F_{2n}^2) + ln "
         "csc(pi/F_{2n}^2)",
         "n >= 2", false, true, false,
         [](const ParamSet& p) { return need_n(p, 2); },
         [](const ParamSet& p, Precision prec) {
             const SeqValue f2 = fib(2 * *p.n) * fib(2 * *p.n);
             return zeta_even_reciprocal(f2 * f2, prec);
         },
         [](const ParamSet& p, Precision prec) {
             return log_csc_form(fib(2 * *p.n) * fib(2 * *p.n), prec);
         }});

    add({"E22", "even zeta over doubled even Fibonacci",
         "sum_{k>=1} zeta(2k)/(4^k k F_{2n}^{2k}) = ln(pi/(2 L_n F_n)) + ln "
         "csc(pi/(2 L_n F_n))",
         "n >= 1", false, true, false,
         [](const ParamSet& p) { return need_n(p, 1); },
         [](const ParamSet& p, Precision prec) {
             const SeqValue f = fib(2 * *p.n);
             return zeta_even_reciprocal(4 * f * f, prec);
         },
         [](const ParamSet& p, Precision prec) {
             return log_csc_form(2 * lucas(*p.n) * fib(*p.n), prec);
         }});

    add({"E23", "even zeta over split quadruple-Fibonacci power",
         "sum_{k>=1} zeta(2k)/(k (L_{2n} F_{2n})^{2k}) = ln(pi/F_{4n}) + ln "
         "csc(pi/F_{4n})",
         "n >= 1", false, true, false,
         [](const ParamSet& p) { return need_n(p, 1); },
         [](const ParamSet& p, Precision prec) {
             const SeqValue x = lucas(2 * *p.n) * fib(2 * *p.n);
             return zeta_even_reciprocal(x * x, prec);
         },
         [](const ParamSet& p, Precision prec) {
             return log_csc_form(fib(4 * *p.n), prec);
         }});

    // --- odd zeta over reciprocal powers --------------------------------------

    add({"T6", "odd zeta over doubled even Fibonacci, log-gamma pair form",
         "sum_{k>=1} zeta(2k+1)/((2k+1) 4^k F_{2n}^{2k}) = F_{2n} (lngamma((2 L_n "
         "F_n - 1)/(2 L_n F_n)) - lngamma((2 L_n F_n + 1)/(2 L_n F_n))) - gamma",
         "n >= 1", false, true, false,
         [](const ParamSet& p) { return need_n(p, 1); },
         [](const ParamSet& p, Precision prec) {
             const SeqValue f = fib(2 * *p.n);
             return zeta_odd_reciprocal(4 * f * f, prec);
         },
         [](const ParamSet& p, Precision prec) {
             const Real x = real_of(2 * lucas(*p.n) * fib(*p.n), prec);
             return real_of(fib(2 * *p.n), prec) *
                        (ln_gamma((x - 1) / x) - ln_gamma((x + 1) / x)) -
                    euler_gamma(prec);
         }});

    add({"E24", "odd zeta over powers of four",
         "sum_{k>=1} zeta(2k+1)/((2k+1) 4^k) = ln 2 - gamma", "no parameters",
         false, false, false, no_params,
         [](const ParamSet&, Precision prec) {
             return zeta_odd_reciprocal(SeqValue(4), prec);
         },
         [](const ParamSet&, Precision prec) {
             return const_ln2(prec) - euler_gamma(prec);
         }});

    // --- printed example evaluations ------------------------------------------

    auto add_ex1 = [&](const char* id, SeqValue (*seq)(long), long m, long num,
                       long den, long cnum, long cden) {
        add({id, "weighted even zeta example evaluation",
             "sum_{k>=1} (2k-1)(zeta(2k)-1) G_{2k+m+1} at fixed m, printed form",
             "no parameters", false, false, false, no_params,
             [seq, m](const ParamSet&, Precision prec) {
                 return t1_series(seq, m, prec);
             },
             [num, den, cnum, cden](const ParamSet&, Precision prec) {
                 const Real pi = const_pi(prec);
                 return Real::of_ratio(num, den, prec.working()) * pi * pi *
                            sec2_s5h(prec) -
                        Real::of_ratio(cnum, cden, prec.working());
             }});
    };
    add_ex1("EX1-F2", fib, 2, 5, 2, 8, 1);
    add_ex1("EX1-F3", fib, 3, 4, 1, 25, 2);
    add_ex1("EX1-L2", lucas, 2, 11, 2, 17, 1);
    add_ex1("EX1-L3", lucas, 3, 9, 1, 57, 2);

    add({"EX3-F0", "weighted odd zeta against even Fibonacci, printed form",
         "sum_{k>=1} (2k+1)(zeta(2k+1)-1) F_{2k} = (omega(0,beta) - "
         "omega(0,alpha)) / (2 sqrt5)",
         "no parameters", false, false, false, no_params,
         [](const ParamSet&, Precision prec) { return t3_series(fib, 0, prec); },
         [](const ParamSet&, Precision prec) {
             return (omega(0, golden_beta(prec)) - omega(0, golden_alpha(prec))) /
                    (2 * const_sqrt5(prec));
         }});

    add({"EX3-L0", "weighted odd zeta against even Lucas, printed form",
         "sum_{k>=1} (2k+1)(zeta(2k+1)-1) L_{2k} = 2(1-gamma) - (omega(0,alpha) + "
         "omega(0,beta)) / 2",
         "no parameters", false, false, false, no_params,
         [](const ParamSet&, Precision prec) { return t3_series(lucas, 0, prec); },
         [](const ParamSet&, Precision prec) {
             return 2 * (1 - euler_gamma(prec)) -
                    (omega(0, golden_alpha(prec)) + omega(0, golden_beta(prec))) / 2;
         }});

    return cat;
}

} // namespace

const std::vector<IdentityEntry>& catalog_entries() {
    static const std::vector<IdentityEntry> cat = make_catalog();
    return cat;
}

const IdentityEntry* find_entry(std::string_view id) {
    for (const auto& e : catalog_entries())
        if (e.id == id)
            return &e;
    return nullptr;
}

SeriesSpec build_lhs(const IdentityEntry& entry, const ParamSet& p, Precision prec) {
    if (auto violation = entry.domain_violation(p))
        throw DomainError(entry.id + ": parameter set violates " + *violation);
    return entry.lhs(p, prec);
}

Real build_rhs(const IdentityEntry& entry, const ParamSet& p, Precision prec) {
    if (auto violation = entry.domain_violation(p))
        throw DomainError(entry.id + ": parameter set violates " + *violation);
    return entry.rhs(p, prec);
}

} // namespace zetafib
