#include <doctest.h>

#include <cmath>

#include "zetafib/sequences.hpp"

using namespace zetafib;

namespace {

// Independent oracle: plain recurrence, signed indices handled directly
// by running the recurrence in both directions.
SeqValue naive_fib(long n) {
    if (n >= 0) {
        SeqValue a = 0, b = 1;
        for (long i = 0; i < n; ++i) {
            SeqValue c = a + b;
            a = b;
            b = c;
        }
        return a;
    }
    // F_{n} = F_{n+2} - F_{n+1} walking downwards
    SeqValue a = 0, b = 1; // F_0, F_1
    for (long i = 0; i > n; --i) {
        SeqValue c = b - a; // F_{i-1}
        b = a;
        a = c;
    }
    return a;
}

SeqValue naive_lucas(long n) {
    if (n >= 0) {
        SeqValue a = 2, b = 1;
        for (long i = 0; i < n; ++i) {
            SeqValue c = a + b;
            a = b;
            b = c;
        }
        return a;
    }
    SeqValue a = 2, b = 1;
    for (long i = 0; i > n; --i) {
        SeqValue c = b - a;
        b = a;
        a = c;
    }
    return a;
}

} // namespace

TEST_CASE("initial values and spot checks") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(-4) == -3);
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(8) == 47);
    CHECK(lucas(-3) == -4);
}

TEST_CASE("fast doubling agrees with the naive recurrence for |n| <= 90") {
    for (long n = -90; n <= 90; ++n) {
        CHECK(fib(n) == naive_fib(n));
        CHECK(lucas(n) == naive_lucas(n));
    }
}

TEST_CASE("recurrence holds across the signed range |n| <= 200") {
    for (long n = -198; n <= 198; ++n) {
        CHECK(fib(n + 2) == fib(n + 1) + fib(n));
        CHECK(lucas(n + 2) == lucas(n + 1) + lucas(n));
    }
}

TEST_CASE("negative-index laws for m <= 100") {
    for (long m = 1; m <= 100; ++m) {
        const SeqValue sf = (m % 2 == 1) ? fib(m) : SeqValue(-fib(m));
        const SeqValue sl = (m % 2 == 0) ? lucas(m) : SeqValue(-lucas(m));
        CHECK(fib(-m) == sf);
        CHECK(lucas(-m) == sl);
    }
}

TEST_CASE("doubling reaches large indices exactly") {
    // F_{2n} = F_n (2 F_{n+1} - F_n) probed at a few sizes
    for (long n : {100L, 333L, 1000L}) {
        CHECK(fib(2 * n) == fib(n) * (2 * fib(n + 1) - fib(n)));
        CHECK(lucas(n) == fib(n - 1) + fib(n + 1));
    }
}

TEST_CASE("Binet formulas round to the exact values") {
    const Precision prec(128);
    const double log2_alpha = std::log2((1.0 + std::sqrt(5.0)) / 2.0);
    for (long n = -100; n <= 100; ++n) {
        const long slack = static_cast<long>(std::ceil(std::abs(n) * log2_alpha)) + 16;
        const Real bound = Real::two_pow(-prec.bits + slack, prec.working());
        CHECK(abs(binet_fib(n, prec) - Real::from_mpz(fib(n), prec.working())) < bound);
        CHECK(abs(binet_lucas(n, prec) - Real::from_mpz(lucas(n), prec.working())) < bound);
    }
    CHECK(abs(binet_fib(0, prec)) < Real::two_pow(-100, 128));
    CHECK(abs(binet_fib(7, prec) - 13) < Real::two_pow(-prec.bits + 8, 192));
    CHECK(abs(binet_fib(-5, prec) - 5) < Real::two_pow(-100, 128));
    CHECK(abs(binet_lucas(6, prec) - 18) < Real::two_pow(-100, 128));
    CHECK(abs(binet_lucas(-2, prec) - 3) < Real::two_pow(-100, 128));
}

TEST_CASE("product identities, exact, over 1 <= m <= n <= 60") {
    for (long n = 1; n <= 60; ++n) {
        for (long m = 1; m <= n; ++m) {
            if (n > m)
                CHECK(id_catalan_like(n, m) == fib(n - m) * fib(n + m));
            CHECK(id_lucas_fib(n, m) == lucas(m) * fib(n));
            CHECK(id_double(n, m) == 2 * fib(n + m));
            CHECK(id_lucas_lucas(n, m) == lucas(m) * lucas(n));
            CHECK(id_five_fib(n, m) == 5 * fib(m) * fib(n));
        }
    }
}

TEST_CASE("identity spot values") {
    CHECK(id_catalan_like(5, 2) == 26);
    CHECK(id_catalan_like(2, 1) == 2);
    CHECK(id_lucas_fib(4, 2) == 9);
    CHECK(id_lucas_fib(1, 1) == 1);
    CHECK(id_double(3, 2) == 10);
    CHECK(id_double(1, 1) == 2);
    CHECK(id_double(5, 5) == 110);
    CHECK(id_lucas_lucas(3, 1) == 4);
    CHECK(id_lucas_lucas(2, 2) == 9);
    CHECK(id_five_fib(2, 1) == 5);
    CHECK(id_five_fib(2, 2) == 5);
    CHECK(id_five_fib(4, 1) == 15);
}

TEST_CASE("identity preconditions reject out-of-domain indices") {
    CHECK_THROWS_AS(id_catalan_like(3, 3), DomainError);
    CHECK_THROWS_AS(id_lucas_fib(1, 2), DomainError);
    CHECK_THROWS_AS(id_lucas_lucas(1, 3), DomainError);
    CHECK_THROWS_AS(id_five_fib(1, 2), DomainError);
    CHECK_THROWS_AS(id_double(0, 1), DomainError);
}
