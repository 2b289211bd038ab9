#include "zetafib/sequences.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "zetafib/errors.hpp"

namespace zetafib {

namespace {

// F_k and F_{k+1} for k >= 0 by binary fast doubling:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
void fib_pair(unsigned long k, mpz_class& fk, mpz_class& fk1) {
    fk = 0;
    fk1 = 1;
    if (k == 0)
        return;
    int top = 63;
    while (top > 0 && ((k >> top) & 1UL) == 0)
        --top;
    mpz_class a, b;
    for (int i = top; i >= 0; --i) {
        // (fk, fk1) = (F_j, F_{j+1}) -> (F_{2j}, F_{2j+1})
        a = fk1 * 2 - fk;
        a *= fk;
        b = fk * fk + fk1 * fk1;
        if ((k >> i) & 1UL) {
            fk = b;
            fk1 = a + b;
        } else {
            fk = a;
            fk1 = b;
        }
    }
}

mpz_class fib_nonneg(unsigned long n) {
    if (n <= 64) {
        mpz_class a = 0, b = 1;
        for (unsigned long i = 0; i < n; ++i) {
            mpz_class c = a + b;
            a = b;
            b = c;
        }
        return a;
    }
    mpz_class fk, fk1;
    fib_pair(n, fk, fk1);
    return fk;
}

mpz_class lucas_nonneg(unsigned long n) {
    // L_n = 2 F_{n+1} - F_n, reusing the doubling kernel.
    if (n <= 64) {
        mpz_class a = 2, b = 1;
        for (unsigned long i = 0; i < n; ++i) {
            mpz_class c = a + b;
            a = b;
            b = c;
        }
        return a;
    }
    mpz_class fk, fk1;
    fib_pair(n, fk, fk1);
    return fk1 * 2 - fk;
}

// Series term generators walk indices repeatedly; memoize the exact values.
template <mpz_class (*Compute)(unsigned long)>
mpz_class memoized(unsigned long n) {
    static std::shared_mutex mu;
    static std::map<unsigned long, mpz_class> table;
    {
        std::shared_lock lock(mu);
        auto it = table.find(n);
        if (it != table.end())
            return it->second;
    }
    mpz_class v = Compute(n);
    std::unique_lock lock(mu);
    return table.emplace(n, std::move(v)).first->second;
}

} // namespace

SeqValue fib(long n) {
    if (n >= 0)
        return memoized<fib_nonneg>(static_cast<unsigned long>(n));
    unsigned long m = static_cast<unsigned long>(-n);
    SeqValue v = memoized<fib_nonneg>(m);
    return (m % 2 == 1) ? v : SeqValue(-v);
}

SeqValue lucas(long n) {
    if (n >= 0)
        return memoized<lucas_nonneg>(static_cast<unsigned long>(n));
    unsigned long m = static_cast<unsigned long>(-n);
    SeqValue v = memoized<lucas_nonneg>(m);
    return (m % 2 == 0) ? v : SeqValue(-v);
}

Real binet_fib(long n, Precision prec) {
    const Real a = golden_alpha(prec);
    const Real b = golden_beta(prec);
    return (pow_si(a, n) - pow_si(b, n)) / (a - b);
}

Real binet_lucas(long n, Precision prec) {
    return pow_si(golden_alpha(prec), n) + pow_si(golden_beta(prec), n);
}

namespace {
long parity_sign(long m) { return (m % 2 == 0) ? 1 : -1; }
}

SeqValue id_catalan_like(long n, long m) {
    if (!(n > m && m >= 1))
        throw DomainError("id_catalan_like: requires n > m >= 1");
    SeqValue fn = fib(n), fm = fib(m);
    return fn * fn + parity_sign(n + m - 1) * fm * fm;
}

SeqValue id_lucas_fib(long n, long m) {
    if (!(n >= m && m >= 1))
        throw DomainError("id_lucas_fib: requires n >= m >= 1");
    return fib(n + m) + parity_sign(m) * fib(n - m);
}

SeqValue id_double(long n, long m) {
    if (!(n >= 1 && m >= 1))
        throw DomainError("id_double: requires n, m >= 1");
    return lucas(n) * fib(m) + fib(n) * lucas(m);
}

SeqValue id_lucas_lucas(long n, long m) {
    if (!(n >= m && m >= 1))
        throw DomainError("id_lucas_lucas: requires n >= m >= 1");
    return lucas(n + m) + parity_sign(m) * lucas(n - m);
}

SeqValue id_five_fib(long n, long m) {
    if (!(n >= m && m >= 1))
        throw DomainError("id_five_fib: requires n >= m >= 1");
    return lucas(n + m) - parity_sign(m) * lucas(n - m);
}

} // namespace zetafib
