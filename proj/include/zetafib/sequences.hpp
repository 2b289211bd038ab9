#pragma once

#include <gmpxx.h>

#include "zetafib/real.hpp"

namespace zetafib {

/// Exact big-integer sequence value (never rounded).
using SeqValue = mpz_class;

/// F_n for any signed n. Fast doubling above |n| = 64, iteration below;
/// negative indices by the reflection law F_{-m} = (-1)^{m-1} F_m.
SeqValue fib(long n);

/// L_n for any signed n; L_{-m} = (-1)^m L_m.
SeqValue lucas(long n);

/// (alpha^n - beta^n) / (alpha - beta); rounds to fib(n). Cross-check path.
Real binet_fib(long n, Precision prec);

/// alpha^n + beta^n; rounds to lucas(n). Cross-check path.
Real binet_lucas(long n, Precision prec);

// Product/sum identities used as series denominators. Each returns the exact
// left-hand combination; the factored right side is what the series code
// actually wants, and the two agree exactly (covered by the identity suite).

/// F_n^2 + (-1)^{n+m-1} F_m^2  ( = F_{n-m} F_{n+m} ), n > m >= 1.
SeqValue id_catalan_like(long n, long m);

/// F_{n+m} + (-1)^m F_{n-m}  ( = L_m F_n ), n >= m >= 1.
SeqValue id_lucas_fib(long n, long m);

/// L_n F_m + F_n L_m  ( = 2 F_{n+m} ), n, m >= 1.
SeqValue id_double(long n, long m);

/// L_{n+m} + (-1)^m L_{n-m}  ( = L_m L_n ), n >= m >= 1.
SeqValue id_lucas_lucas(long n, long m);

/// L_{n+m} + (-1)^{m-1} L_{n-m}  ( = 5 F_m F_n ), n >= m >= 1.
SeqValue id_five_fib(long n, long m);

} // namespace zetafib
