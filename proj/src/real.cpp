#include "zetafib/real.hpp"

#include <map>
#include <mutex>

namespace zetafib {

Real Real::parse(const std::string& dec, long prec_bits) {
    Real r(prec_bits);
    const char* s = dec.c_str();
    char* end = nullptr;
    mpfr_strtofr(r.v_, s, &end, 10, MPFR_RNDN);
    if (end == s || *end != '\0')
        throw DomainError("Real::parse: not a decimal number: '" + dec + "'");
    return r;
}

std::string Real::to_string(int sig_digits) const {
    if (sig_digits < 2)
        sig_digits = 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", sig_digits - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

namespace {

enum class ConstKind { pi, sqrt5, alpha, beta, ln2 };

void compute_const(ConstKind kind, mpfr_ptr out) {
    switch (kind) {
    case ConstKind::pi:
        mpfr_const_pi(out, MPFR_RNDN);
        break;
    case ConstKind::sqrt5:
        mpfr_sqrt_ui(out, 5, MPFR_RNDN);
        break;
    case ConstKind::alpha:
        mpfr_sqrt_ui(out, 5, MPFR_RNDN);
        mpfr_add_ui(out, out, 1, MPFR_RNDN);
        mpfr_div_2ui(out, out, 1, MPFR_RNDN);
        break;
    case ConstKind::beta:
        mpfr_sqrt_ui(out, 5, MPFR_RNDN);
        mpfr_ui_sub(out, 1, out, MPFR_RNDN);
        mpfr_div_2ui(out, out, 1, MPFR_RNDN);
        break;
    case ConstKind::ln2:
        mpfr_const_log2(out, MPFR_RNDN);
        break;
    }
}

Real cached_const(ConstKind kind, long wp) {
    static std::mutex mu;
    static std::map<std::pair<int, long>, Real> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), wp);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Real v(wp);
        compute_const(kind, v.raw());
        it = cache.emplace(key, std::move(v)).first;
    }
    return it->second;
}

} // namespace

Real const_pi(Precision prec) { return cached_const(ConstKind::pi, prec.working()); }
Real const_sqrt5(Precision prec) { return cached_const(ConstKind::sqrt5, prec.working()); }
Real golden_alpha(Precision prec) { return cached_const(ConstKind::alpha, prec.working()); }
Real golden_beta(Precision prec) { return cached_const(ConstKind::beta, prec.working()); }
Real const_ln2(Precision prec) { return cached_const(ConstKind::ln2, prec.working()); }

} // namespace zetafib
