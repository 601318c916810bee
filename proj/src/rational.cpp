#include "polylad/rational.hpp"

#include "polylad/error.hpp"

namespace polylad {

Rational rational_of(long num, long den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw domain_error("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::optional<Rational> rationalize(const BigReal& x, const mpz_class& den_bound,
                                    const PrecisionContext& ctx) {
    if (den_bound < 1) throw domain_error("rationalize: den_bound must be >= 1");
    // Convergents p/q of the continued fraction of x, walked until the
    // denominator bound is exceeded. The fraction-part inversion stops once
    // the remainder is below the context's noise floor, which makes inputs
    // that are exact rationals terminate with an exact convergent.
    BigReal window = BigReal::exp10i(-(ctx.digits() / 2), ctx);
    BigReal noise = BigReal::exp10i(-(ctx.digits() + ctx.guard() - 4), ctx);
    mpz_class p_prev(1), q_prev(0);
    mpz_class p(0), q(1); // starts as floor convergent after first step
    BigReal t(ctx);
    mpfr_set(t.raw(), x.raw(), MPFR_RNDN);
    bool first = true;
    for (int iter = 0; iter < ctx.digits() + 64; ++iter) {
        mpz_class a = t.floor_z();
        if (first) {
            p = a;
            q = 1;
            first = false;
        } else {
            mpz_class pn = a * p + p_prev;
            mpz_class qn = a * q + q_prev;
            if (qn > den_bound) break;
            p_prev = p;
            q_prev = q;
            p = pn;
            q = qn;
        }
        BigReal frac = t - BigReal::of(mpz_class(a), ctx);
        if (abs(frac) < noise) break; // exact at this precision
        t = BigReal::of(1L, ctx) / frac;
    }
    Rational cand(p, q);
    cand.canonicalize();
    BigReal err = abs(x - BigReal::of(cand, ctx));
    if (err < window) return cand;
    return std::nullopt;
}

} // namespace polylad
