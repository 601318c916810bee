#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: series summed with plain loops, integer long division, and
// brute-force searches.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "polylad/bigreal.hpp"
#include "polylad/precision.hpp"

namespace oracles {

using polylad::BigReal;
using polylad::PrecisionContext;

// Decimal digits of p/q by scaled integer division: floor(10^digits * p / q),
// as a digit string without the decimal point.
inline std::string scaled_division_digits(long p, long q, int digits) {
    mpz_class num(p);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    num *= scale;
    mpz_class out = num / q;
    return out.get_str();
}

// ln via the atanh series: ln x = 2 * atanh((x-1)/(x+1)).
inline BigReal ln_atanh_series(const BigReal& x, const PrecisionContext& ctx) {
    PrecisionContext work(ctx.digits() + 10);
    BigReal one = BigReal::of(1L, work);
    BigReal t = (x - one) / (x + one);
    BigReal t2 = t * t;
    BigReal sum(work.bits());
    BigReal term = t;
    BigReal tol = BigReal::exp10i(-(work.total_digits()), work);
    for (long k = 0; ; ++k) {
        BigReal piece = term;
        piece.div_z(2 * k + 1);
        sum += piece;
        term *= t2;
        if (polylad::abs(term) < tol) break;
    }
    sum.mul_si(2);
    return sum;
}

// ln via repeated argument halving (sqrt) until close to 1, then the
// short atanh series on the tiny argument.
inline BigReal ln_halving(const BigReal& x, const PrecisionContext& ctx) {
    PrecisionContext work(ctx.digits() + 15);
    BigReal y(work.bits());
    mpfr_set(y.raw(), x.raw(), MPFR_RNDN);
    long halvings = 0;
    BigReal one = BigReal::of(1L, work);
    BigReal gap = BigReal::parse("0.0001", work);
    while (polylad::abs(y - one) > gap) {
        y = polylad::sqrt(y);
        ++halvings;
    }
    BigReal l = ln_atanh_series(y, work);
    for (long i = 0; i < halvings; ++i) l.mul_si(2);
    return l;
}

// Direct summation of sum 1/r^2 with the trigamma tail asymptotics
// psi'(R+1) = 1/z + 1/2z^2 + sum B_2k / z^(2k+1), z = R+1, so a short sum
// reaches ~38 correct digits.
inline BigReal basel_sum(const PrecisionContext& ctx) {
    PrecisionContext work(ctx.digits() + 10);
    long R = 1000;
    BigReal sum(work.bits());
    for (long r = 1; r <= R; ++r) {
        BigReal t = BigReal::of(1L, work);
        t.div_z(mpz_class(r) * r);
        sum += t;
    }
    mpz_class z(R + 1);
    auto zpow = [&](int k) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(k));
        return p;
    };
    auto term = [&](long num, long den, int k) {
        BigReal t = BigReal::of(mpq_class(num, den), work);
        t.div_z(zpow(k));
        return t;
    };
    sum += term(1, 1, 1);
    sum += term(1, 2, 2);
    sum += term(1, 6, 3);
    sum += term(-1, 30, 5);
    sum += term(1, 42, 7);
    sum += term(-1, 30, 9);
    sum += term(5, 66, 11);
    sum += term(-691, 2730, 13);
    return sum;
}

// Naive polylogarithm sum, term by term.
inline BigReal li_direct(const BigReal& y, long n, const PrecisionContext& ctx) {
    PrecisionContext work(ctx.digits() + 10);
    BigReal sum(work.bits());
    BigReal p(work.bits());
    mpfr_set(p.raw(), y.raw(), MPFR_RNDN);
    BigReal tol = BigReal::exp10i(-work.total_digits(), work);
    for (long r = 1; ; ++r) {
        BigReal term = p;
        mpz_class rn;
        mpz_ui_pow_ui(rn.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
        term.div_z(rn);
        sum += term;
        p *= y;
        if (polylad::abs(term) < tol && polylad::abs(p) < tol) break;
    }
    return sum;
}

// Partial sum of the zeta series (caller controls truncation honesty).
inline BigReal zeta_partial(long n, long terms, const PrecisionContext& ctx) {
    PrecisionContext work(ctx.digits() + 10);
    BigReal sum(work.bits());
    for (long r = 1; r <= terms; ++r) {
        BigReal t = BigReal::of(1L, work);
        mpz_class rn;
        mpz_ui_pow_ui(rn.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
        t.div_z(rn);
        sum += t;
    }
    return sum;
}

// Exhaustive integer-relation search over |c_i| <= bound (tiny instances).
// Returns true if some nonzero vector gets |sum c_i x_i| below tol.
inline bool brute_force_relation_exists(const std::vector<BigReal>& xs, long bound,
                                        const BigReal& tol) {
    size_t n = xs.size();
    std::vector<long> c(n, -bound);
    while (true) {
        bool all_zero = true;
        for (long v : c)
            if (v != 0) all_zero = false;
        if (!all_zero) {
            BigReal s(xs[0].prec_bits());
            for (size_t i = 0; i < n; ++i) {
                BigReal t = xs[i];
                t.mul_si(c[i]);
                s += t;
            }
            if (polylad::abs(s) < tol) return true;
        }
        size_t i = 0;
        while (i < n && c[i] == bound) {
            c[i] = -bound;
            ++i;
        }
        if (i == n) return false;
        c[i] += 1;
    }
}

// Deterministic light-weight RNG for property tests.
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 11;
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

} // namespace oracles
