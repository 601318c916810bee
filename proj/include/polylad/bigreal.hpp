#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "polylad/precision.hpp"

namespace polylad {

/// Arbitrary-precision real number. Values are immutable in spirit: all
/// public operations return fresh values, rounding to nearest at every step.
/// Binary operators work at the finer of the two operand precisions so that
/// guard digits survive intermediate expressions; comparisons use the coarser
/// context of the two operands.
class BigReal {
  public:
    explicit BigReal(const PrecisionContext& ctx) { mpfr_init2(v_, ctx.bits()); mpfr_set_zero(v_, 1); }
    explicit BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal of(long n, const PrecisionContext& ctx) {
        BigReal r(ctx);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static BigReal of(const mpz_class& n, const PrecisionContext& ctx) {
        BigReal r(ctx);
        mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigReal of(const mpq_class& q, const PrecisionContext& ctx) {
        BigReal r(ctx);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigReal parse(const std::string& s, const PrecisionContext& ctx);

    /// 10^e at context precision.
    static BigReal exp10i(long e, const PrecisionContext& ctx);

    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal string with `digits` significant digits, truncated towards
    /// zero (prefix-stable across precision increases for values carrying
    /// guard digits).
    std::string to_decimal(int digits) const;

    /// Nearest integer / floor as exact integers.
    mpz_class round_z() const;
    mpz_class floor_z() const;

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(joint(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(joint(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(joint(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    BigReal operator-() const {
        BigReal r(prec_bits());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

    BigReal& mul_si(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
    BigReal& div_z(const mpz_class& z) { mpfr_div_z(v_, v_, z.get_mpz_t(), MPFR_RNDN); return *this; }
    BigReal& mul_z(const mpz_class& z) { mpfr_mul_z(v_, v_, z.get_mpz_t(), MPFR_RNDN); return *this; }
    /// this -= t*b, one rounding per step.
    BigReal& submul_z(const mpz_class& t, const BigReal& b);

    /// Exact comparison of the underlying values rounded to the coarser of
    /// the two precisions.
    static int cmp(const BigReal& a, const BigReal& b);
    friend bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }

  private:
    static mpfr_prec_t joint(const BigReal& a, const BigReal& b) {
        return std::max(a.prec_bits(), b.prec_bits());
    }
    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal ln(const BigReal& x);
/// log(1 + x), accurate near zero.
BigReal ln1p(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal pow_int(const BigReal& x, long n);

/// pi at context precision (MPFR's builtin algorithm).
BigReal pi(const PrecisionContext& ctx);
/// pi by Machin's arctangent sum; independent of pi() and cross-checked
/// against it.
BigReal pi_machin(const PrecisionContext& ctx);

} // namespace polylad
