#include "polylad/bigreal.hpp"

#include <cstring>
#include <vector>

#include "polylad/error.hpp"

namespace polylad {

BigReal BigReal::parse(const std::string& s, const PrecisionContext& ctx) {
    BigReal r(ctx);
    if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("BigReal::parse: bad numeral '" + s + "'");
    return r;
}

BigReal BigReal::exp10i(long e, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    BigReal r(BigReal::joint(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::submul_z(const mpz_class& t, const BigReal& b) {
    BigReal tmp(std::max(prec_bits(), b.prec_bits()));
    mpfr_mul_z(tmp.v_, b.v_, t.get_mpz_t(), MPFR_RNDN);
    mpfr_sub(v_, v_, tmp.v_, MPFR_RNDN);
    return *this;
}

int BigReal::cmp(const BigReal& a, const BigReal& b) {
    mpfr_prec_t p = std::min(a.prec_bits(), b.prec_bits());
    if (a.prec_bits() == b.prec_bits()) return mpfr_cmp(a.v_, b.v_);
    mpfr_t ra, rb;
    mpfr_init2(ra, p);
    mpfr_init2(rb, p);
    mpfr_set(ra, a.v_, MPFR_RNDN);
    mpfr_set(rb, b.v_, MPFR_RNDN);
    int c = mpfr_cmp(ra, rb);
    mpfr_clear(ra);
    mpfr_clear(rb);
    return c;
}

mpz_class BigReal::round_z() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

mpz_class BigReal::floor_z() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

std::string BigReal::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) throw domain_error("to_decimal: non-finite value");
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDZ);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string out;
    // e is the decimal exponent with the point before the first digit.
    if (e > 0 && e <= digits + 6) {
        if (static_cast<size_t>(e) >= mant.size())
            out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
        else
            out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -6) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(e - 1));
    }
    size_t dot = out.find('.');
    if (dot != std::string::npos && out.find('e') == std::string::npos &&
        out.find_first_not_of('0', dot + 1) == std::string::npos) {
        out.erase(dot); // integer-valued: drop the all-zero fraction
    }
    return neg ? "-" + out : out;
}

BigReal abs(const BigReal& x) {
    BigReal r(x.prec_bits());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal ln(const BigReal& x) {
    if (x.sign() <= 0) throw domain_error("ln requires x > 0");
    BigReal r(x.prec_bits());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal ln1p(const BigReal& x) {
    BigReal r(x.prec_bits());
    if (mpfr_cmp_si(x.raw(), -1) <= 0) throw domain_error("ln1p requires x > -1");
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal exp(const BigReal& x) {
    BigReal r(x.prec_bits());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw domain_error("sqrt requires x >= 0");
    BigReal r(x.prec_bits());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal pow_int(const BigReal& x, long n) {
    BigReal r(x.prec_bits());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

BigReal pi(const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

namespace {

// arctan(1/m) as an alternating series, summed at working precision.
BigReal arctan_inv(unsigned long m, mpfr_prec_t bits, long dec_digits) {
    BigReal sum(bits), term(bits), m2(bits);
    mpfr_set_ui(m2.raw(), m, MPFR_RNDN);
    mpfr_ui_div(term.raw(), 1, m2.raw(), MPFR_RNDN); // 1/m
    mpfr_mul(m2.raw(), m2.raw(), m2.raw(), MPFR_RNDN); // m^2
    BigReal piece(bits);
    long k = 0;
    // |term| < 10^-(digits) stops the sum; the tail is smaller than the
    // first omitted term.
    BigReal tol = BigReal::exp10i(-(dec_digits + 5), PrecisionContext(10, 0));
    while (true) {
        mpfr_div_si(piece.raw(), term.raw(), 2 * k + 1, MPFR_RNDN);
        if (k % 2 == 0)
            mpfr_add(sum.raw(), sum.raw(), piece.raw(), MPFR_RNDN);
        else
            mpfr_sub(sum.raw(), sum.raw(), piece.raw(), MPFR_RNDN);
        mpfr_div(term.raw(), term.raw(), m2.raw(), MPFR_RNDN);
        ++k;
        if (mpfr_cmpabs(term.raw(), tol.raw()) < 0) break;
    }
    return sum;
}

} // namespace

BigReal pi_machin(const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits() + 32;
    BigReal a = arctan_inv(5, bits, ctx.total_digits());
    BigReal b = arctan_inv(239, bits, ctx.total_digits());
    a.mul_si(16);
    b.mul_si(4);
    BigReal r(ctx);
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

} // namespace polylad
