#include "polylad/intpoly.hpp"

#include <functional>
#include <mutex>
#include <sstream>

#include "polylad/error.hpp"
#include "polylad/factor.hpp"
#include "polylad/ntutil.hpp"

namespace polylad {

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

IntPoly::IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPoly IntPoly::x_pow(long k) {
    IntPoly p;
    p.c_.assign(static_cast<size_t>(k) + 1, 0);
    p.c_.back() = 1;
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::lc() const {
    if (is_zero()) throw domain_error("lc of zero polynomial");
    return c_.back();
}

const mpz_class& IntPoly::coeff(long i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::mul_z(const mpz_class& s) const {
    if (s == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& v : r.c_) v *= s;
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw domain_error("division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw domain_error("divexact: degree underflow");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quot(static_cast<size_t>(degree() - d.degree()) + 1, 0);
    for (long i = degree(); i >= d.degree(); --i) {
        mpz_class& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.lc().get_mpz_t());
        if (r != 0) throw domain_error("divexact: inexact division");
        quot[static_cast<size_t>(i - d.degree())] = q;
        for (long j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(i - d.degree() + j)] -= q * d.coeff(j);
    }
    for (const auto& v : rem)
        if (v != 0) throw domain_error("divexact: nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::mod_monic(const IntPoly& d) const {
    if (!d.is_monic()) throw domain_error("mod_monic requires a monic divisor");
    if (degree() < d.degree()) return *this;
    std::vector<mpz_class> rem = c_;
    for (long i = degree(); i >= d.degree(); --i) {
        mpz_class q = rem[static_cast<size_t>(i)];
        if (q == 0) continue;
        for (long j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(i - d.degree() + j)] -= q * d.coeff(j);
    }
    rem.resize(static_cast<size_t>(d.degree()));
    return IntPoly(std::move(rem));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<mpz_class> r(static_cast<size_t>(degree()));
    for (long i = 1; i <= degree(); ++i) r[static_cast<size_t>(i - 1)] = c_[static_cast<size_t>(i)] * i;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reverse() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_xk(long k) const {
    if (k < 1) throw domain_error("compose_xk requires k >= 1");
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> r(static_cast<size_t>(degree() * k) + 1, 0);
    for (long i = 0; i <= degree(); ++i) r[static_cast<size_t>(i * k)] = c_[static_cast<size_t>(i)];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::negate_x() const {
    IntPoly r(*this);
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    if (lc() < 0) g = -g;
    IntPoly r(*this);
    for (auto& v : r.c_) v /= g;
    return r;
}

mpz_class IntPoly::eval_z(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval_q(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

BigReal IntPoly::eval_r(const BigReal& x) const {
    BigReal acc(x.prec_bits());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        BigReal t(x.prec_bits());
        mpfr_set_z(t.raw(), it->get_mpz_t(), MPFR_RNDN);
        acc += t;
    }
    return acc;
}

mpz_class IntPoly::one_norm() const {
    mpz_class s = 0;
    for (const auto& v : c_) s += abs(v);
    return s;
}

bool IntPoly::is_reciprocal() const {
    if (is_zero()) return false;
    long d = degree();
    for (long i = 0; 2 * i <= d; ++i)
        if (c_[static_cast<size_t>(i)] != c_[static_cast<size_t>(d - i)]) return false;
    return true;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const mpz_class& v = c_[static_cast<size_t>(i)];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        mpz_class a = abs(v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
    long da = a.degree(), db = b.degree();
    if (da < db) throw domain_error("prem: degree underflow");
    const mpz_class& l = b.lc();
    std::vector<mpz_class> r = a.coeffs();
    for (long i = da; i >= db; --i) {
        mpz_class top = r[static_cast<size_t>(i)];
        for (auto& v : r) v *= l;
        for (long j = 0; j <= db; ++j)
            r[static_cast<size_t>(i - db + j)] -= top * b.coeff(j);
    }
    r.resize(static_cast<size_t>(db));
    return IntPoly(std::move(r));
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPoly R = prem(A, B);
        A = B;
        B = R.is_zero() ? R : R.primitive_part();
    }
    return A;
}

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0) return pow_z(a.coeff(0), static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return pow_z(b.coeff(0), static_cast<unsigned long>(a.degree()));
    IntPoly A = a, B = b;
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2) == 1 && (B.degree() % 2) == 1) s = -s;
        std::swap(A, B);
    }
    // Signed contents: primitive parts get positive leading coefficients.
    mpz_class ca = A.content() * (A.lc() < 0 ? -1 : 1);
    mpz_class cb = B.content() * (B.lc() < 0 ? -1 : 1);
    mpz_class mult = pow_z(ca, static_cast<unsigned long>(B.degree())) *
                     pow_z(cb, static_cast<unsigned long>(A.degree()));
    A = A.primitive_part();
    B = B.primitive_part();
    mpz_class g = 1, h = 1;
    while (true) {
        long da = A.degree(), db = B.degree();
        long delta = da - db;
        if ((da % 2) == 1 && (db % 2) == 1) s = -s;
        IntPoly R = prem(A, B);
        if (R.is_zero()) return 0; // common factor
        mpz_class div = g * pow_z(h, static_cast<unsigned long>(delta));
        std::vector<mpz_class> rc = R.coeffs();
        for (auto& v : rc) {
            mpz_class q, rr;
            mpz_fdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
            if (rr != 0) throw domain_error("resultant: subresultant division not exact");
            v = q;
        }
        A = B;
        B = IntPoly(std::move(rc));
        g = A.lc();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            mpz_class num = pow_z(g, static_cast<unsigned long>(delta));
            mpz_class den = pow_z(h, static_cast<unsigned long>(delta - 1));
            mpz_class q, rr;
            mpz_fdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rr != 0) throw domain_error("resultant: h update not exact");
            h = q;
        }
        if (B.degree() == 0) {
            long dA = A.degree();
            mpz_class t = pow_z(B.coeff(0), static_cast<unsigned long>(dA));
            mpz_class den = pow_z(h, static_cast<unsigned long>(dA - 1));
            mpz_class q, rr;
            mpz_fdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
            if (rr != 0) throw domain_error("resultant: final division not exact");
            return mult * s * q;
        }
    }
}

const IntPoly& cyclotomic(long k) {
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    if (k < 1) throw domain_error("cyclotomic requires k >= 1");
    std::lock_guard<std::mutex> lock(mu);
    std::function<const IntPoly&(long)> get = [&](long m) -> const IntPoly& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        IntPoly phi;
        if (m == 1) {
            phi = IntPoly{-1, 1};
        } else {
            long p = prime_factors(m).front();
            long q = m / p;
            if (q % p == 0)
                phi = get(q).compose_xk(p);
            else
                phi = get(q).compose_xk(p).divexact(get(q));
        }
        auto [pos, inserted] = cache.emplace(m, std::move(phi));
        (void)inserted;
        return pos->second;
    };
    return get(k);
}

IntPoly reduce_mod(const IntPoly& p_min, const IntPoly& expr) {
    if (!p_min.is_monic() || p_min.degree() < 1)
        throw domain_error("reduce_mod requires a monic divisor of degree >= 1");
    return expr.mod_monic(p_min);
}

void RatExpVec::set(long j, const Rational& v) {
    if (j < 1) throw domain_error("RatExpVec indices must be >= 1");
    if (v == 0)
        entries.erase(j);
    else
        entries[j] = v;
}

const Rational& RatExpVec::at(long j) const {
    static const Rational zero(0);
    auto it = entries.find(j);
    return it == entries.end() ? zero : it->second;
}

mpz_class RatExpVec::common_denominator() const {
    mpz_class d = a0.get_den();
    for (const auto& [j, v] : entries) d = lcm_z(d, v.get_den());
    return d;
}

namespace {

IntPoly pow_mod(const IntPoly& base, unsigned long e, const IntPoly& p_min) {
    IntPoly acc = IntPoly::constant(1);
    IntPoly b = base.mod_monic(p_min);
    while (e > 0) {
        if (e & 1) acc = (acc * b).mod_monic(p_min);
        b = (b * b).mod_monic(p_min);
        e >>= 1;
    }
    return acc;
}

unsigned long exponent_ui(const mpz_class& e) {
    mpz_class a = abs(e);
    if (a > 1'000'000) throw domain_error("cyclotomic identity exponent out of range");
    return mpz_get_ui(a.get_mpz_t());
}

} // namespace

IdentityCheck verify_cyclotomic_identity(const IntPoly& p_min, const RatExpVec& rel, long k) {
    IdentityCheck out;
    if (rel.entries.empty() && rel.a0 == 0) {
        // Empty vector: the degenerate identity Phi_k = Phi_k.
        out.ok = true;
        return out;
    }
    mpz_class D = rel.common_denominator();
    IntPoly lhs = pow_mod(cyclotomic(k), exponent_ui(D), p_min);
    IntPoly rhs = IntPoly::constant(1);
    for (const auto& [j, v] : rel.entries) {
        mpz_class e = v.get_num() * (D / v.get_den());
        IntPoly f = pow_mod(cyclotomic(j), exponent_ui(e), p_min);
        if (e > 0)
            rhs = (rhs * f).mod_monic(p_min);
        else if (e < 0)
            lhs = (lhs * f).mod_monic(p_min);
    }
    mpz_class e0 = rel.a0.get_num() * (D / rel.a0.get_den());
    if (e0 != 0) {
        IntPoly f = pow_mod(IntPoly::x_pow(1), exponent_ui(e0), p_min);
        if (e0 > 0)
            rhs = (rhs * f).mod_monic(p_min);
        else
            lhs = (lhs * f).mod_monic(p_min);
    }
    out.residual = reduce_mod(p_min, lhs - rhs);
    out.ok = out.residual.is_zero();
    return out;
}

NormRecord norm(const IntPoly& p, long k, long rho_budget) {
    NormCalculator calc(p, rho_budget);
    return calc.record(k);
}

NormCalculator::NormCalculator(const IntPoly& p, long rho_budget)
    : p_(p), rho_budget_(rho_budget) {
    if (!p_.is_monic() || p_.degree() < 1)
        throw domain_error("norms require a monic polynomial of degree >= 1");
}

IntPoly NormCalculator::x_pow_mod(long k) {
    auto it = xk_mod_.find(k);
    if (it != xk_mod_.end()) return it->second;
    IntPoly r;
    if (k == 0) {
        r = IntPoly::constant(1);
    } else if (k == 1) {
        r = IntPoly::x_pow(1).mod_monic(p_);
    } else {
        IntPoly half = x_pow_mod(k / 2);
        r = (half * half).mod_monic(p_);
        if (k % 2 == 1) r = (r * x_pow_mod(1)).mod_monic(p_);
    }
    xk_mod_.emplace(k, r);
    return r;
}

mpz_class NormCalculator::power_norm(long k) {
    IntPoly q = x_pow_mod(k) - IntPoly::constant(1);
    if (q.is_zero()) throw domain_error("power_norm: x^k = 1 in the field");
    return resultant(p_, q);
}

const NormRecord& NormCalculator::record(long k) {
    auto it = records_.find(k);
    if (it != records_.end()) return it->second;
    // N_k = resultant(P, x^k - 1) / prod_{j|k, j<k} N_j, exactly.
    mpz_class value = power_norm(k);
    for (long j : divisors(k)) {
        if (j == k) continue;
        const NormRecord& nj = record(j);
        if (nj.value == 0) throw domain_error("field polynomial has a cyclotomic factor");
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), nj.value.get_mpz_t());
        if (r != 0) throw domain_error("norm: divisor norm does not divide the power norm");
        value = q;
    }
    NormRecord rec;
    rec.k = k;
    rec.value = value;
    mpz_class m = abs(value);
    if (m > 1) {
        for (const auto& p : known_primes_) {
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                rec.factors[p] += 1;
                m /= p;
            }
            if (m == 1) break;
        }
        if (m > 1) {
            FactorResult fr = factorize(m, rho_budget_);
            for (const auto& [p, e] : fr.primes) {
                rec.factors[p] += e;
                known_primes_.push_back(p);
            }
            rec.cofactor = fr.cofactor;
        }
    }
    if (rec.cofactor == 1)
        rec.cofactor_class = NormRecord::Cofactor::unit;
    else if (is_probable_prime(rec.cofactor))
        rec.cofactor_class = NormRecord::Cofactor::probable_prime;
    else
        rec.cofactor_class = NormRecord::Cofactor::composite_unfactored;
    auto [pos, inserted] = records_.emplace(k, std::move(rec));
    (void)inserted;
    return pos->second;
}

} // namespace polylad
