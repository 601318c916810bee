#include "polylad/polyeval.hpp"

#include <cmath>
#include <mutex>

#include "polylad/error.hpp"
#include "polylad/ntutil.hpp"

namespace polylad {

BigReal li_n(const BigReal& y, long n, const PrecisionContext& ctx) {
    if (n < 1) throw domain_error("li_n requires n >= 1");
    PrecisionContext work(ctx.digits(), ctx.guard() + 10);
    if (mpfr_cmp_si(y.raw(), 1) == 0) {
        if (n < 2) throw domain_error("li_n: y = 1 needs n >= 2");
        return zeta(n, ctx);
    }
    BigReal ay = abs(y);
    if (mpfr_cmp_si(ay.raw(), 1) >= 0) throw domain_error("li_n requires |y| < 1");
    if (y.is_zero()) return BigReal::of(0L, ctx);
    BigReal sum(work.bits());
    BigReal power(work.bits());
    mpfr_set(power.raw(), y.raw(), MPFR_RNDN);
    // tail after term r is bounded by |y|^{r+1}/(1-|y|)
    BigReal geom = BigReal::of(1L, work) / (BigReal::of(1L, work) - ay);
    BigReal tol = BigReal::exp10i(-work.total_digits(), work);
    for (long r = 1;; ++r) {
        BigReal term = power;
        mpz_class rn;
        mpz_ui_pow_ui(rn.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
        term.div_z(rn);
        sum += term;
        power *= y;
        if (abs(power) * geom < tol) break;
    }
    BigReal out(ctx);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
}

const BigReal& PolylogTable::at(long k) const {
    auto it = values.find(k);
    if (it == values.end()) throw domain_error("PolylogTable: index not tabulated");
    return it->second;
}

PolylogTable li_table(const BigReal& x, const std::vector<long>& indices, long n,
                      const PrecisionContext& ctx) {
    if (mpfr_cmp_si(x.raw(), 1) <= 0) throw domain_error("li_table requires x > 1");
    PrecisionContext work(ctx.digits(), ctx.guard() + 10);
    PolylogTable table;
    table.base = x;
    table.order = n;
    table.indices = indices;
    // shared cutoff from the k=1 tail bound: x^-J/(1 - x^-1) < 10^-(digits+guard)
    double logx = std::log(mpfr_get_d(x.raw(), MPFR_RNDN));
    if (!(logx > 1e-9)) throw domain_error("li_table: base too close to 1");
    double slack = std::log(1.0 / (1.0 - std::exp(-logx)));
    long cutoff =
        static_cast<long>((work.total_digits() * 2.302585092994046 + slack) / logx) + 4;
    table.cutoff = cutoff;
    BigReal xw(work.bits());
    mpfr_set(xw.raw(), x.raw(), MPFR_RNDN);
    BigReal inv_x = BigReal::of(1L, work) / xw;
    std::map<long, BigReal> acc; // k -> sum_{k|j} x^-j / j^n
    for (long k : indices) acc.emplace(k, BigReal(work.bits()));
    BigReal power = BigReal::of(1L, work);
    for (long j = 1; j <= cutoff; ++j) {
        power *= inv_x;
        BigReal term = power;
        mpz_class jn;
        mpz_ui_pow_ui(jn.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
        term.div_z(jn);
        for (auto& [k, a] : acc)
            if (j % k == 0) a += term;
    }
    for (auto& [k, a] : acc) {
        mpz_class kn;
        mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
        BigReal v(ctx);
        BigReal scaled = a;
        scaled.mul_z(kn);
        mpfr_set(v.raw(), scaled.raw(), MPFR_RNDN);
        table.values.emplace(k, v);
    }
    return table;
}

BigReal rogers(const BigReal& y, long n, const PrecisionContext& ctx) {
    if (n < 1) throw domain_error("rogers requires n >= 1");
    PrecisionContext work(ctx.digits(), ctx.guard() + 10);
    bool at_one = mpfr_cmp_si(y.raw(), 1) == 0;
    if (at_one && n < 2) throw domain_error("rogers: y = 1 needs n >= 2");
    if (!at_one) {
        if (y.is_zero() || mpfr_cmpabs_ui(y.raw(), 1) >= 0)
            throw domain_error("rogers requires 0 < |y| < 1");
    }
    BigReal mlog(work.bits()); // -log|y|, zero at y = 1
    if (!at_one) {
        BigReal ay = abs(y);
        mlog = -ln(ay);
    }
    BigReal sum(work.bits());
    for (long r = 1; r <= n; ++r) {
        if (at_one && r < n) continue; // (-log 1)^{n-r} = 0 kills these terms
        BigReal li = at_one ? zeta(r, work) : li_n(y, r, work);
        BigReal term = li;
        if (n - r > 0) {
            term *= pow_int(mlog, n - r);
            term.div_z(factorial_z(static_cast<unsigned long>(n - r)));
        }
        if (r == 1) {
            // weight 1 - 1/n
            term.mul_z(mpz_class(n - 1));
            term.div_z(mpz_class(n));
        }
        sum += term;
    }
    BigReal out(ctx);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
}

std::map<long, BigReal> rogers_table(const BigReal& x, const std::vector<long>& indices, long n,
                                     const PrecisionContext& ctx) {
    PrecisionContext work(ctx.digits(), ctx.guard() + 10);
    std::vector<PolylogTable> tables;
    tables.reserve(static_cast<size_t>(n));
    for (long r = 1; r <= n; ++r) tables.push_back(li_table(x, indices, r, work));
    BigReal lx = ln(x);
    std::map<long, BigReal> out;
    for (long k : indices) {
        BigReal mlog = lx;
        mlog.mul_si(k); // -log(x^-k) = k log x
        BigReal sum(work.bits());
        for (long r = 1; r <= n; ++r) {
            BigReal term = tables[static_cast<size_t>(r - 1)].at(k);
            if (n - r > 0) {
                term *= pow_int(mlog, n - r);
                term.div_z(factorial_z(static_cast<unsigned long>(n - r)));
            }
            if (r == 1) {
                term.mul_z(mpz_class(n - 1));
                term.div_z(mpz_class(n));
            }
            sum += term;
        }
        BigReal v(ctx);
        mpfr_set(v.raw(), sum.raw(), MPFR_RNDN);
        out.emplace(k, v);
    }
    return out;
}

Rational bernoulli(long n) {
    if (n < 0) throw domain_error("bernoulli requires n >= 0");
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        Rational acc(0);
        for (long j = 0; j < m; ++j)
            acc += Rational(binomial_z(static_cast<unsigned long>(m + 1),
                                       static_cast<unsigned long>(j))) *
                   cache[static_cast<size_t>(j)];
        acc /= Rational(m + 1);
        cache.push_back(-acc);
    }
    return cache[static_cast<size_t>(n)];
}

BigReal zeta_even(long m, const PrecisionContext& ctx) {
    if (m < 2 || m % 2 != 0) throw domain_error("zeta_even requires even m >= 2");
    PrecisionContext work(ctx.digits(), ctx.guard() + 10);
    Rational b = bernoulli(m);
    Rational ab = b >= 0 ? b : Rational(-b);
    BigReal twopi = pi(work);
    twopi.mul_si(2);
    BigReal v = BigReal::of(ab, work) * pow_int(twopi, m);
    v.div_z(2 * factorial_z(static_cast<unsigned long>(m)));
    BigReal out(ctx);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
    return out;
}

namespace {

// zeta at even arguments including zeta(0) = -1/2, exact-rational aware.
BigReal zeta_even_or_zero(long m, const PrecisionContext& work) {
    if (m == 0) return BigReal::of(Rational(-1, 2), work);
    return zeta_even(m, work);
}

} // namespace

BigReal zeta_odd(long p, OddZetaKind kind, const PrecisionContext& ctx) {
    if (p < 0) throw domain_error("zeta_odd requires p >= 0");
    if (kind == OddZetaKind::four_p_minus_1 && p == 0) {
        // companion identity probe only
    }
    PrecisionContext work(ctx.digits(), ctx.guard() + 15);
    BigReal piv = pi(work);
    BigReal rhs(work.bits());
    if (kind == OddZetaKind::four_p_plus_1) {
        BigReal head(work.bits());
        for (long n = 0; n <= 2 * p + 1; ++n) {
            BigReal term = zeta_even_or_zero(2 * n, work) *
                           zeta_even_or_zero(4 * p + 2 - 2 * n, work);
            term *= BigReal::of(Rational(2 * n - 1, 2), work); // n - 1/2
            if (n % 2 == 1) term = -term;
            head += term;
        }
        head = head / piv;
        // tail: -2 sum_{n>0} n^{-4p-1}/(exp(2 pi n)-1) (p + pi n/(1 - exp(-2 pi n)))
        BigReal tail(work.bits());
        BigReal e2pi = exp(piv * BigReal::of(2L, work));
        BigReal epow = BigReal::of(1L, work);
        BigReal tol = BigReal::exp10i(-work.total_digits() - 5, work);
        for (long n = 1;; ++n) {
            epow *= e2pi; // exp(2 pi n)
            BigReal den = epow - BigReal::of(1L, work);
            BigReal inner = piv;
            inner.mul_si(n);
            BigReal denom2 = BigReal::of(1L, work) - BigReal::of(1L, work) / epow;
            inner = inner / denom2;
            inner += BigReal::of(p, work);
            mpz_class npow;
            mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(4 * p + 1));
            BigReal term = inner / den;
            term.div_z(npow);
            tail += term;
            if (abs(term) < tol) break;
        }
        tail.mul_si(-2);
        rhs = head + tail;
        if (p > 0) rhs.div_z(mpz_class(p));
    } else {
        BigReal head(work.bits());
        for (long n = 0; n <= 2 * p; ++n) {
            BigReal term = zeta_even_or_zero(2 * n, work) *
                           zeta_even_or_zero(4 * p - 2 * n, work);
            if (n % 2 == 1) term = -term;
            head += term;
        }
        head = -(head / piv);
        BigReal tail(work.bits());
        BigReal e2pi = exp(piv * BigReal::of(2L, work));
        BigReal epow = BigReal::of(1L, work);
        BigReal tol = BigReal::exp10i(-work.total_digits() - 5, work);
        for (long n = 1;; ++n) {
            epow *= e2pi;
            BigReal den = epow - BigReal::of(1L, work);
            BigReal term = BigReal::of(1L, work) / den;
            // n^{-4p+1}: for p = 0 this is a factor n in the numerator
            if (4 * p - 1 > 0) {
                mpz_class npow;
                mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                              static_cast<unsigned long>(4 * p - 1));
                term.div_z(npow);
            } else {
                term.mul_si(n);
            }
            tail += term;
            if (abs(term) < tol) break;
        }
        tail.mul_si(-2);
        rhs = head + tail;
    }
    BigReal out(ctx);
    mpfr_set(out.raw(), rhs.raw(), MPFR_RNDN);
    return out;
}

BigReal zeta(long n, const PrecisionContext& ctx) {
    if (n < 2) throw domain_error("zeta requires n >= 2");
    if (n % 2 == 0) return zeta_even(n, ctx);
    if (n % 4 == 1) return zeta_odd((n - 1) / 4, OddZetaKind::four_p_plus_1, ctx);
    return zeta_odd((n + 1) / 4, OddZetaKind::four_p_minus_1, ctx);
}

BigReal zeta_alternating(long n, const PrecisionContext& ctx) {
    if (n < 2) throw domain_error("zeta_alternating requires n >= 2");
    PrecisionContext work(ctx.digits(), ctx.guard() + 20);
    long N = static_cast<long>(work.total_digits() * 2.302585 / 1.7627) + 12;
    // d_k = N * sum_{i<=k} (N+i-1)! 4^i / ((N-i)! (2i)!), all integers
    std::vector<mpz_class> d(static_cast<size_t>(N) + 1);
    mpq_class u(1); // N * t_0
    mpq_class dsum(1);
    d[0] = 1;
    for (long i = 1; i <= N; ++i) {
        u *= mpq_class(4 * (N + i - 1)) * (N - i + 1);
        u /= mpq_class(2 * i) * (2 * i - 1);
        dsum += u;
        mpq_class c = dsum;
        c.canonicalize();
        if (c.get_den() != 1) throw domain_error("zeta_alternating: d_k not integral");
        d[static_cast<size_t>(i)] = c.get_num();
    }
    BigReal sum(work.bits());
    for (long k = 0; k < N; ++k) {
        mpz_class num = d[static_cast<size_t>(k)] - d[static_cast<size_t>(N)];
        BigReal term = BigReal::of(num, work);
        mpz_class kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k + 1),
                      static_cast<unsigned long>(n));
        term.div_z(kp);
        if (k % 2 == 1) term = -term;
        sum += term;
    }
    // zeta = -sum / (d_N (1 - 2^{1-n}))
    BigReal denom = BigReal::of(1L, work);
    BigReal two_pow = BigReal::of(Rational(mpz_class(1), pow_z(2, static_cast<unsigned long>(n - 1))), work);
    denom -= two_pow;
    BigReal v = -(sum / denom);
    v.div_z(d[static_cast<size_t>(N)]);
    BigReal out(ctx);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
    return out;
}

const BigReal& ZetaCache::get(long n, const PrecisionContext& ctx) {
    auto it = values_.find(n);
    if (it != values_.end() && it->second.first >= ctx.digits()) return it->second.second;
    BigReal v = zeta(n, ctx);
    auto [pos, ignored] = values_.insert_or_assign(n, std::make_pair(ctx.digits(), v));
    (void)ignored;
    return pos->second.second;
}

} // namespace polylad
