#include "polylad/rootfind.hpp"

#include <algorithm>
#include <optional>

#include "polylad/error.hpp"
#include "polylad/ntutil.hpp"

namespace polylad {

const char* field_class_name(FieldClass c) {
    switch (c) {
        case FieldClass::salem: return "salem";
        case FieldClass::pv: return "pv";
        case FieldClass::other: return "other";
    }
    return "other";
}

namespace {

using QPoly = std::vector<mpq_class>; // ascending, trimmed

QPoly to_q(const IntPoly& p) {
    QPoly q(p.coeffs().begin(), p.coeffs().end());
    return q;
}

void trim_q(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative_q(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

mpq_class eval_q(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// remainder of a modulo b over Q
QPoly rem_q(QPoly a, const QPoly& b) {
    trim_q(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        trim_q(a);
    }
    return a;
}

// Sturm chain of a squarefree polynomial.
std::vector<QPoly> sturm_chain(const IntPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(to_q(p));
    chain.push_back(derivative_q(chain[0]));
    trim_q(chain[1]);
    while (!chain.back().empty() && chain.back().size() > 1) {
        QPoly r = rem_q(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& v : r) v = -v;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_q(const mpq_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

long variations_at(const std::vector<QPoly>& chain, const mpq_class& x) {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sign_q(eval_q(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long variations_at_inf(const std::vector<QPoly>& chain, int dir) {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sign_q(p.back());
        if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

IntPoly squarefree_part(const IntPoly& p) {
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return p.divexact(g);
}

// Bisect (lo, hi] with a sign change down to the requested width, then
// Newton-refine at escalating precision, then certify by an exact rational
// sign bracket of radius 10^-(digits+2).
BigReal refine_root(const IntPoly& p, mpq_class lo, mpq_class hi, const PrecisionContext& ctx) {
    int slo = sign_q(p.eval_q(lo));
    int shi = sign_q(p.eval_q(hi));
    if (shi == 0) {
        // exact rational root at hi
        return BigReal::of(hi, ctx);
    }
    if (slo == 0 || slo == shi)
        throw domain_error("refine_root: bracket does not straddle a simple root");
    for (int it = 0; it < 80; ++it) {
        mpq_class mid = (lo + hi) / 2;
        int sm = sign_q(p.eval_q(mid));
        if (sm == 0) return BigReal::of(mid, ctx);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    // Newton with precision laddering
    QPoly dq = derivative_q(to_q(p));
    IntPoly dp = p.derivative();
    int target = ctx.digits() + ctx.guard();
    int digits = 40;
    PrecisionContext work(target + 10);
    BigReal x = BigReal::of(mpq_class((lo + hi) / 2), work);
    while (true) {
        digits = std::min(2 * digits, target + 8);
        BigReal tol = BigReal::exp10i(-digits, work);
        for (int it = 0; it < 60; ++it) {
            BigReal fx = p.eval_r(x);
            BigReal dfx = dp.eval_r(x);
            if (dfx.is_zero()) throw precision_error("refine_root: derivative vanished");
            BigReal step = fx / dfx;
            x -= step;
            if (abs(step) < tol) break;
        }
        if (digits >= target + 8) break;
    }
    // exact certification: sign change across x +- 10^-(digits+2)
    mpz_class den = pow_z(10, static_cast<unsigned long>(ctx.digits() + 2));
    mpz_class num = (x * BigReal::of(den, work)).round_z();
    mpq_class cand(num, den);
    cand.canonicalize();
    mpq_class eps(1, den);
    int sa = sign_q(p.eval_q(cand - eps));
    int sb = sign_q(p.eval_q(cand + eps));
    if (sa != 0 && sb != 0 && sa == sb)
        throw precision_error("refine_root: certification bracket failed");
    BigReal out(ctx);
    mpfr_set(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

// Isolate the largest real root of a squarefree polynomial: returns a
// rational sign-change bracket (lo, hi) holding exactly that root.
std::pair<mpq_class, mpq_class> isolate_largest(const IntPoly& p) {
    auto chain = sturm_chain(p);
    mpq_class bound(p.one_norm() + 1);
    auto count_above = [&](const mpq_class& t) {
        return variations_at(chain, t) - variations_at_inf(chain, +1);
    };
    if (count_above(-bound) == 0) throw domain_error("polynomial has no real root");
    mpq_class lo = -bound, hi = bound; // count_above(hi) == 0, p(hi) != 0
    for (int it = 0; it < 600; ++it) {
        int slo = sign_q(eval_q(chain[0], lo));
        if (slo != 0 && count_above(lo) == 1) return {lo, hi};
        mpq_class mid = (lo + hi) / 2;
        while (sign_q(eval_q(chain[0], mid)) == 0) mid += (hi - mid) / 16;
        if (count_above(mid) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    throw precision_error("isolate_largest: did not converge");
}

} // namespace

long sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
    auto chain = sturm_chain(p);
    if (eval_q(chain[0], a) == 0 || eval_q(chain[0], b) == 0)
        throw domain_error("sturm_count: endpoint is a root");
    return variations_at(chain, a) - variations_at(chain, b);
}

long sturm_count_all(const IntPoly& p) {
    auto chain = sturm_chain(p);
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

IntPoly lambda_transform(const IntPoly& p) {
    if (!p.is_reciprocal() || p.degree() % 2 != 0)
        throw domain_error("lambda_transform needs a reciprocal polynomial of even degree");
    long h = p.degree() / 2;
    // Chebyshev-like basis: x^j + x^-j = V_j(lambda), V_0 = 2, V_1 = lambda.
    std::vector<IntPoly> V;
    V.push_back(IntPoly::constant(2));
    V.push_back(IntPoly{0, 1});
    for (long j = 2; j <= h; ++j) V.push_back(IntPoly{0, 1} * V[j - 1] - V[j - 2]);
    IntPoly t = IntPoly::constant(p.coeff(h));
    for (long j = 1; j <= h; ++j) t = t + V[static_cast<size_t>(j)].mul_z(p.coeff(h + j));
    return t;
}

BigReal largest_real_root_any(const IntPoly& p, const PrecisionContext& ctx) {
    if (p.degree() < 1) throw domain_error("largest_real_root: constant polynomial");
    IntPoly sf = squarefree_part(p);
    auto [lo, hi] = isolate_largest(sf);
    return refine_root(sf, lo, hi, ctx);
}

BigReal largest_real_root(const IntPoly& p, const PrecisionContext& ctx) {
    IntPoly sf = squarefree_part(p);
    mpq_class bound(sf.one_norm() + 1);
    if (sf.eval_q(1) == 0)
        throw domain_error("largest_real_root: x = 1 is a root; strip cyclotomic factors first");
    if (sturm_count(sf, 1, bound) < 1)
        throw domain_error("no-root-greater-than-one");
    BigReal r = largest_real_root_any(p, ctx);
    return r;
}

namespace {

// Minimal complex arithmetic over mpfr for the Aberth iteration.
struct Cx {
    BigReal re, im;
    Cx(mpfr_prec_t bits) : re(bits), im(bits) {}
};

Cx cx_sub(const Cx& a, const Cx& b) {
    Cx r(std::max(a.re.prec_bits(), b.re.prec_bits()));
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

Cx cx_mul(const Cx& a, const Cx& b) {
    Cx r(std::max(a.re.prec_bits(), b.re.prec_bits()));
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

Cx cx_div(const Cx& a, const Cx& b) {
    Cx r(std::max(a.re.prec_bits(), b.re.prec_bits()));
    BigReal den = b.re * b.re + b.im * b.im;
    if (den.is_zero()) throw precision_error("complex division by zero");
    r.re = (a.re * b.re + a.im * b.im) / den;
    r.im = (a.im * b.re - a.re * b.im) / den;
    return r;
}

BigReal cx_abs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Cx eval_cx(const IntPoly& p, const Cx& z) {
    Cx acc(z.re.prec_bits());
    for (long i = p.degree(); i >= 0; --i) {
        acc = cx_mul(acc, z);
        BigReal c(z.re.prec_bits());
        mpfr_set_z(c.raw(), p.coeff(i).get_mpz_t(), MPFR_RNDN);
        acc.re += c;
    }
    return acc;
}

} // namespace

std::vector<std::pair<BigReal, BigReal>> all_roots(const IntPoly& p, const PrecisionContext& ctx) {
    IntPoly sf = squarefree_part(p);
    long n = sf.degree();
    if (n < 1) return {};
    IntPoly dp = sf.derivative();
    PrecisionContext work(ctx.digits() + ctx.guard() + 10);
    mpfr_prec_t bits = work.bits();
    // Cauchy-style radius
    BigReal radius = BigReal::of(mpz_class(sf.one_norm() + 1), work);
    BigReal pi_v = pi(work);
    std::vector<Cx> z;
    for (long i = 0; i < n; ++i) {
        Cx zi(bits);
        BigReal ang = pi_v * BigReal::of(2 * i, work) / BigReal::of(n, work) +
                      BigReal::parse("0.3977", work);
        mpfr_cos(zi.re.raw(), ang.raw(), MPFR_RNDN);
        mpfr_sin(zi.im.raw(), ang.raw(), MPFR_RNDN);
        zi.re *= radius;
        zi.im *= radius;
        z.push_back(zi);
    }
    BigReal tol = BigReal::exp10i(-(ctx.digits() + 5), work);
    for (int iter = 0; iter < 400; ++iter) {
        BigReal worst(bits);
        for (long i = 0; i < n; ++i) {
            Cx fz = eval_cx(sf, z[static_cast<size_t>(i)]);
            Cx dfz = eval_cx(dp, z[static_cast<size_t>(i)]);
            if (cx_abs(dfz).is_zero()) continue;
            Cx w = cx_div(fz, dfz);
            Cx s(bits);
            Cx one(bits);
            one.re = BigReal::of(1L, work);
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                Cx d = cx_sub(z[static_cast<size_t>(i)], z[static_cast<size_t>(j)]);
                Cx inv = cx_div(one, d);
                s.re += inv.re;
                s.im += inv.im;
            }
            Cx denom(bits);
            denom.re = BigReal::of(1L, work) - (w.re * s.re - w.im * s.im);
            denom.im = -(w.re * s.im + w.im * s.re);
            Cx corr = cx_div(w, denom);
            z[static_cast<size_t>(i)].re -= corr.re;
            z[static_cast<size_t>(i)].im -= corr.im;
            BigReal c = cx_abs(corr);
            if (c > worst) worst = c;
        }
        if (worst < tol) break;
    }
    std::vector<std::pair<BigReal, BigReal>> out;
    for (auto& zi : z) out.emplace_back(zi.re, zi.im);
    return out;
}

SalemCertificate classify(const IntPoly& p, const PrecisionContext& ctx) {
    if (!p.is_monic()) throw domain_error("classify: polynomial must be monic");
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw domain_error("classify: polynomial must be squarefree");
    SalemCertificate cert;
    cert.poly = p;
    cert.d = p.degree();
    if (p.is_reciprocal() && p.degree() % 2 == 0 && p.eval_z(1) != 0 && p.eval_z(-1) != 0) {
        IntPoly t = lambda_transform(p);
        long h = cert.d / 2;
        mpq_class bound(t.one_norm() + 1);
        long above = sturm_count(t, 2, bound);
        long below = sturm_count(t, -bound, -2); // includes -2; t(-2) != 0
        long middle = sturm_count(t, -2, 2);     // includes 2; t(2) != 0
        long real_total = sturm_count_all(t);
        long complex_pairs = h - real_total;
        cert.r = 2 * (above + below);
        cert.on_circle = 2 * middle;
        cert.s = (cert.d - cert.r) / 2;
        bool salem = above == 1 && below == 0 && complex_pairs == 0 && middle == h - 1 && h >= 2;
        cert.classification = salem ? FieldClass::salem : FieldClass::other;
        if (above >= 1) cert.alpha = largest_real_root(p, ctx);
    } else {
        cert.r = sturm_count_all(p);
        cert.s = (cert.d - cert.r) / 2;
        IntPoly mirror = poly_gcd(p, p.reverse());
        bool maybe_circle = mirror.degree() > 0;
        long outside = 0, inside = 0;
        if (!maybe_circle) {
            PrecisionContext look(std::max(40, ctx.digits() / 2));
            auto roots = all_roots(p, look);
            BigReal margin = BigReal::exp10i(-look.digits() / 2, look);
            BigReal one = BigReal::of(1L, look);
            for (auto& [re, im] : roots) {
                BigReal m = sqrt(re * re + im * im);
                if (m > one + margin)
                    ++outside;
                else if (m < one - margin)
                    ++inside;
                else
                    throw precision_error("classify: root too close to the unit circle");
            }
        }
        cert.on_circle = 0;
        mpq_class bound(p.one_norm() + 1);
        bool one_above = p.eval_q(1) != 0 && sturm_count(p, 1, bound) == 1;
        bool pv = !maybe_circle && outside == 1 && one_above && inside == cert.d - 1;
        cert.classification = pv ? FieldClass::pv : FieldClass::other;
        if (p.eval_q(1) != 0 && sturm_count(p, 1, bound) >= 1)
            cert.alpha = largest_real_root(p, ctx);
    }
    return cert;
}

BigReal mahler_measure(const IntPoly& p, const PrecisionContext& ctx) {
    if (!p.is_monic()) throw domain_error("mahler_measure: polynomial must be monic");
    if (p.degree() < 1) return BigReal::of(1L, ctx);
    if (p.is_reciprocal() && p.degree() % 2 == 0 && p.eval_z(1) != 0 && p.eval_z(-1) != 0 &&
        poly_gcd(p, p.derivative()).degree() == 0) {
        SalemCertificate cert = classify(p, ctx);
        if (cert.classification == FieldClass::salem) return cert.alpha;
    }
    PrecisionContext work(ctx.digits() + ctx.guard());
    auto roots = all_roots(p, work);
    BigReal margin = BigReal::exp10i(-(ctx.digits() / 2), work);
    BigReal one = BigReal::of(1L, work);
    BigReal prod = BigReal::of(1L, work);
    for (auto& [re, im] : roots) {
        BigReal m = sqrt(re * re + im * im);
        if (m > one + margin) prod *= m;
    }
    BigReal out(ctx);
    mpfr_set(out.raw(), prod.raw(), MPFR_RNDN);
    return out;
}

} // namespace polylad
