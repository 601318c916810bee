#include "polylad/factor.hpp"

#include <algorithm>
#include <vector>

#include "polylad/ntutil.hpp"

namespace polylad {

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

namespace {

// Brent's cycle variant with batched gcds. Deterministic: the polynomial
// offset c steps through 1, 3, 5, ... on retry.
mpz_class rho_brent(const mpz_class& n, long budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (long c = 1; c < 40; c += 2) {
        mpz_class y = 2, r = 1, q = 1, g = 1, x, ys;
        long spent = 0;
        const long m = 128;
        while (g == 1 && spent < budget) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1 && spent < budget) {
                ys = y;
                long lim = static_cast<long>(std::min<long>(m, mpz_get_si(mpz_class(r - k).get_mpz_t())));
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    mpz_class d = x - y;
                    if (d < 0) d = -d;
                    q = q * d % n;
                }
                spent += lim;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                mpz_class d = x - ys;
                if (d < 0) d = -d;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
        if (spent >= budget) return 1; // budget exhausted
    }
    return 1;
}

void factor_rec(const mpz_class& n, long budget, FactorResult& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.primes[n] += 1;
        return;
    }
    mpz_class d = rho_brent(n, budget);
    if (d == 1 || d == n) {
        out.cofactor *= n;
        return;
    }
    factor_rec(d, budget, out);
    factor_rec(n / d, budget, out);
}

} // namespace

FactorResult factorize(const mpz_class& n, long rho_budget, uint32_t trial_bound) {
    FactorResult out;
    mpz_class m = n >= 0 ? n : mpz_class(-n);
    if (m <= 1) return out;
    const auto& primes = small_primes(trial_bound);
    for (uint32_t p : primes) {
        if (p > trial_bound) break;
        if (mpz_class(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.primes[mpz_class(p)] += 1;
            m /= p;
        }
        if (m == 1) return out;
    }
    factor_rec(m, rho_budget, out);
    return out;
}

} // namespace polylad
