#include "polylad/ntutil.hpp"

#include <algorithm>
#include <mutex>

#include "polylad/error.hpp"

namespace polylad {

long euler_phi(long k) {
    if (k < 1) throw domain_error("euler_phi requires k >= 1");
    long r = k;
    for (long p : prime_factors(k)) r -= r / p;
    return r;
}

int moebius(long k) {
    if (k < 1) throw domain_error("moebius requires k >= 1");
    int cnt = 0;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            k /= p;
            if (k % p == 0) return 0;
            ++cnt;
        }
    }
    if (k > 1) ++cnt;
    return (cnt % 2 == 0) ? 1 : -1;
}

std::vector<long> divisors(long k) {
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            lo.push_back(d);
            if (d != k / d) hi.push_back(k / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::vector<long> prime_factors(long k) {
    std::vector<long> ps;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            ps.push_back(p);
            while (k % p == 0) k /= p;
        }
    }
    if (k > 1) ps.push_back(k);
    return ps;
}

std::vector<long> divisor_closure(const std::vector<long>& seeds) {
    std::vector<long> all;
    for (long s : seeds) {
        auto ds = divisors(s);
        all.insert(all.end(), ds.begin(), ds.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

const std::vector<uint32_t>& small_primes(uint32_t bound) {
    static std::vector<uint32_t> primes;
    static uint32_t sieved_to = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (bound > sieved_to) {
        primes.clear();
        std::vector<bool> comp(bound + 1, false);
        for (uint32_t i = 2; i <= bound; ++i) {
            if (!comp[i]) {
                primes.push_back(i);
                for (uint64_t j = uint64_t(i) * i; j <= bound; j += i) comp[j] = true;
            }
        }
        sieved_to = bound;
    }
    return primes;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class pow_z(long base, unsigned long e) {
    return pow_z(mpz_class(base), e);
}

mpz_class factorial_z(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial_z(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace polylad
