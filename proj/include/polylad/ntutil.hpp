#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace polylad {

/// Euler totient of k (k >= 1).
long euler_phi(long k);

/// Moebius function of k (k >= 1).
int moebius(long k);

/// Divisors of k in increasing order.
std::vector<long> divisors(long k);

/// Distinct prime factors of a machine-word k, increasing.
std::vector<long> prime_factors(long k);

/// All positive integers dividing at least one element of `seeds`, sorted.
std::vector<long> divisor_closure(const std::vector<long>& seeds);

/// Primes below `bound` (simple sieve; bound modest).
const std::vector<uint32_t>& small_primes(uint32_t bound);

mpz_class pow_z(const mpz_class& base, unsigned long e);
mpz_class pow_z(long base, unsigned long e);
mpz_class factorial_z(unsigned long n);
mpz_class binomial_z(unsigned long n, unsigned long k);

} // namespace polylad
