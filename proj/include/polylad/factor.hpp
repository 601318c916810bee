#pragma once

#include <gmpxx.h>

#include <map>

namespace polylad {

bool is_probable_prime(const mpz_class& n);

struct FactorResult {
    std::map<mpz_class, int> primes;
    mpz_class cofactor = 1; // 1 when fully factored; composite otherwise
};

/// Factor |n| by trial division up to `trial_bound` followed by Brent's
/// variant of Pollard rho, with at most `rho_budget` iterations spent per
/// composite cofactor. Whatever resists within the budget is returned as the
/// (composite) cofactor.
FactorResult factorize(const mpz_class& n, long rho_budget = 10'000'000,
                       uint32_t trial_bound = 1'000'000);

} // namespace polylad
