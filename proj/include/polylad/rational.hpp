#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "polylad/bigreal.hpp"

namespace polylad {

/// Exact rationals are GMP's canonicalized mpq (gcd(num,den)=1, den>0).
using Rational = mpq_class;

Rational rational_of(long num, long den = 1);
Rational rational_parse(const std::string& s);
std::string rational_str(const Rational& q);

mpz_class lcm_z(const mpz_class& a, const mpz_class& b);

/// Best rational p/q with q <= den_bound and |x - p/q| < 10^(-digits/2),
/// found by walking the continued-fraction convergents of x. Absence (no
/// convergent inside the acceptance window) returns nullopt.
std::optional<Rational> rationalize(const BigReal& x, const mpz_class& den_bound,
                                    const PrecisionContext& ctx);

} // namespace polylad
