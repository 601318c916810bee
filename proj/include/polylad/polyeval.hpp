#pragma once

#include <map>
#include <vector>

#include "polylad/bigreal.hpp"
#include "polylad/rational.hpp"

namespace polylad {

/// Li_n(y) = sum_{r>0} y^r / r^n for |y| < 1 (y = 1 allowed for n >= 2,
/// where the sum is zeta(n)).
BigReal li_n(const BigReal& y, long n, const PrecisionContext& ctx);

/// A batch of Li_n(x^-k) values sharing one power stream: since
/// Li_n(x^-k)/k^n = sum_{k|j} x^-j/j^n, one pass over j <= cutoff serves
/// every index at once.
struct PolylogTable {
    BigReal base;     // x > 1
    long order = 0;   // n
    std::vector<long> indices;
    std::map<long, BigReal> values; // k -> Li_n(x^-k)
    long cutoff = 0;

    PolylogTable() : base(PrecisionContext(10, 0)) {}
    const BigReal& at(long k) const;
};

PolylogTable li_table(const BigReal& x, const std::vector<long>& indices, long n,
                      const PrecisionContext& ctx);

/// Rogers-type polylogarithm
///   L_n(y) = sum_{r=1..n} (1 - delta_{r,1}/n) (-log|y|)^{n-r}/(n-r)! Li_r(y),
/// the log-free combination used to present ladder relations.
BigReal rogers(const BigReal& y, long n, const PrecisionContext& ctx);

/// L_n(x^-k) for every index of a shared table (n passes of the Li stream).
std::map<long, BigReal> rogers_table(const BigReal& x, const std::vector<long>& indices, long n,
                                     const PrecisionContext& ctx);

/// Exact Bernoulli number B_n (B_1 = -1/2), cached.
Rational bernoulli(long n);

/// zeta(m) for even m >= 2: |B_m| (2 pi)^m / (2 m!).
BigReal zeta_even(long m, const PrecisionContext& ctx);

enum class OddZetaKind { four_p_plus_1, four_p_minus_1 };

/// The exponentially convergent identities for zeta(4p+1) and zeta(4p-1).
/// p = 0 is allowed as a consistency probe: the right-hand sides evaluate to
/// 1/4 and -1/12 (the limits of p*zeta(4p+1) and zeta(4p-1)).
BigReal zeta_odd(long p, OddZetaKind kind, const PrecisionContext& ctx);

/// zeta(n) for n >= 2, routed through the Bernoulli closed form (even n) or
/// the exponentially convergent odd identities.
BigReal zeta(long n, const PrecisionContext& ctx);

/// zeta(n) by accelerated direct summation of the alternating series
/// (Borwein's d_k scheme); an independent route used as the oracle of
/// record and fallback.
BigReal zeta_alternating(long n, const PrecisionContext& ctx);

/// Shared cache of zeta values and Bernoulli numbers for a run.
class ZetaCache {
  public:
    const BigReal& get(long n, const PrecisionContext& ctx);
    void clear() { values_.clear(); }

  private:
    std::map<long, std::pair<int, BigReal>> values_; // n -> (digits, value)
};

} // namespace polylad
