#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "polylad/error.hpp"

namespace polylad {

/// Decimal working-precision budget. `digits` is the precision the caller is
/// promised; `guard` extra digits are carried internally so that long
/// accumulations stay accurate to the promised budget.
class PrecisionContext {
  public:
    explicit PrecisionContext(int digits, int guard = -1)
        : digits_(digits),
          guard_(guard >= 0 ? guard : default_guard(digits)) {
        if (digits < 10)
            throw precision_error("PrecisionContext requires digits >= 10");
    }

    static int default_guard(int digits) { return std::max(20, digits / 100); }

    int digits() const { return digits_; }
    int guard() const { return guard_; }
    int total_digits() const { return digits_ + guard_; }

    /// Binary precision covering digits+guard decimal digits.
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(
                   std::ceil((digits_ + guard_) * 3.3219280948873626)) +
               16;
    }

    /// Same guard policy, rescaled digit budget (used for revalidation).
    PrecisionContext scaled(double factor) const {
        return PrecisionContext(static_cast<int>(digits_ * factor));
    }

    friend bool operator==(const PrecisionContext& a, const PrecisionContext& b) {
        return a.digits_ == b.digits_ && a.guard_ == b.guard_;
    }

    /// The coarser of two contexts (fewer promised digits).
    static PrecisionContext coarser(const PrecisionContext& a, const PrecisionContext& b) {
        return a.digits_ <= b.digits_ ? a : b;
    }

  private:
    int digits_;
    int guard_;
};

} // namespace polylad
