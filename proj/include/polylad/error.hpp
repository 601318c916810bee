#pragma once

#include <stdexcept>
#include <string>

namespace polylad {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside a function's mathematical domain (ln of non-positive,
/// division by zero, ...).
struct domain_error : error {
    using error::error;
};

/// Requested work cannot be certified at the available precision
/// (context underflow, PSLQ norm bound vs digit budget, numerical breakdown).
struct precision_error : error {
    using error::error;
};

/// A numerically detected relation failed its higher-precision revalidation.
struct detection_error : error {
    using error::error;
};

/// Ladder counts diverged from the signature-based prediction.
struct count_mismatch_error : error {
    using error::error;
};

} // namespace polylad
