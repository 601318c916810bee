#pragma once

#include <vector>

#include "polylad/bigreal.hpp"
#include "polylad/intpoly.hpp"

namespace polylad {

enum class FieldClass { salem, pv, other };

/// Root signature of a monic squarefree polynomial: d = r + 2s, with
/// `on_circle` roots of modulus one. A salem certificate asserts exactly one
/// root above 1, its reciprocal inside (0,1), and everything else on the
/// unit circle (s >= 1).
struct SalemCertificate {
    IntPoly poly;
    BigReal alpha;
    long d = 0;
    long r = 0;
    long s = 0;
    long on_circle = 0;
    FieldClass classification = FieldClass::other;

    SalemCertificate() : alpha(PrecisionContext(10, 0)) {}
};

const char* field_class_name(FieldClass c);

/// Number of real roots of p in the half-open interval (a, b], by Sturm
/// sequences over exact rationals. p must be squarefree.
long sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

/// Total number of real roots (Sturm at -inf..+inf).
long sturm_count_all(const IntPoly& p);

/// The largest real root of p when it exceeds 1; Sturm isolation, bisection,
/// then Newton, with an exact rational sign-change bracket at the end.
BigReal largest_real_root(const IntPoly& p, const PrecisionContext& ctx);

/// Largest real root with no x>1 requirement (internal helper, exposed for
/// spectra): throws when p has no real root.
BigReal largest_real_root_any(const IntPoly& p, const PrecisionContext& ctx);

SalemCertificate classify(const IntPoly& p, const PrecisionContext& ctx);

/// Product of |roots| outside the unit circle.
BigReal mahler_measure(const IntPoly& p, const PrecisionContext& ctx);

/// For reciprocal p of even degree 2h: the degree-h polynomial t with
/// p(x) = x^h t(x + 1/x).
IntPoly lambda_transform(const IntPoly& p);

/// All complex roots by the Aberth-Ehrlich iteration (re, im pairs),
/// accurate to roughly ctx digits. Intended for moderate degrees.
std::vector<std::pair<BigReal, BigReal>> all_roots(const IntPoly& p, const PrecisionContext& ctx);

} // namespace polylad
