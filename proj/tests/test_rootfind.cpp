#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polylad/rootfind.hpp"

using namespace polylad;

namespace {

const IntPoly kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
const IntPoly kAlphaNot{1, 0, 0, 0, -1, -1, -1, 0, 0, 0, 1}; // x^10 - x^6 - x^5 - x^4 + 1
const IntPoly kGolden{1, -3, 1};
const IntPoly kPlastic{-1, -1, 0, 1}; // x^3 - x - 1

} // namespace

TEST_CASE("largest real root of the Lehmer polynomial") {
    PrecisionContext ctx(60);
    BigReal a = largest_real_root(kLehmer, ctx);
    CHECK(a.to_decimal(49) == "1.176280818259917506544070338474035050693415806564");
}

TEST_CASE("largest real root of a quadratic matches the closed form") {
    PrecisionContext ctx(80);
    BigReal a = largest_real_root(kGolden, ctx);
    BigReal oracle = (BigReal::of(3L, ctx) + sqrt(BigReal::of(5L, ctx))) / BigReal::of(2L, ctx);
    CHECK(abs(a - oracle) < BigReal::exp10i(-ctx.digits() + 2, ctx));
    CHECK(a.to_decimal(11) == "2.6180339887");
}

TEST_CASE("largest real root of the no-graph field") {
    PrecisionContext ctx(60);
    BigReal a = largest_real_root(kAlphaNot, ctx);
    CHECK(a.to_decimal(49) == "1.216391661138265091626806311199463327722253606570");
}

TEST_CASE("root refinement is prefix-monotone in the digit budget") {
    BigReal lo = largest_real_root(kLehmer, PrecisionContext(50));
    BigReal hi = largest_real_root(kLehmer, PrecisionContext(100));
    std::string a = lo.to_decimal(50);
    std::string b = hi.to_decimal(100);
    CHECK(b.substr(0, a.size()) == a);
}

TEST_CASE("no-root-greater-than-one error") {
    PrecisionContext ctx(30);
    CHECK_THROWS_AS(largest_real_root(IntPoly{2, 1}, ctx), domain_error);
}

TEST_CASE("classification of the Lehmer field") {
    PrecisionContext ctx(50);
    SalemCertificate c = classify(kLehmer, ctx);
    CHECK(c.classification == FieldClass::salem);
    CHECK(c.d == 10);
    CHECK(c.r == 2);
    CHECK(c.s == 4);
    CHECK(c.on_circle == 8);
    CHECK(c.d == c.r + 2 * c.s);
    // reciprocal pairing: 1/alpha is a root
    BigReal inv = BigReal::of(1L, ctx) / c.alpha;
    CHECK(abs(kLehmer.eval_r(inv)) < BigReal::exp10i(-40, ctx));
}

TEST_CASE("classification of the smallest PV number") {
    PrecisionContext ctx(40);
    SalemCertificate c = classify(kPlastic, ctx);
    CHECK(c.classification == FieldClass::pv);
    CHECK(c.alpha.to_decimal(29) == "1.3247179572447460259609088544");
}

TEST_CASE("classification of a totally real reciprocal quadratic") {
    PrecisionContext ctx(40);
    SalemCertificate c = classify(kGolden, ctx);
    CHECK(c.classification == FieldClass::other);
    CHECK(c.r == 2);
    CHECK(c.s == 0);
    CHECK(c.on_circle == 0);
}

TEST_CASE("degree-8 family member is salem") {
    IntPoly p4{1, 0, 0, -1, -1, -1, 0, 0, 1}; // x^8 - x^5 - x^4 - x^3 + 1
    PrecisionContext ctx(40);
    SalemCertificate c = classify(p4, ctx);
    CHECK(c.classification == FieldClass::salem);
    CHECK(c.d == 8);
    CHECK(c.r == 2);
    CHECK(c.s == 3);
}

TEST_CASE("classify input validation") {
    PrecisionContext ctx(30);
    CHECK_THROWS_AS(classify(IntPoly{2, 0, 2}, ctx), domain_error); // not monic
    IntPoly sq = IntPoly{-1, 1} * IntPoly{-1, 1};
    CHECK_THROWS_AS(classify(sq, ctx), domain_error); // not squarefree
}

TEST_CASE("mahler measures") {
    PrecisionContext ctx(50);
    CHECK(mahler_measure(IntPoly{-2, 1}, ctx).to_decimal(10) == "2");
    IntPoly p = IntPoly{-2, 1} * IntPoly{-3, 1};
    BigReal m = mahler_measure(p, ctx);
    CHECK(abs(m - BigReal::of(6L, ctx)) < BigReal::exp10i(-40, ctx));
    BigReal lm = mahler_measure(kLehmer, ctx);
    CHECK(lm.to_decimal(30) == largest_real_root(kLehmer, ctx).to_decimal(30));
}

TEST_CASE("all_roots finds simple integer roots") {
    PrecisionContext ctx(40);
    IntPoly p = IntPoly{-2, 1} * IntPoly{-3, 1};
    auto roots = all_roots(p, ctx);
    REQUIRE(roots.size() == 2);
    BigReal tol = BigReal::exp10i(-30, ctx);
    int found2 = 0, found3 = 0;
    for (auto& [re, im] : roots) {
        CHECK(abs(im) < tol);
        if (abs(re - BigReal::of(2L, ctx)) < tol) ++found2;
        if (abs(re - BigReal::of(3L, ctx)) < tol) ++found3;
    }
    CHECK(found2 == 1);
    CHECK(found3 == 1);
}

TEST_CASE("lambda transform halves the degree") {
    IntPoly t = lambda_transform(kGolden);
    CHECK(t == IntPoly{-3, 1}); // x^2-3x+1 = x*(lambda - 3)
    CHECK(lambda_transform(kLehmer).degree() == 5);
    CHECK_THROWS_AS(lambda_transform(kPlastic), domain_error);
}
