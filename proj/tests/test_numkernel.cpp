#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polylad/bigreal.hpp"
#include "polylad/error.hpp"
#include "polylad/rational.hpp"

using namespace polylad;

TEST_CASE("precision context validates its digit budget") {
    CHECK_THROWS_AS(PrecisionContext(9), precision_error);
    PrecisionContext ctx(50);
    CHECK(ctx.guard() == 20);
    CHECK(PrecisionContext(4000).guard() == 40);
}

TEST_CASE("integer arithmetic is exact") {
    PrecisionContext ctx(30);
    BigReal one = BigReal::of(1L, ctx);
    CHECK((one + one).to_decimal(5) == "2");
    BigReal x = BigReal::parse("17.25", ctx);
    BigReal z = BigReal::of(0L, ctx);
    CHECK((x * z).is_zero());
    CHECK_THROWS_AS(x / z, domain_error);
}

TEST_CASE("division digits match scaled integer division") {
    // div(1,3) at 50 digits against floor(10^60 / 3)
    PrecisionContext ctx(50);
    BigReal q = BigReal::of(1L, ctx) / BigReal::of(3L, ctx);
    std::string got = q.to_decimal(50);        // "0.3333...(50 threes)"
    std::string oracle = oracles::scaled_division_digits(1, 3, 60);
    REQUIRE(got.substr(0, 2) == "0.");
    std::string digits = got.substr(2);
    REQUIRE(digits.size() >= 50);
    CHECK(digits.substr(0, 50) == oracle.substr(0, 50));
}

TEST_CASE("transcendental basics") {
    PrecisionContext ctx(60);
    CHECK(ln(BigReal::of(1L, ctx)).is_zero());
    CHECK(exp(BigReal::of(0L, ctx)).to_decimal(4) == "1");
    CHECK_THROWS_AS(ln(BigReal::of(-2L, ctx)), domain_error);
    CHECK_THROWS_AS(sqrt(BigReal::of(-1L, ctx)), domain_error);

    // ln 2: atanh-series oracle against argument-halving oracle, then the
    // module's own value against both.
    BigReal two = BigReal::of(2L, ctx);
    BigReal a = oracles::ln_atanh_series(two, ctx);
    BigReal b = oracles::ln_halving(two, ctx);
    BigReal m = ln(two);
    BigReal tol = BigReal::exp10i(-ctx.digits(), ctx);
    CHECK(abs(a - b) < tol);
    CHECK(abs(m - a) < tol);
    CHECK(m.to_decimal(16) == "0.6931471805599453");
}

TEST_CASE("pi: two internal algorithms agree to the full budget") {
    for (int digits : {50, 200, 1000}) {
        PrecisionContext ctx(digits);
        BigReal a = pi(ctx);
        BigReal b = pi_machin(ctx);
        CHECK(abs(a - b) < BigReal::exp10i(-digits, ctx));
    }
    PrecisionContext ctx(30);
    CHECK(pi(ctx).to_decimal(15) == "3.14159265358979");
}

TEST_CASE("pi prefix consistency across precisions") {
    std::string lo = pi(PrecisionContext(10)).to_decimal(10);
    std::string hi = pi(PrecisionContext(1000)).to_decimal(1000);
    CHECK(hi.substr(0, lo.size()) == lo);
}

TEST_CASE("pi^2/6 matches the direct Basel sum") {
    PrecisionContext ctx(40);
    BigReal p = pi(ctx);
    BigReal lhs = p * p / BigReal::of(6L, ctx);
    BigReal rhs = oracles::basel_sum(ctx);
    CHECK(abs(lhs - rhs) < BigReal::exp10i(-ctx.digits() + 2, ctx));
}

TEST_CASE("add/sub round trip stays within 2 ulp of the guarded budget") {
    PrecisionContext ctx(40);
    oracles::Lcg rng(12345);
    for (int i = 0; i < 200; ++i) {
        BigReal a = BigReal::of(rng.range(-1000000, 1000000), ctx) /
                    BigReal::of(rng.range(1, 99991), ctx);
        BigReal b = BigReal::of(rng.range(-1000000, 1000000), ctx) /
                    BigReal::of(rng.range(1, 99991), ctx);
        BigReal back = (a + b) - b;
        CHECK(abs(back - a) <= BigReal::exp10i(-ctx.total_digits() + 2, ctx));
    }
}

TEST_CASE("exp(ln(x)) = x across the supported range") {
    PrecisionContext ctx(50);
    oracles::Lcg rng(777);
    for (int e = -5; e <= 5; ++e) {
        BigReal x = BigReal::exp10i(e, ctx);
        // random mantissa in [1, 10)
        BigReal m = BigReal::of(rng.range(10000, 99999), ctx) / BigReal::of(10000L, ctx);
        x *= m;
        BigReal y = exp(ln(x));
        CHECK(abs(y - x) < x * BigReal::exp10i(-ctx.digits() + 1, ctx));
    }
}

TEST_CASE("rationalize basics") {
    PrecisionContext ctx(60);
    BigReal half = BigReal::of(1L, ctx) / BigReal::of(2L, ctx);
    auto r = rationalize(half, 10, ctx);
    REQUIRE(r.has_value());
    CHECK(*r == Rational(1, 2));

    // 2003 exactly representable
    BigReal z = BigReal::of(2003L, ctx);
    auto r2 = rationalize(z, 1, ctx);
    REQUIRE(r2.has_value());
    CHECK(*r2 == Rational(2003));

    // pi admits no denominator-<=10 fraction within the window
    auto r3 = rationalize(pi(ctx), 10, ctx);
    CHECK(!r3.has_value());
}

TEST_CASE("rationalize is exact on representable rationals") {
    PrecisionContext ctx(80);
    oracles::Lcg rng(4242);
    for (int i = 0; i < 100; ++i) {
        long num = rng.range(-100000, 100000);
        long den = rng.range(1, 9999);
        Rational want = rational_of(num, den);
        BigReal x = BigReal::of(want, ctx);
        auto got = rationalize(x, want.get_den(), ctx);
        REQUIRE(got.has_value());
        CHECK(*got == want);
    }
}

TEST_CASE("comparison uses the coarser context") {
    BigReal a = BigReal::of(1L, PrecisionContext(20)) / BigReal::of(3L, PrecisionContext(20));
    BigReal b = BigReal::of(1L, PrecisionContext(500)) / BigReal::of(3L, PrecisionContext(500));
    CHECK(a == b);
}
