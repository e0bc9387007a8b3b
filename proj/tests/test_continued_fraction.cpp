#include <doctest.h>

#include "gammacf/continued_fraction.hpp"

using namespace gammacf;

TEST_CASE("build_cf examples") {
    CHECK(build_cf({{rat(1, 2), rat(1, 6)}}) == RationalFunction(Polynomial({3}), Polynomial({1, 6})));
    CHECK(build_cf({{rat(1, 2), rat(1, 6), rat(-1, 6)}}) ==
          RationalFunction(Polynomial({-1, 6}), Polynomial({0, 0, 12})));
    const RationalFunction r8 = build_cf(theorem1_coefficients().prefix(8));
    CHECK(r8.num() == Polynomial({964337, 2646000, 2599730, 2621220}));
    CHECK(r8.den() == Polynomial({19039, 144600, 315210, 303660, 262122}) * BigRational(20));
    CHECK(build_cf({{rat(1, 2)}}) == RationalFunction(Polynomial({1}), Polynomial({0, 2})));
    CHECK_THROWS_AS(build_cf({}), Error);
}

TEST_CASE("depth-8 form with a free a_8") {
    // (-237 + 1405 a + 1800 n + 1740 a n - 630 n^2 + 3780 a n^2 + 3780 n^3)
    //   / (6 (79 a + 600 a n + 600 n^2 + 790 a n^2 + 1260 a n^3 + 1260 n^4))
    const CFCoefficients a7 = theorem1_coefficients().prefix(7);
    for (const BigRational& a : {BigRational(1), BigRational(2), rat(-5, 3), rat(7230, 6241)}) {
        const Polynomial num({-237 + 1405 * a, 1800 + 1740 * a, -630 + 3780 * a, 3780});
        const Polynomial den = Polynomial({79 * a, 600 * a, 600 + 790 * a, 1260 * a, 1260}) * BigRational(6);
        CHECK(ratfun_equal(build_cf(a7.extended(a)), RationalFunction(num, den)));
    }
}

TEST_CASE("theorem1_coefficients") {
    const CFCoefficients a = theorem1_coefficients();
    REQUIRE(a.depth() == 13);
    CHECK(a.a[0] == rat(1, 2));
    CHECK(a.a[7] == rat(7230, 6241));
    CHECK(a.a[8] == rat(-7230, 6241));
    CHECK(a.a[12] == BigRational::parse("-306232774533/179081182865"));
    CHECK(a.a[9] == rat(4146631, 3833346));
    CHECK_FALSE(a.beyond_table());
    CHECK(a.extended(1).beyond_table());
}

TEST_CASE("appendix_form") {
    const RationalFunction r5 = RationalFunction(Polynomial({1}), Polynomial({0, 2})) -
                                RationalFunction(Polynomial({5}), Polynomial({6, 0, 60}));
    CHECK(appendix_form(5) == r5);
    CHECK(appendix_form(10).num().degree() == 4);
    CHECK(appendix_form(10).den().degree() == 5);
    CHECK(appendix_form(12).num().degree() == 5);
    CHECK(appendix_form(12).den().degree() == 6);
    try {
        (void)appendix_form(14);
        FAIL("expected OutOfTable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfTable);
    }
    CHECK_THROWS_AS(appendix_form(0), Error);
}

TEST_CASE("validate_appendix") {
    const auto ok = validate_appendix();
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        CAPTURE(k);
        CHECK(ok[static_cast<size_t>(k - 1)]);
    }
}

TEST_CASE("approximant family") {
    const ApproximantFamily f = approximant_family();
    REQUIRE(f.closed_forms.size() == 13);
    for (int k = 1; k <= 13; ++k) {
        CHECK(f.closed_forms[static_cast<size_t>(k - 1)] == build_cf(f.coeffs.prefix(k)));
    }
}

TEST_CASE("setting the innermost coefficient to zero drops one level") {
    const CFCoefficients a = theorem1_coefficients();
    for (int k = 2; k <= kTabulatedDepth; ++k) {
        CAPTURE(k);
        CHECK(build_cf(a.prefix(k - 1).extended(0)) == build_cf(a.prefix(k - 1)));
    }
}

TEST_CASE("degree pattern: one more in the denominator") {
    const CFCoefficients a = theorem1_coefficients();
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        const RationalFunction r = build_cf(a.prefix(k));
        CHECK(r.den().degree() - r.num().degree() == 1);
        CHECK(r.num().leading() / r.den().leading() == rat(1, 2));
    }
}

TEST_CASE("positivity on a sample of the scan range") {
    // The full [1, 10^4] sweep lives in the acceptance suite.
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        const RationalFunction r = appendix_form(k);
        for (long n = 1; n <= 500; ++n) {
            CHECK(r.eval(n).sign() > 0);
        }
    }
}
