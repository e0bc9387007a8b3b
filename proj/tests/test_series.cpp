#include <doctest.h>

#include <random>

#include "gammacf/continued_fraction.hpp"
#include "gammacf/series.hpp"

using namespace gammacf;

namespace {

TruncatedSeries ser(std::initializer_list<BigRational> c) { return TruncatedSeries(std::vector<BigRational>(c)); }

}  // namespace

TEST_CASE("series_arith examples") {
    const TruncatedSeries one_plus_x = ser({1, 1, 0, 0, 0});
    const TruncatedSeries one_minus_x = ser({1, -1, 0, 0, 0});
    CHECK(series_arith(one_plus_x, one_minus_x, SeriesOp::Mul) == ser({1, 0, -1, 0, 0}));
    CHECK(series_arith(ser({1, 0, 0, 0}), ser({1, -1, 0, 0}), SeriesOp::Div) == ser({1, 1, 1, 1}));
    CHECK(series_arith(ser({1, 2}), ser({3, 4, 5}), SeriesOp::Add) == ser({4, 6}));
    CHECK(series_arith(ser({1, 2}), ser({3, 4, 5}), SeriesOp::Sub).order() == 1);
    try {
        (void)series_arith(one_plus_x, ser({0, 1, 0, 0, 0}), SeriesOp::Div);
        FAIL("expected DivisorNotUnit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisorNotUnit);
    }
}

TEST_CASE("(f g) / g = f") {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int i = 0; i < 50; ++i) {
        std::vector<BigRational> f(8), g(8);
        for (size_t j = 0; j < 8; ++j) {
            f[j] = rat(c(gen), 1 + (j % 3));
            g[j] = rat(c(gen), 2);
        }
        if (g[0].is_zero()) {
            g[0] = 1;
        }
        const TruncatedSeries fs(f), gs(g);
        CHECK((fs * gs) / gs == fs);
    }
}

TEST_CASE("log_term_series") {
    CHECK(log_term_series(4) == ser({0, 0, rat(1, 2), rat(-2, 3), rat(3, 4)}));
    CHECK(log_term_series(2)[2] == rat(1, 2));
    CHECK(log_term_series(15)[15] == rat(-14, 15));
    try {
        (void)log_term_series(1);
        FAIL("expected OrderTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OrderTooSmall);
    }
}

TEST_CASE("expand_at_infinity") {
    CHECK(expand_at_infinity(appendix_form(1), 3) == ser({0, rat(1, 2), 0, 0}));
    // long division: 3/(6n+1) = (1/(2n)) * sum_j (-1/(6n))^j
    CHECK(expand_at_infinity(appendix_form(2), 3) == ser({0, rat(1, 2), rat(-1, 12), rat(1, 72)}));
    try {
        (void)expand_at_infinity(RationalFunction(Polynomial({0, 0, 1}), Polynomial({1, 1})), 3);
        FAIL("expected UnboundedAtInfinity");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnboundedAtInfinity);
    }
    // constants expand to themselves
    CHECK(expand_at_infinity(RationalFunction(rat(5, 3)), 2) == ser({rat(5, 3), 0, 0}));
}

TEST_CASE("shift_argument") {
    CHECK(shift_argument(appendix_form(1)) == RationalFunction(Polynomial({1}), Polynomial({2, 2})));
    CHECK(shift_argument(appendix_form(2)) == RationalFunction(Polynomial({3}), Polynomial({7, 6})));
    const RationalFunction r = appendix_form(6);
    const RationalFunction twice = shift_argument(shift_argument(r));
    for (long x : {1L, 2L, 5L, 17L, 100L}) {
        CHECK(twice.eval(x) == r.eval(x + 2));
    }
}

TEST_CASE("difference_expansion matches the published expansions") {
    const CFCoefficients a = theorem1_coefficients();

    SUBCASE("depth 9 through n^-11") {
        const TruncatedSeries d = difference_expansion(build_cf(a.prefix(9)), 11);
        const BigRational expected[] = {rat(-1, 2), rat(2, 3), rat(-3, 4), rat(4, 5),  rat(-5, 6),
                                        rat(6, 7),  rat(-7, 8), rat(8, 9),  rat(-9, 10), rat(736265, 836136)};
        for (int m = 2; m <= 11; ++m) {
            CHECK(d[m] == expected[m - 2]);
        }
    }
    SUBCASE("depth 13 at n^-15") {
        const TruncatedSeries d = difference_expansion(build_cf(a), 15);
        for (int m = 2; m <= 14; ++m) {
            const BigRational v = rat(m - 1, m);
            CHECK(d[m] == (m % 2 == 0 ? -v : v));
        }
        CHECK(d[15] == BigRational::parse("1903648586623/2576034146400"));
    }
    SUBCASE("depth 1") {
        // 1/(2(n+1)) - 1/(2n) = -1/(2n(n+1)) = -(1/2) x^2 (1 - x + x^2 - ...)
        const TruncatedSeries d = difference_expansion(appendix_form(1), 5);
        CHECK(d == ser({0, 0, rat(-1, 2), rat(1, 2), rat(-1, 2), rat(1, 2)}));
    }
    SUBCASE("depth 8 with a free a_8") {
        // Orders 9 and 10 as functions of a_8, sampled at several values.
        for (const BigRational& a8 : {BigRational(0), BigRational(1), rat(-3, 7), rat(7230, 6241)}) {
            const TruncatedSeries d = difference_expansion(build_cf(a.prefix(7).extended(a8)), 10);
            for (int m = 2; m <= 8; ++m) {
                const BigRational v = rat(m - 1, m);
                CHECK(d[m] == (m % 2 == 0 ? -v : v));
            }
            CHECK(d[9] == (360030 - 6241 * a8) / 396900);
            CHECK(d[10] == (-346440 + 24964 * a8 + 6241 * a8 * a8) / 352800);
        }
    }
}

TEST_CASE("difference of a function vanishing at infinity starts at order 2") {
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        const TruncatedSeries d = difference_expansion(appendix_form(k), 6);
        CHECK(d[0].is_zero());
        CHECK(d[1].is_zero());
    }
    const RationalFunction r(Polynomial({3, -1}), Polynomial({1, 2, 5}));
    const TruncatedSeries d = difference_expansion(r, 4);
    CHECK(d[0].is_zero());
    CHECK(d[1].is_zero());
}

TEST_CASE("cancellation signature for every tabulated depth") {
    const CFCoefficients a = theorem1_coefficients();
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        CAPTURE(k);
        const TruncatedSeries s = log_term_series(k + 4) + difference_expansion(build_cf(a.prefix(k)), k + 4);
        for (int m = 0; m <= k + 1; ++m) {
            CHECK(s[m].is_zero());
        }
        CHECK_FALSE(s[k + 2].is_zero());
        CHECK(s.leading_order() == k + 2);
    }
}

TEST_CASE("truncation error sanity band") {
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<long> c(1, 9);
    std::vector<RationalFunction> fns = {appendix_form(2), appendix_form(7), appendix_form(12)};
    for (int i = 0; i < 10; ++i) {
        fns.emplace_back(Polynomial({c(gen), c(gen)}), Polynomial({c(gen), c(gen), c(gen)}));
    }
    const int order = 6;
    for (const auto& rf : fns) {
        const TruncatedSeries s = expand_at_infinity(rf, order);
        // The band uses |c_N| 2^N; fall back to the largest coefficient when c_N = 0.
        BigRational scale = s[order].abs();
        for (const auto& cm : s.coeffs()) {
            scale = std::max(scale, cm.abs());
        }
        const BigRational k = 2 * scale * BigRational(2).pow(order);
        for (long n0 : {10L, 100L, 1000L}) {
            const BigRational err = (rf.eval(n0) - s.eval_at(n0)).abs();
            CHECK(err <= k * BigRational(n0).pow(-(order + 1)));
        }
    }
}
