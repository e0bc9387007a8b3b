#include <doctest.h>

#include "gammacf/continued_fraction.hpp"
#include "gammacf/evaluator.hpp"
#include "gammacf/solver.hpp"

using namespace gammacf;

namespace {

BigRational q(const char* s) { return BigRational::parse(s); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("difference_report examples") {
    const CFCoefficients a = theorem1_coefficients();

    const DifferenceReport r8 = difference_report(a.prefix(8));
    CHECK(r8.depth == 8);
    CHECK(r8.leading_order == 10);
    CHECK(r8.leading_coeff == q("58081/2446472"));
    CHECK(r8.rate_constant == q("58081/22018248"));

    const DifferenceReport r9 = difference_report(a.prefix(9));
    CHECK(r9.leading_order == 11);
    CHECK(r9.leading_coeff == q("-262445/9197496"));
    CHECK(r9.rate_constant == q("-262445/91974960"));

    const DifferenceReport r13 = difference_report(a);
    CHECK(r13.leading_order == 15);
    CHECK(r13.leading_coeff == q("-500649950017/2576034146400"));
    CHECK(r13.rate_constant == q("-71521421431/5152068292800"));
    CHECK(r13.series.order() == 13 + 2 + kDefaultGuard);

    for (int m = 0; m < r13.leading_order; ++m) {
        CHECK(r13.series[m].is_zero());
    }
}

TEST_CASE("difference_report errors") {
    const CFCoefficients a = theorem1_coefficients();
    CHECK(code_of([&] { (void)difference_report(a.prefix(3), 1); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { (void)difference_report(a.prefix(7).extended(0)); }) == ErrorCode::CancellationFailure);
}

TEST_CASE("solve_next") {
    const CFCoefficients a = theorem1_coefficients();

    SUBCASE("a_8 from a_1..a_7") {
        const NextCoefficient s = solve_next(a.prefix(7));
        CHECK(s.value == q("7230/6241"));
        CHECK(s.path == SolvePath::AffineFit);
        // -8/9 + (360030 - 6241 a) / 396900
        CHECK(s.intercept == rat(-8, 9) + rat(360030, 396900));
        CHECK(s.slope == rat(-6241, 396900));
    }
    SUBCASE("a_2 from a_1") {
        CHECK(solve_next(a.prefix(1)).value == rat(1, 6));
    }
    SUBCASE("a_1 from nothing") {
        const NextCoefficient s = solve_next(CFCoefficients{});
        CHECK(s.value == rat(1, 2));
        // coefficient of 1/n^2 is 1/2 - a_1
        CHECK(s.intercept == rat(1, 2));
        CHECK(s.slope == -1);
    }
    SUBCASE("every odd coefficient is the negated predecessor") {
        for (int k = 3; k <= 13; k += 2) {
            const NextCoefficient s = solve_next(a.prefix(k - 1));
            CHECK(s.value == -a.a[static_cast<size_t>(k - 2)]);
        }
    }
}

TEST_CASE("solve_all") {
    SUBCASE("k_max = 1") {
        const SolveResult r = solve_all(1);
        REQUIRE(r.coeffs.depth() == 1);
        CHECK(r.coeffs.a[0] == rat(1, 2));
        CHECK(r.rate_constants.at(0) == rat(-1, 12));
        CHECK(r.conjecture_holds.empty());
    }
    SUBCASE("k_max = 13 reproduces the table") {
        const SolveResult r = solve_all(13);
        CHECK(r.coeffs.a == theorem1_coefficients().a);
        CHECK(r.rate_constants == tabulated_rate_constants());
        REQUIRE(r.conjecture_holds.size() == 6);
        for (bool b : r.conjecture_holds) {
            CHECK(b);
        }
        CHECK(r.paths.size() == 13);
        CHECK(r.rate_constants[0] == rat(-1, 12));
        CHECK(r.rate_constants[1] == rat(-1, 72));
        CHECK(r.rate_constants[2] == rat(1, 120));
    }
    CHECK(code_of([] { (void)solve_all(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("compute_rate_constant") {
    DifferenceReport r;
    r.leading_coeff = q("58081/2446472");
    r.leading_order = 10;
    CHECK(compute_rate_constant(r) == q("58081/22018248"));
    r.leading_coeff = rat(-1, 6);
    r.leading_order = 3;
    CHECK(compute_rate_constant(r) == rat(-1, 12));
    r.leading_coeff = 0;
    CHECK(code_of([&] { (void)compute_rate_constant(r); }) == ErrorCode::InvalidArgument);
    r.leading_coeff = 1;
    r.leading_order = 1;
    CHECK(code_of([&] { (void)compute_rate_constant(r); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("depth-1 telescoped leading term") {
    const DifferenceReport r = difference_report(theorem1_coefficients().prefix(1));
    CHECK(r.leading_order == 3);
    CHECK(r.leading_coeff == rat(-1, 6));
}

TEST_CASE("perturbing a solved coefficient breaks cancellation") {
    const CFCoefficients a = theorem1_coefficients();
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        for (const BigRational& d : {BigRational(1), BigRational(-1), rat(1, 1000), rat(-1, 1000)}) {
            CAPTURE(k);
            CFCoefficients p = a.prefix(k);
            p.a.back() = p.a.back() + d;
            CHECK(code_of([&] { (void)difference_report(p); }) == ErrorCode::CancellationFailure);
        }
    }
}

TEST_CASE("sign pattern of the rate table") {
    const int expected[] = {-1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1};
    const auto c = tabulated_rate_constants();
    REQUIRE(c.size() == 13);
    for (size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i].sign() == expected[i]);
    }
}

TEST_CASE("rate constants agree with the derivative-bound constants") {
    const auto c = tabulated_rate_constants();
    CHECK(c[9] == -bound_constant_d1() / 132);
    CHECK(c[10] == bound_constant_d2() / 156);
    CHECK(bound_constant_d1() == q("2755095121/6762022344"));
    CHECK(bound_constant_d2() == q("20169451/24495240"));
}
