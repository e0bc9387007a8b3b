#include <doctest.h>

#include <random>

#include "gammacf/continued_fraction.hpp"
#include "gammacf/rational_function.hpp"

using namespace gammacf;

TEST_CASE("ratfun_normalize examples") {
    // (n/2 - 1/12) / n^2
    const RationalFunction r3 = ratfun_normalize(Polynomial({rat(-1, 12), rat(1, 2)}), Polynomial({0, 0, 1}));
    CHECK(r3.num() == Polynomial({-1, 6}));
    CHECK(r3.den() == Polynomial({0, 0, 12}));

    const RationalFunction zero = ratfun_normalize(Polynomial(), Polynomial({1, 1}));
    CHECK(zero.num().is_zero());
    CHECK(zero.den() == Polynomial({1}));

    const RationalFunction cancel = ratfun_normalize(Polynomial({-1, 0, 1}), Polynomial({-1, 1}));
    CHECK(cancel.num() == Polynomial({1, 1}));
    CHECK(cancel.den() == Polynomial({1}));

    // negative leading denominator is flipped
    const RationalFunction neg = ratfun_normalize(Polynomial({1}), Polynomial({0, -2}));
    CHECK(neg.num() == Polynomial({-1}));
    CHECK(neg.den() == Polynomial({0, 2}));

    try {
        (void)ratfun_normalize(Polynomial({1}), Polynomial());
        FAIL("expected ZeroDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroDenominator);
    }
}

TEST_CASE("ratfun_eval examples") {
    CHECK(ratfun_eval(appendix_form(2), 1) == rat(3, 7));
    CHECK(ratfun_eval(appendix_form(1), 2) == rat(1, 4));
    CHECK(ratfun_eval(appendix_form(5), 1) == rat(14, 33));
    try {
        (void)ratfun_eval(appendix_form(1), 0);
        FAIL("expected PoleAtPoint");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PoleAtPoint);
    }
}

TEST_CASE("ratfun_equal examples") {
    const RationalFunction built = build_cf({{rat(1, 2), rat(1, 6), rat(-1, 6)}});
    CHECK(ratfun_equal(built, appendix_form(3)));
    const RationalFunction a(Polynomial({1}), Polynomial({0, 2}));
    const RationalFunction b(Polynomial({2}), Polynomial({0, 4}));
    CHECK(ratfun_equal(a, b));
    CHECK_FALSE(ratfun_equal(appendix_form(1), appendix_form(2)));
}

TEST_CASE("polynomial basics") {
    const Polynomial p({1, 2, 3});  // 1 + 2n + 3n^2
    CHECK(p.eval(2) == BigRational(17));
    CHECK(p.derivative() == Polynomial({2, 6}));
    CHECK(p.shifted(1) == Polynomial({6, 8, 3}));
    const auto [q, r] = divmod(Polynomial({-1, 0, 1}), Polynomial({1, 1}));
    CHECK(q == Polynomial({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(Polynomial({-1, 0, 1}), Polynomial({2, 2})) == Polynomial({1, 1}));
    CHECK(gcd(Polynomial({1, 1}), Polynomial({1, 2})) == Polynomial({1}));
    CHECK_THROWS_AS(divmod(p, Polynomial()), Error);
}

namespace {

Polynomial random_poly(std::mt19937_64& gen, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<long> d(1, 5);
    std::vector<BigRational> v;
    const int n = deg(gen);
    for (int i = 0; i <= n; ++i) {
        v.push_back(rat(c(gen), d(gen)));
    }
    if (v.back().is_zero()) {
        v.back() = 1;
    }
    return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("normalisation is idempotent and preserves value") {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 200; ++i) {
        const Polynomial common = random_poly(gen, 2);
        const Polynomial num = random_poly(gen, 3) * common;
        const Polynomial den = random_poly(gen, 3) * common;
        const RationalFunction once(num, den);
        const RationalFunction twice(once.num(), once.den());
        CHECK(once == twice);
        CHECK(once.den().leading().sign() > 0);
        for (const auto& c : once.den().coeffs()) {
            CHECK(c.is_integer());
        }
        for (long x = 1; x <= 3; ++x) {
            if (!den.eval(x).is_zero() && !once.den().eval(x).is_zero()) {
                CHECK(once.eval(x) == num.eval(x) / den.eval(x));
            }
        }
    }
}

TEST_CASE("ratfun_equal agrees with evaluation at enough points") {
    std::mt19937_64 gen(11);
    int equal_pairs = 0;
    for (int i = 0; i < 200; ++i) {
        const RationalFunction a(random_poly(gen, 2), random_poly(gen, 2));
        // Half the time compare against a rescaled copy of itself.
        RationalFunction b = (i % 2 == 0) ? RationalFunction(a.num() * rat(3, 7), a.den() * rat(3, 7))
                                          : RationalFunction(random_poly(gen, 2), random_poly(gen, 2));
        const int needed = 1 + a.num().degree() + a.den().degree() + b.num().degree() + b.den().degree() + 1;
        int agree = 0;
        int tried = 0;
        for (long x = 1; tried < needed && x < 1000; ++x) {
            if (a.den().eval(x).is_zero() || b.den().eval(x).is_zero()) {
                continue;
            }
            ++tried;
            agree += a.eval(x) == b.eval(x);
        }
        const bool by_eval = agree == tried;
        CHECK(ratfun_equal(a, b) == by_eval);
        equal_pairs += by_eval;
    }
    CHECK(equal_pairs >= 100);
}
