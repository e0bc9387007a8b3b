#include <doctest.h>

#include <cmath>

#include "gammacf/continued_fraction.hpp"
#include "gammacf/evaluator.hpp"

using namespace gammacf;

namespace {

// First 50 decimals of gamma; the true value lies in (kGamma50, kGamma50 + 10^-50).
const BigRational kGamma50 =
    BigRational::parse("57721566490153286060651209008240243104215933593992/100000000000000000000000000000000000000000000000000");
const BigRational kTenToMinus50 = BigRational(1) / BigRational(10).pow(50);

BigRational pow2(int e) { return BigRational(2).pow(e); }

// ln 2 = 2 atanh(1/3), partial sum plus a geometric tail bound.
std::pair<BigRational, BigRational> ln2_oracle(int terms) {
    BigRational s;
    const BigRational third = rat(1, 3);
    for (int j = 0; j < terms; ++j) {
        s = s + 2 * third.pow(2 * j + 1) / (2 * j + 1);
    }
    const BigRational tail = 2 * third.pow(2 * terms + 1) / (2 * terms + 1) * rat(9, 8);
    return {s, tail};
}

double rel_dev(const Interval& v, const BigRational& c) { return std::fabs(v.mid() / c.to_double() - 1.0); }

}  // namespace

TEST_CASE("harmonic") {
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(4) == rat(25, 12));
    for (long n : {10L, 37L, 200L}) {
        BigRational direct;
        for (long m = 1; m <= n; ++m) {
            direct = direct + rat(1, m);
        }
        CHECK(harmonic(n) == direct);
    }
    CHECK(harmonic(10) == rat(7381, 2520));
    CHECK_THROWS_AS(harmonic(0), Error);
}

TEST_CASE("ln_interval") {
    const Interval z = ln_interval(1, 128);
    CHECK(z.contains(BigRational(0)));
    CHECK(z.width_exact() <= pow2(-128));

    const auto [s, tail] = ln2_oracle(60);
    const Interval l2 = ln_interval(2, 128);
    CHECK(l2.hi_exact() >= s);
    CHECK(l2.lo_exact() <= s + tail);
    CHECK(l2.width_exact() <= pow2(-126));

    CHECK(ln_interval(3, 64).lo_exact() > ln_interval(2, 64).hi_exact());

    // width contract with |ln x| > 1
    const Interval big = ln_interval(BigRational(10).pow(30), 100);
    CHECK(big.width() <= std::ldexp(1.0, -98) * 70);

    try {
        (void)ln_interval(0, 64);
        FAIL("expected NonpositiveArgument");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonpositiveArgument);
    }
    CHECK_THROWS_AS(ln_interval(rat(-1, 2), 64), Error);
}

TEST_CASE("eval_rk") {
    const Interval r11 = eval_rk(1, 1, 128);
    CHECK(r11.contains(rat(1, 2)));
    CHECK(r11.width_exact() == 0);

    const Interval r10 = eval_rk(100, 10, 256);
    CHECK(r10.below(kGamma50));
    CHECK(r10.above(kGamma50 - BigRational(1) / BigRational(10).pow(20)));

    CHECK(eval_rk(10, 13, 256).width_exact() <= pow2(-252));
    CHECK_THROWS_AS(eval_rk(10, 14, 256), Error);
    CHECK_THROWS_AS(eval_rk(0, 3, 256), Error);
}

TEST_CASE("only the logarithm contributes width") {
    for (long n : {2L, 10L, 1000L, 123457L}) {
        const Precision p = 200;
        const Interval v = eval_rk(n, 7, p);
        const Interval l = ln_interval(n, p + 32);
        // one outward rounding at precision p per endpoint
        const BigRational ulp_bound = 2 * BigRational(2).pow(-(static_cast<int>(p) - 1));
        CHECK(v.width_exact() <= l.width_exact() + ulp_bound);
        CHECK(v.contains((harmonic(n) - approximant(7).eval(n)) - l));
    }
}

TEST_CASE("recomputing at twice the precision stays inside") {
    for (long n : {1L, 3L, 50L, 999L}) {
        for (int k : {1, 6, 13}) {
            CHECK(eval_rk(n, k, 128).contains(eval_rk(n, k, 256)));
        }
        CHECK(ln_interval(n + 1, 96).contains(ln_interval(n + 1, 192)));
    }
}

TEST_CASE("gamma_bracket") {
    SUBCASE("n = 10") {
        const GammaBracket b = gamma_bracket(10);
        CHECK(certainly_less(b.lower, b.upper));
        CHECK(b.enclosure().contains(kGamma50));
        // Width is bounded by |C_10|/10^11 + C_11/10^12.
        const auto c = tabulated_rate_constants();
        const BigRational bound = c[9].abs() / BigRational(10).pow(11) + c[10] / BigRational(10).pow(12);
        CHECK(b.enclosure().width_exact() <= bound);
    }
    SUBCASE("n = 1000 at 512 bits") {
        const GammaBracket b = gamma_bracket(1000, 512);
        CHECK(b.certified_digits >= 35);
        CHECK(b.enclosure().contains(kGamma50));
        CHECK(b.enclosure().contains(kGamma50 + kTenToMinus50));
        // r10(1000) sits about 3e-36 below gamma, so the endpoints agree to 34 decimals
        CHECK(b.enclosure().lo_str(36).rfind("0.5772156649015328606065120900824024", 0) == 0);
        CHECK(b.enclosure().hi_str(36).rfind("0.5772156649015328606065120900824024", 0) == 0);
    }
    SUBCASE("n = 1") {
        const GammaBracket b = gamma_bracket(1);
        CHECK(certainly_less(b.lower, b.upper));
        CHECK(b.enclosure().contains(kGamma50));
    }
    SUBCASE("MPFR's constant lies inside") {
        const Interval g = Interval::euler_gamma(256);
        CHECK(gamma_bracket(100).enclosure().contains(g));
    }
    CHECK_THROWS_AS(gamma_bracket(0), Error);
}

TEST_CASE("gamma_bracket escalates and gives up at the cap") {
    const GammaBracket b = gamma_bracket(100000, 16);
    CHECK(b.precision() > 16);
    try {
        (void)gamma_bracket(100000, 16, 32);
        FAIL("expected PrecisionExhausted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PrecisionExhausted);
    }
}

TEST_CASE("brackets nest") {
    Interval prev = gamma_bracket(1).enclosure();
    for (long n = 2; n <= 40; ++n) {
        const Interval cur = gamma_bracket(n).enclosure();
        CHECK(prev.strictly_inside(cur) == false);
        CHECK(cur.strictly_inside(prev));
        prev = cur;
    }
    CHECK(gamma_bracket(1000, 512).enclosure().strictly_inside(gamma_bracket(100, 512).enclosure()));
}

TEST_CASE("decimal_digits_resolved") {
    CHECK(decimal_digits_resolved(rat(1, 1000)) == 3);
    CHECK(decimal_digits_resolved(rat(2, 1000)) == 2);
    CHECK(decimal_digits_resolved(rat(1, 7)) == 0);
}

TEST_CASE("empirical rates") {
    const auto c = tabulated_rate_constants();
    SUBCASE("k = 1 and k = 2 at 10^4") {
        const Interval g = gamma_bracket(1000000).enclosure();
        CHECK(rel_dev(empirical_rate(1, 10000, 512, g), rat(-1, 12)) < 0.01);
        CHECK(rel_dev(empirical_rate(2, 10000, 512, g), rat(-1, 72)) < 0.01);
    }
    SUBCASE("k = 11 at 10^3") {
        CHECK(rel_dev(empirical_rate(11, 1000), BigRational::parse("20169451/3821257440")) < 0.02);
    }
    SUBCASE("signs agree with the table at 10^4") {
        const Interval g = gamma_bracket(1000000).enclosure();
        for (int k = 1; k <= kTabulatedDepth; ++k) {
            const Interval v = empirical_rate(k, 10000, 512, g);
            CHECK((c[static_cast<size_t>(k - 1)].sign() > 0 ? v.certainly_positive() : v.certainly_negative()));
        }
    }
}
