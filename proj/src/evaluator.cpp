#include "gammacf/evaluator.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace gammacf {
namespace {

// sum_{m=a}^{b-1} 1/m as an unreduced fraction p/q.
std::pair<BigInt, BigInt> harmonic_split(long a, long b) {
    if (b - a == 1) {
        return {BigInt(1), BigInt(a)};
    }
    const long m = a + (b - a) / 2;
    auto [lp, lq] = harmonic_split(a, m);
    auto [rp, rq] = harmonic_split(m, b);
    return {lp * rq + rp * lq, lq * rq};
}

constexpr Precision kGuardBits = 32;

void check_depth(int k) {
    if (k < 1 || k > kTabulatedDepth) {
        throw Error(ErrorCode::OutOfTable, "depth " + std::to_string(k) + " outside 1..13");
    }
}

}  // namespace

BigRational harmonic(long n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidIndex, "harmonic number needs n >= 1, got " + std::to_string(n));
    }
    auto [p, q] = harmonic_split(1, n + 1);
    return BigRational(p, q);
}

Interval ln_interval(const BigRational& x, Precision p) {
    if (x.sign() <= 0) {
        throw Error(ErrorCode::NonpositiveArgument, "ln of " + x.str());
    }
    return Interval::from_rational(x, p + kGuardBits).log().rounded(p);
}

const RationalFunction& approximant(int k) {
    check_depth(k);
    static const ApproximantFamily family = approximant_family(kTabulatedDepth);
    return family.closed_forms[static_cast<size_t>(k - 1)];
}

Interval eval_rk(long n, int k, const BigRational& harmonic_n, Precision p) {
    check_depth(k);
    if (n < 1) {
        throw Error(ErrorCode::InvalidIndex, "r_k(n) needs n >= 1");
    }
    const BigRational exact_part = harmonic_n - approximant(k).eval(BigRational(n));
    const Interval ln_n = ln_interval(BigRational(n), p + kGuardBits);
    return (exact_part - ln_n).rounded(p);
}

Interval eval_rk(long n, int k, Precision p) {
    return eval_rk(n, k, harmonic(n), p);
}

BigRational bound_constant_d1() { return rat(2755095121L, 6762022344L); }
BigRational bound_constant_d2() { return rat(20169451L, 24495240L); }

Interval GammaBracket::enclosure() const {
    return hull(lower, upper);
}

int decimal_digits_resolved(const BigRational& width) {
    if (width.sign() <= 0) {
        throw Error(ErrorCode::InvalidArgument, "width must be positive");
    }
    // largest d with width * 10^d <= 1, found exactly
    int d = 0;
    BigRational scaled = width;
    while (scaled * 10 <= 1) {
        scaled = scaled * 10;
        ++d;
    }
    while (scaled > 1) {
        scaled = scaled / 10;
        --d;
    }
    return d;
}

GammaBracket gamma_bracket(long n, Precision p, Precision cap) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidIndex, "bracket needs n >= 1, got " + std::to_string(n));
    }
    const BigRational h = harmonic(n);
    for (Precision bits = p; bits <= cap; bits *= 2) {
        GammaBracket b;
        b.n = n;
        b.lower = eval_rk(n, 10, h, bits);
        b.upper = eval_rk(n, 11, h, bits);
        if (certainly_less(b.lower, b.upper)) {
            b.certified_digits = decimal_digits_resolved(b.upper.hi_exact() - b.lower.lo_exact());
            return b;
        }
    }
    throw Error(ErrorCode::PrecisionExhausted,
                "bracket at n = " + std::to_string(n) + " unresolved at " + std::to_string(cap) + " bits");
}

Interval empirical_rate(int k, long n, Precision p, const std::optional<Interval>& gamma, Precision cap) {
    check_depth(k);
    if (n < 1) {
        throw Error(ErrorCode::InvalidIndex, "empirical rate needs n >= 1");
    }
    const BigRational h = harmonic(n);
    const BigRational scale = BigRational(n).pow(k + 1);
    for (Precision bits = p; bits <= cap; bits *= 2) {
        const Interval g = gamma ? *gamma : gamma_bracket(100 * n, bits, cap).enclosure();
        const Interval rate = (eval_rk(n, k, h, bits) - g) * scale;
        if (rate.certainly_positive() || rate.certainly_negative()) {
            const double rel = rate.width() / std::fabs(rate.mid());
            if (rel <= std::ldexp(1.0, -20)) {
                return rate;
            }
        }
        if (gamma && bits >= gamma->precision()) {
            break;  // a fixed gamma enclosure cannot be sharpened here
        }
    }
    throw Error(ErrorCode::PrecisionExhausted,
                "n^" + std::to_string(k + 1) + " (r_" + std::to_string(k) + "(" + std::to_string(n) +
                    ") - gamma) not resolved");
}

}  // namespace gammacf
