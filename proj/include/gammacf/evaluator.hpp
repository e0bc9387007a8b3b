#pragma once

#include <optional>

#include "gammacf/continued_fraction.hpp"
#include "gammacf/interval.hpp"

namespace gammacf {

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kDefaultEscalationCap = Precision{1} << 14;

/// H_n = 1 + 1/2 + ... + 1/n, exact. Throws InvalidIndex for n < 1.
BigRational harmonic(long n);

/// Enclosure of ln x with width <= 2^(2-p) max(1, |ln x|).
/// Throws NonpositiveArgument for x <= 0.
Interval ln_interval(const BigRational& x, Precision p);

/// R_k from the tabulated coefficients (built once, shared).
const RationalFunction& approximant(int k);

/// Enclosure of r_k(n) = H_n - ln n - R_k(n). H_n and R_k(n) are exact;
/// only ln n contributes width.
Interval eval_rk(long n, int k, Precision p);
/// Same with a caller-supplied H_n.
Interval eval_rk(long n, int k, const BigRational& harmonic_n, Precision p);

/// Numerators of the derivative-bound constants: gamma - r_10(n) lies in
/// (D1/132) [1/(n+1)^11, 1/n^11] and r_11(n) - gamma in (D2/156) [1/(n+1)^12, 1/n^12].
BigRational bound_constant_d1();
BigRational bound_constant_d2();

/// Two-sided enclosure of gamma from r_10(n) < gamma < r_11(n).
/// The enclosure is as trustworthy as those two inequalities.
struct GammaBracket {
    long n = 0;
    Interval lower;
    Interval upper;
    int certified_digits = 0;

    Precision precision() const { return lower.precision(); }
    /// [lower.lo, upper.hi]
    Interval enclosure() const;
};

/// Escalates precision (p -> 2p) until upper.lo > lower.hi, up to `cap` bits.
/// Throws InvalidIndex for n < 1 and PrecisionExhausted past the cap.
GammaBracket gamma_bracket(long n, Precision p = kDefaultPrecision,
                           Precision cap = kDefaultEscalationCap);

/// Enclosure of n^(k+1) (r_k(n) - gamma). Without `gamma`, gamma comes from
/// gamma_bracket(100 n). Escalates until the result excludes zero with
/// relative width <= 2^-20.
Interval empirical_rate(int k, long n, Precision p = 512, const std::optional<Interval>& gamma = {},
                        Precision cap = kDefaultEscalationCap);

/// floor(-log10(w)) for w > 0.
int decimal_digits_resolved(const BigRational& width);

}  // namespace gammacf
