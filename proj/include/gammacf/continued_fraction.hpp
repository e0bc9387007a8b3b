#pragma once

#include <array>
#include <vector>

#include "gammacf/rational_function.hpp"

namespace gammacf {

/// Largest depth for which closed forms and rate constants are tabulated.
inline constexpr int kTabulatedDepth = 13;

/// Continued-fraction coefficients a_1..a_k.
struct CFCoefficients {
    std::vector<BigRational> a;

    int depth() const noexcept { return static_cast<int>(a.size()); }
    bool beyond_table() const noexcept { return depth() > kTabulatedDepth; }
    /// First `k` entries.
    CFCoefficients prefix(int k) const;
    /// Copy with `value` appended as the innermost coefficient.
    CFCoefficients extended(const BigRational& value) const;
};

/// The known coefficient table with its closed forms R_1..R_k.
struct ApproximantFamily {
    CFCoefficients coeffs;
    std::vector<RationalFunction> closed_forms;
};

/// R_k(n) = a1 / (n + a2 n / (n + a3 n / ( ... / (n + a_k)))), and R_1(n) = a1 / n.
/// Throws InvalidArgument for an empty list and DegenerateTail when an
/// intermediate level collapses to zero.
RationalFunction build_cf(const CFCoefficients& coeffs);

/// a_1..a_13 as exact rationals.
CFCoefficients theorem1_coefficients();

/// The rate constants C_1..C_13 of the tabulated approximants, where
/// n^(k+1) (r_k(n) - gamma) -> C_k.
std::vector<BigRational> tabulated_rate_constants();

/// Published closed form of R_k, transcribed term by term and combined.
/// Throws OutOfTable outside 1..13.
RationalFunction appendix_form(int k);

ApproximantFamily approximant_family(int depth = kTabulatedDepth);

/// validate_appendix()[k-1] is true iff build_cf at depth k equals appendix_form(k).
std::array<bool, kTabulatedDepth> validate_appendix();

}  // namespace gammacf
