#pragma once

#include <string_view>
#include <vector>

#include "gammacf/continued_fraction.hpp"
#include "gammacf/series.hpp"

namespace gammacf {

inline constexpr int kDefaultGuard = 3;

/// Expansion of r_k(n) - r_k(n+1) in 1/n and its leading term l / n^s.
struct DifferenceReport {
    int depth = 0;
    TruncatedSeries series;
    int leading_order = 0;
    BigRational leading_coeff;
    /// l / (s - 1): the limit of n^(s-1) (r_k(n) - gamma).
    BigRational rate_constant;
};

/// ln(1+1/n) - 1/(n+1) + R(n+1) - R(n) through x^order, for R = build_cf(coeffs).
/// No cancellation checks.
TruncatedSeries telescoped_series(const CFCoefficients& coeffs, int order);

/// Expands through order k + 2 + guard and locates the leading term.
/// Throws CancellationFailure when a coefficient below order k + 2 is nonzero,
/// AllZeroWithinOrder when everything computed vanishes.
DifferenceReport difference_report(const CFCoefficients& coeffs, int guard = kDefaultGuard);

/// Limit of n^(s-1) x_n from the leading term l / n^s of x_n - x_{n+1}: l / (s - 1).
/// Requires s > 1 and l != 0.
BigRational compute_rate_constant(const DifferenceReport& report);

enum class SolvePath {
    AffineFit,          ///< solved from the affine coefficient c(a) = intercept + slope * a
    ConjectureVerified  ///< fit unusable; a_k = -a_{k-1} accepted after exact verification
};

std::string_view to_string(SolvePath path);

struct NextCoefficient {
    BigRational value;
    SolvePath path = SolvePath::AffineFit;
    /// c(a) = intercept + slope * a for the n^-(k+1) coefficient of the depth-k
    /// telescoped series (zero slope when path is ConjectureVerified).
    BigRational intercept;
    BigRational slope;
};

/// Solves for a_k given a_1..a_{k-1} by sampling the n^-(k+1) coefficient at
/// a in {0, 1, 2}, checking that it is affine, and solving c(a) = 0.
/// The solution is re-verified with difference_report.
NextCoefficient solve_next(const CFCoefficients& prefix, int guard = kDefaultGuard);

struct SolveResult {
    CFCoefficients coeffs;
    std::vector<BigRational> rate_constants;
    std::vector<SolvePath> paths;
    std::vector<NextCoefficient> steps;
    /// conjecture_holds[j-1] is a_{2j+1} == -a_{2j}, for every j with 2j+1 <= k_max.
    std::vector<bool> conjecture_holds;
};

/// Solves a_1..a_{k_max} in sequence and records each rate constant.
SolveResult solve_all(int k_max, int guard = kDefaultGuard);

}  // namespace gammacf
