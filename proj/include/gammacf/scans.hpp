#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammacf/evaluator.hpp"

namespace gammacf {

/// Two-sided bounds on |r_k(n) - gamma| that the scans check.
///   Lu2:      1/(72 (n+1)^3)  < gamma - r_2(n)  < 1/(72 n^3)
///   Lu3:      1/(120 (n+1)^4) < r_3(n) - gamma  < 1/(120 (n-1)^4),  n >= 2
///   Thm2R10:  (D1/132)/(n+1)^11 < gamma - r_10(n) < (D1/132)/n^11
///   Thm2R11:  (D2/156)/(n+1)^12 < r_11(n) - gamma < (D2/156)/n^12
enum class Inequality { Lu2, Lu3, Thm2R10, Thm2R11 };

std::string_view to_string(Inequality which);

/// One checked instance: lower < value < upper, either bound optional.
struct CheckRow {
    long n = 0;
    std::string quantity;
    std::optional<BigRational> lower;
    std::optional<BigRational> upper;
    Interval value;
    bool holds = false;
};

struct ScanReport {
    std::string name;
    long first = 0;
    long last = 0;
    std::vector<CheckRow> rows;
    /// Largest working precision any row needed.
    Precision max_precision = 0;

    size_t violations() const;
};

struct ScanOptions {
    Precision precision = kDefaultPrecision;
    Precision cap = kDefaultEscalationCap;
    /// 0 = hardware concurrency.
    unsigned threads = 0;
};

/// Checks `which` for every integer n in [first, last]. gamma is MPFR's
/// correctly rounded constant, independent of the bracket. Inconclusive
/// comparisons escalate p -> 2p; past the cap PrecisionExhausted is thrown.
/// Lu3 with first < 2 throws InvalidArgument.
ScanReport scan_inequalities(Inequality which, long first, long last, const ScanOptions& opts = {});

/// k = 10: r_10(n) < r_10(n+1); k = 11: r_11(n) > r_11(n+1), from the exact
/// difference form ln(1+1/n) - 1/(n+1) + R_k(n+1) - R_k(n). Rows carry the
/// interval of r_k(n) - r_k(n+1).
ScanReport scan_monotonicity(int k, long first, long last, const ScanOptions& opts = {});

/// r_11(n) - r_10(n) = R_10(n) - R_11(n) > 0, exact, over the range.
ScanReport scan_bracket_order(long first, long last);

enum class DerivativeBound { FR10, GR11 };

std::string_view to_string(DerivativeBound which);

/// lower < -f'(x) < upper, all exact.
struct DerivativeCheck {
    DerivativeBound which = DerivativeBound::FR10;
    BigRational x;
    BigRational lower;
    BigRational value;
    BigRational upper;
    bool holds = false;
};

/// f(x) = 1/(x+1) - ln(1+1/x) - R_10(x+1) + R_10(x), with
///   D1/(x+1)^13 < -f'(x) < D1/(x+1/2)^13;
/// g(x) = ln(1+1/x) - 1/(x+1) - R_11(x) + R_11(x+1), with
///   D2/(x+1)^14 < -g'(x) < D2/(x+1/2)^14.
/// Throws InvalidArgument for x < 1.
DerivativeCheck derivative_bound_check(DerivativeBound which, const BigRational& x);

/// f'(x) or g'(x) as an exact rational function.
const RationalFunction& bound_derivative(DerivativeBound which);

}  // namespace gammacf
