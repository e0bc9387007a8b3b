#pragma once

#include <string>
#include <vector>

#include "gammacf/rational_function.hpp"

namespace gammacf {

/// Power series in x = 1/n truncated after x^order, exact rational coefficients.
///
/// Binary operations truncate to the smaller operand order; nothing beyond
/// the stated order is ever reported.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(int order = 0);
    /// Coefficients c_0..c_N; order = size - 1. An empty vector is rejected.
    explicit TruncatedSeries(std::vector<BigRational> coeffs);

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const noexcept { return c_; }
    const BigRational& operator[](int m) const { return c_.at(static_cast<size_t>(m)); }

    TruncatedSeries truncated(int order) const;

    /// Index of the first nonzero coefficient, or -1 when all vanish.
    int leading_order() const;

    /// sum_m c_m x^m at x = 1/n.
    BigRational eval_at(const BigRational& n) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Throws DivisorNotUnit when b's constant term is zero.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string str() const;

private:
    std::vector<BigRational> c_;
};

enum class SeriesOp { Add, Sub, Mul, Div };
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

/// ln(1 + 1/n) - 1/(n + 1) through x^order: c_m = (-1)^m (m-1)/m for m >= 2.
/// Throws OrderTooSmall for order < 2.
TruncatedSeries log_term_series(int order);

/// Expansion of rf(n) in powers of 1/n. Throws UnboundedAtInfinity when
/// deg num > deg den.
TruncatedSeries expand_at_infinity(const RationalFunction& rf, int order);

/// rf(n + 1), canonical.
RationalFunction shift_argument(const RationalFunction& rf);

/// Expansion of rf(n + 1) - rf(n), formed as one rational function first.
TruncatedSeries difference_expansion(const RationalFunction& rf, int order);

}  // namespace gammacf
