#pragma once

#include <string>

#include "gammacf/polynomial.hpp"

namespace gammacf {

/// Quotient of two polynomials in n, held in canonical form.
///
/// Canonical form: gcd(num, den) = 1, every coefficient of num and den is an
/// integer, the gcd of all those integers is 1, and den has a positive leading
/// coefficient. The zero function is 0/1. Two canonical forms are equal iff
/// the functions are equal.
class RationalFunction {
public:
    RationalFunction() : den_({1}) {}
    /// Normalises; throws ZeroDenominator when den is the zero polynomial.
    RationalFunction(const Polynomial& num, const Polynomial& den);
    RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial({1})) {}  // NOLINT
    RationalFunction(const BigRational& c) : RationalFunction(Polynomial::constant(c)) {}  // NOLINT

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Throws PoleAtPoint where den vanishes.
    BigRational eval(const BigRational& x) const;
    RationalFunction derivative() const;
    /// f(n + h)
    RationalFunction shifted(const BigRational& h) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws DivisionByZero for a zero divisor.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    /// Structural equality of canonical forms.
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

RationalFunction ratfun_normalize(const Polynomial& num, const Polynomial& den);
BigRational ratfun_eval(const RationalFunction& rf, const BigRational& x);

/// Value equality by cross-multiplication; does not rely on canonical form.
bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace gammacf
