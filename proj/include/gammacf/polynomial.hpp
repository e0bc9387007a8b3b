#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gammacf/rational.hpp"

namespace gammacf {

/// Dense univariate polynomial over the rationals; coeff(i) multiplies n^i.
///
/// The coefficient vector is kept trimmed (no trailing zeros), so the zero
/// polynomial is the empty vector and degree() == -1 for it.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<BigRational> coeffs);
    explicit Polynomial(std::vector<BigRational> coeffs);
    static Polynomial constant(const BigRational& c) { return Polynomial({c}); }
    /// c * n^power
    static Polynomial monomial(const BigRational& c, int power);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<BigRational>& coeffs() const noexcept { return c_; }
    /// Zero beyond the degree.
    BigRational coeff(int i) const;
    const BigRational& leading() const;

    BigRational eval(const BigRational& x) const;
    Polynomial derivative() const;
    /// p(n + h)
    Polynomial shifted(const BigRational& h) const;

    /// Coefficients scaled to integers with gcd 1 and positive leading coefficient.
    Polynomial primitive() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const BigRational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
    friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, ascending powers: "3 + 2*n^1 - 1/2*n^2".
    std::string str() const;

private:
    void trim();
    std::vector<BigRational> c_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// The polynomial n.
inline Polynomial poly_n() { return Polynomial({0, 1}); }

}  // namespace gammacf
