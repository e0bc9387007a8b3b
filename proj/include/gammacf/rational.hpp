#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "gammacf/error.hpp"

namespace gammacf {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq; every constructor and operator leaves
/// the value canonical, so zero is always 0/1 and structural equality is
/// value equality.
class BigRational {
public:
    BigRational() = default;
    BigRational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" in base 10.
    static BigRational parse(std::string_view text);

    const mpq_class& mpq() const noexcept { return q_; }
    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }

    BigRational abs() const { return BigRational(::abs(q_)); }
    BigRational inverse() const;
    BigRational pow(int exponent) const;

    /// "p/q", or "p" for integers.
    std::string str() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

/// Scalar form of the four field operations, for table-driven callers.
enum class ArithOp { Add, Sub, Mul, Div };
BigRational rat_arith(const BigRational& a, const BigRational& b, ArithOp op);

/// Shorthand for literals in tables: rat(p, q).
inline BigRational rat(long num, long den = 1) { return BigRational(BigInt(num), BigInt(den)); }

}  // namespace gammacf
