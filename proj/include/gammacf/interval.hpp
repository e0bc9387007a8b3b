#pragma once

#include <mpfr.h>

#include <string>

#include "gammacf/rational.hpp"

namespace gammacf {

using Precision = mpfr_prec_t;

/// Closed interval [lo, hi] of MPFR binary floats at one working precision.
///
/// Every operation rounds lo toward -inf and hi toward +inf, so the result
/// contains the exact image of its operands. Rationals enter through
/// from_rational(), which rounds each endpoint separately.
class Interval {
public:
    explicit Interval(Precision bits = 128);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_rational(const BigRational& q, Precision bits);
    /// MPFR's correctly rounded Euler constant, rounded down and up.
    static Interval euler_gamma(Precision bits);

    Precision precision() const noexcept { return mpfr_get_prec(lo_); }
    mpfr_srcptr lo() const noexcept { return lo_; }
    mpfr_srcptr hi() const noexcept { return hi_; }

    /// Endpoints as exact rationals.
    BigRational lo_exact() const;
    BigRational hi_exact() const;
    /// hi - lo, rounded up.
    double width() const;
    /// Upper bound on hi - lo as an exact rational.
    BigRational width_exact() const { return hi_exact() - lo_exact(); }
    double mid() const;

    bool contains(const BigRational& q) const;
    /// o lies within [lo, hi].
    bool contains(const Interval& o) const;
    bool strictly_inside(const Interval& o) const;
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    /// lo > q
    bool above(const BigRational& q) const { return mpfr_cmp_q(lo_, q.mpq().get_mpq_t()) > 0; }
    /// hi < q
    bool below(const BigRational& q) const { return mpfr_cmp_q(hi_, q.mpq().get_mpq_t()) < 0; }

    /// Outward re-rounding to another precision.
    Interval rounded(Precision bits) const;

    /// Natural logarithm; requires lo > 0.
    Interval log() const;

    Interval operator-() const;
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator+(const Interval& a, const BigRational& q);
    friend Interval operator-(const Interval& a, const BigRational& q);
    friend Interval operator-(const BigRational& q, const Interval& a);
    friend Interval operator*(const Interval& a, const BigRational& q);

    /// Decimal endpoint with `digits` significant digits, rounded outward.
    std::string lo_str(int digits) const;
    std::string hi_str(int digits) const;

private:
    friend Interval hull(const Interval& a, const Interval& b);

    mpfr_t lo_;
    mpfr_t hi_;
};

/// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b);

/// a.hi < b.lo
inline bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi(), b.lo()); }

/// Decimal digits of x rounded in direction `rnd`, fixed-point when |x| is moderate.
std::string to_decimal(mpfr_srcptr x, int digits, mpfr_rnd_t rnd);

}  // namespace gammacf
