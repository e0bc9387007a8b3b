#include "gammacf/interval.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

namespace gammacf {

Interval::Interval(Precision bits) {
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) {
    mpfr_init2(lo_, o.precision());
    mpfr_init2(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.precision());
        mpfr_set_prec(hi_, o.precision());
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const BigRational& q, Precision bits) {
    Interval r(bits);
    mpfr_set_q(r.lo_, q.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.mpq().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::euler_gamma(Precision bits) {
    Interval r(bits);
    mpfr_const_euler(r.lo_, MPFR_RNDD);
    mpfr_const_euler(r.hi_, MPFR_RNDU);
    return r;
}

namespace {

BigRational exact(mpfr_srcptr x) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return BigRational(q);
}

}  // namespace

BigRational Interval::lo_exact() const { return exact(lo_); }
BigRational Interval::hi_exact() const { return exact(hi_); }

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double Interval::mid() const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    const double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

bool Interval::contains(const BigRational& q) const {
    return mpfr_cmp_q(lo_, q.mpq().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.mpq().get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const {
    return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

bool Interval::strictly_inside(const Interval& o) const {
    return mpfr_less_p(o.lo_, lo_) && mpfr_less_p(hi_, o.hi_);
}

Interval Interval::rounded(Precision bits) const {
    Interval r(bits);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) {
        throw Error(ErrorCode::NonpositiveArgument, "log of an interval reaching zero");
    }
    Interval r(precision());
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval hull(const Interval& a, const Interval& b) {
    Interval r = a.precision() >= b.precision() ? a : b;
    const Interval& other = a.precision() >= b.precision() ? b : a;
    if (mpfr_less_p(other.lo(), r.lo())) {
        mpfr_set(r.lo_, other.lo(), MPFR_RNDD);
    }
    if (mpfr_greater_p(other.hi(), r.hi())) {
        mpfr_set(r.hi_, other.hi(), MPFR_RNDU);
    }
    return r;
}

Interval Interval::operator-() const {
    Interval r(precision());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const Precision p = std::max(a.precision(), b.precision());
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_srcptr as[] = {a.lo_, a.hi_};
    mpfr_srcptr bs[] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) {
                mpfr_set(r.lo_, t, MPFR_RNDD);
            }
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) {
                mpfr_set(r.hi_, t, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval operator+(const Interval& a, const BigRational& q) {
    Interval r(a.precision());
    mpfr_add_q(r.lo_, a.lo_, q.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(r.hi_, a.hi_, q.mpq().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const BigRational& q) {
    Interval r(a.precision());
    mpfr_sub_q(r.lo_, a.lo_, q.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_sub_q(r.hi_, a.hi_, q.mpq().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval operator-(const BigRational& q, const Interval& a) {
    return -(a - q);
}

Interval operator*(const Interval& a, const BigRational& q) {
    Interval r(a.precision());
    if (q.sign() >= 0) {
        mpfr_mul_q(r.lo_, a.lo_, q.mpq().get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, a.hi_, q.mpq().get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_, a.hi_, q.mpq().get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, a.lo_, q.mpq().get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

std::string to_decimal(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(x)) {
        return "0";
    }
    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char*)> raw(
        mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), x, rnd), mpfr_free_str);
    std::string mant(raw.get());
    std::string sign;
    if (mant.front() == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // value = 0.mant * 10^exp10
    if (exp10 <= 0 && exp10 > -8) {
        return sign + "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
    }
    if (exp10 > 0 && exp10 < static_cast<mpfr_exp_t>(mant.size())) {
        return sign + mant.substr(0, static_cast<size_t>(exp10)) + "." + mant.substr(static_cast<size_t>(exp10));
    }
    return sign + mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp10 - 1);
}

std::string Interval::lo_str(int digits) const { return to_decimal(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_str(int digits) const { return to_decimal(hi_, digits, MPFR_RNDU); }

}  // namespace gammacf
