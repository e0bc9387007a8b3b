#include "gammacf/rational_function.hpp"

namespace gammacf {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) {
        throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial({1});
        return;
    }
    const Polynomial g = gcd(num, den);
    Polynomial p = divmod(num, g).first;
    Polynomial q = divmod(den, g).first;

    // Clear every rational denominator jointly, then strip the joint content.
    BigInt den_lcm = 1;
    for (const auto* poly : {&p, &q}) {
        for (const auto& c : poly->coeffs()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.mpq().get_den_mpz_t());
        }
    }
    BigInt content = 0;
    for (const auto* poly : {&p, &q}) {
        for (const auto& c : poly->coeffs()) {
            BigInt v = c.numerator() * (den_lcm / c.denominator());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
    }
    BigRational scale(den_lcm, content);
    if (q.leading().sign() < 0) {
        scale = -scale;
    }
    num_ = p * scale;
    den_ = q * scale;
}

BigRational RationalFunction::eval(const BigRational& x) const {
    const BigRational d = den_.eval(x);
    if (d.is_zero()) {
        throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at n = " + x.str());
    }
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction RationalFunction::shifted(const BigRational& h) const {
    return {num_.shifted(h), den_.shifted(h)};
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
    }
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalFunction ratfun_normalize(const Polynomial& num, const Polynomial& den) {
    return {num, den};
}

BigRational ratfun_eval(const RationalFunction& rf, const BigRational& x) {
    return rf.eval(x);
}

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) {
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace gammacf
