#include "gammacf/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gammacf {

Polynomial::Polynomial(std::initializer_list<BigRational> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const BigRational& c, int power) {
    std::vector<BigRational> v(static_cast<size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

BigRational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) {
        return {};
    }
    return c_[static_cast<size_t>(i)];
}

const BigRational& Polynomial::leading() const {
    if (c_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
    }
    return c_.back();
}

BigRational Polynomial::eval(const BigRational& x) const {
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<BigRational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        d[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const BigRational& h) const {
    // Taylor shift by repeated synthetic division (Horner in the ring Q[n]).
    std::vector<BigRational> a = c_;
    const size_t m = a.size();
    for (size_t i = 0; i + 1 < m; ++i) {
        for (size_t j = m - 1; j > i; --j) {
            a[j - 1] += h * a[j];
        }
    }
    return Polynomial(std::move(a));
}

Polynomial Polynomial::primitive() const {
    if (c_.empty()) {
        return {};
    }
    BigInt den_lcm = 1;
    for (const auto& c : c_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.mpq().get_den_mpz_t());
    }
    BigInt g = 0;
    for (const auto& c : c_) {
        BigInt v = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    BigRational scale(den_lcm, g);
    if (leading().sign() < 0) {
        scale = -scale;
    }
    return *this * scale;
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) {
        return {};
    }
    return *this * leading().inverse();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) {
        c *= s;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(r));
}

std::string Polynomial::str() const {
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const auto& c = c_[i];
        if (c.is_zero()) {
            continue;
        }
        if (first) {
            os << c;
        } else if (c.sign() < 0) {
            os << " - " << c.abs();
        } else {
            os << " + " << c;
        }
        if (i > 0) {
            os << "*n^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    }
    std::vector<BigRational> r = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) {
        return {Polynomial(), a};
    }
    std::vector<BigRational> q(static_cast<size_t>(da - db) + 1);
    const BigRational inv_lead = b.leading().inverse();
    for (int i = da; i >= db; --i) {
        const BigRational t = r[static_cast<size_t>(i)] * inv_lead;
        q[static_cast<size_t>(i - db)] = t;
        if (t.is_zero()) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            r[static_cast<size_t>(i - db + j)] -= t * b.coeffs()[static_cast<size_t>(j)];
        }
    }
    r.resize(static_cast<size_t>(db));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    // Euclid over Q with primitive-part normalisation of every remainder,
    // which keeps coefficient growth in check at these degrees.
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second.primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace gammacf
