#include "gammacf/series.hpp"

#include <algorithm>
#include <sstream>

namespace gammacf {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) {
        throw Error(ErrorCode::OrderTooSmall, "negative series order");
    }
    c_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
        throw Error(ErrorCode::OrderTooSmall, "series needs at least the constant term");
    }
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order > this->order()) {
        throw Error(ErrorCode::OrderTooSmall, "cannot extend a truncated series");
    }
    return TruncatedSeries(std::vector<BigRational>(c_.begin(), c_.begin() + order + 1));
}

int TruncatedSeries::leading_order() const {
    for (size_t m = 0; m < c_.size(); ++m) {
        if (!c_[m].is_zero()) {
            return static_cast<int>(m);
        }
    }
    return -1;
}

BigRational TruncatedSeries::eval_at(const BigRational& n) const {
    const BigRational x = n.inverse();
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (size_t m = 0; m < r.c_.size(); ++m) {
        r.c_[m] = a.c_[m] + b.c_[m];
    }
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    const size_t len = r.c_.size();
    for (size_t i = 0; i < len; ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; i + j < len; ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.c_[0].is_zero()) {
        throw Error(ErrorCode::DivisorNotUnit, "series divisor has zero constant term");
    }
    // Solve q * b = a term by term.
    TruncatedSeries q(std::min(a.order(), b.order()));
    const BigRational inv0 = b.c_[0].inverse();
    for (size_t m = 0; m < q.c_.size(); ++m) {
        BigRational acc = a.c_[m];
        for (size_t j = 1; j <= m; ++j) {
            acc -= b.c_[j] * q.c_[m - j];
        }
        q.c_[m] = acc * inv0;
    }
    return q;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t m = 0; m < c_.size(); ++m) {
        os << (m ? ", " : "") << c_[m];
    }
    os << "] + O(x^" << c_.size() << ")";
    return os.str();
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::Add: return a + b;
        case SeriesOp::Sub: return a - b;
        case SeriesOp::Mul: return a * b;
        case SeriesOp::Div: return a / b;
    }
    return a;
}

TruncatedSeries log_term_series(int order) {
    if (order < 2) {
        throw Error(ErrorCode::OrderTooSmall, "log term series needs order >= 2");
    }
    std::vector<BigRational> c(static_cast<size_t>(order) + 1);
    for (int m = 2; m <= order; ++m) {
        BigRational v = rat(m - 1, m);
        c[static_cast<size_t>(m)] = (m % 2 == 0) ? v : -v;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries expand_at_infinity(const RationalFunction& rf, int order) {
    if (order < 0) {
        throw Error(ErrorCode::OrderTooSmall, "negative series order");
    }
    const int dn = rf.num().degree();
    const int dd = rf.den().degree();
    if (dn > dd) {
        throw Error(ErrorCode::UnboundedAtInfinity,
                    "numerator degree " + std::to_string(dn) + " exceeds denominator degree " +
                        std::to_string(dd));
    }
    if (rf.is_zero()) {
        return TruncatedSeries(order);
    }
    // n = 1/x, multiplied through by x^dd: coefficient of x^j is the
    // polynomial coefficient of n^(dd - j).
    auto reversed = [&](const Polynomial& p) {
        std::vector<BigRational> c(static_cast<size_t>(order) + 1);
        for (int j = 0; j <= std::min(order, dd); ++j) {
            c[static_cast<size_t>(j)] = p.coeff(dd - j);
        }
        return TruncatedSeries(std::move(c));
    };
    return reversed(rf.num()) / reversed(rf.den());
}

RationalFunction shift_argument(const RationalFunction& rf) {
    return rf.shifted(1);
}

TruncatedSeries difference_expansion(const RationalFunction& rf, int order) {
    if (rf.num().degree() > rf.den().degree()) {
        throw Error(ErrorCode::UnboundedAtInfinity, "difference of an unbounded rational function");
    }
    return expand_at_infinity(shift_argument(rf) - rf, order);
}

}  // namespace gammacf
