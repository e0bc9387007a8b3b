#include "gammacf/rational.hpp"

namespace gammacf {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::DivisorNotUnit: return "DivisorNotUnit";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::UnboundedAtInfinity: return "UnboundedAtInfinity";
        case ErrorCode::DegenerateTail: return "DegenerateTail";
        case ErrorCode::OutOfTable: return "OutOfTable";
        case ErrorCode::AllZeroWithinOrder: return "AllZeroWithinOrder";
        case ErrorCode::CancellationFailure: return "CancellationFailure";
        case ErrorCode::AffineCheckFailed: return "AffineCheckFailed";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::InvalidIndex: return "InvalidIndex";
        case ErrorCode::NonpositiveArgument: return "NonpositiveArgument";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return BigRational(BigInt(s, 10));
        }
        return BigRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::InvalidArgument, "not a rational literal: '" + s + "'");
    }
}

BigRational BigRational::inverse() const {
    if (is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    return BigRational(mpq_class(1 / q_));
}

BigRational BigRational::pow(int exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by zero rational");
    }
    q_ /= o.q_;
    return *this;
}

BigRational rat_arith(const BigRational& a, const BigRational& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    return {};
}

}  // namespace gammacf
