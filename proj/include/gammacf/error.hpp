#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gammacf {

/// Failure kinds raised across the library. Every throw site carries one.
enum class ErrorCode {
    DivisionByZero,
    ZeroDenominator,
    PoleAtPoint,
    DivisorNotUnit,
    OrderTooSmall,
    UnboundedAtInfinity,
    DegenerateTail,
    OutOfTable,
    AllZeroWithinOrder,
    CancellationFailure,
    AffineCheckFailed,
    NoRoot,
    VerificationFailed,
    InvalidIndex,
    NonpositiveArgument,
    PrecisionExhausted,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gammacf
