#include "gammacf/solver.hpp"

namespace gammacf {

std::string_view to_string(SolvePath path) {
    switch (path) {
        case SolvePath::AffineFit: return "affine-fit";
        case SolvePath::ConjectureVerified: return "conjecture-verified";
    }
    return "unknown";
}

TruncatedSeries telescoped_series(const CFCoefficients& coeffs, int order) {
    return log_term_series(order) + difference_expansion(build_cf(coeffs), order);
}

DifferenceReport difference_report(const CFCoefficients& coeffs, int guard) {
    if (guard < 2) {
        throw Error(ErrorCode::InvalidArgument, "guard must be at least 2");
    }
    const int k = coeffs.depth();
    const int expected = k + 2;
    DifferenceReport rep;
    rep.depth = k;
    rep.series = telescoped_series(coeffs, expected + guard);
    const int s = rep.series.leading_order();
    if (s < 0) {
        throw Error(ErrorCode::AllZeroWithinOrder,
                    "all coefficients through order " + std::to_string(expected + guard) +
                        " vanish at depth " + std::to_string(k));
    }
    if (s < expected) {
        throw Error(ErrorCode::CancellationFailure,
                    "depth " + std::to_string(k) + ": coefficient of n^-" + std::to_string(s) +
                        " is " + rep.series[s].str() + ", expected zero below order " +
                        std::to_string(expected));
    }
    rep.leading_order = s;
    rep.leading_coeff = rep.series[s];
    rep.rate_constant = compute_rate_constant(rep);
    return rep;
}

BigRational compute_rate_constant(const DifferenceReport& report) {
    if (report.leading_order <= 1) {
        throw Error(ErrorCode::InvalidArgument, "leading order must exceed 1");
    }
    if (report.leading_coeff.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "leading coefficient is zero");
    }
    return report.leading_coeff / BigRational(report.leading_order - 1);
}

namespace {

NextCoefficient verify_conjecture(const CFCoefficients& prefix, int guard) {
    const int k = prefix.depth() + 1;
    if (k < 3 || k % 2 == 0) {
        throw Error(ErrorCode::AffineCheckFailed,
                    "no conjectured value available at depth " + std::to_string(k));
    }
    NextCoefficient next;
    next.value = -prefix.a.back();
    next.path = SolvePath::ConjectureVerified;
    try {
        difference_report(prefix.extended(next.value), guard);
    } catch (const Error& e) {
        throw Error(ErrorCode::VerificationFailed,
                    "conjectured a_" + std::to_string(k) + " = " + next.value.str() + ": " + e.what());
    }
    return next;
}

}  // namespace

NextCoefficient solve_next(const CFCoefficients& prefix, int guard) {
    const int k = prefix.depth() + 1;
    const int order = k + 1;
    auto sample = [&](long a) { return telescoped_series(prefix.extended(a), order)[order]; };

    const BigRational c0 = sample(0);
    const BigRational c1 = sample(1);
    const BigRational c2 = sample(2);

    NextCoefficient next;
    next.intercept = c0;
    next.slope = c1 - c0;
    if (c2 - c1 != next.slope) {
        try {
            return verify_conjecture(prefix, guard);
        } catch (const Error&) {
            throw Error(ErrorCode::AffineCheckFailed,
                        "order-" + std::to_string(order) + " coefficient is not affine in a_" +
                            std::to_string(k));
        }
    }
    if (next.slope.is_zero()) {
        if (!c0.is_zero()) {
            throw Error(ErrorCode::NoRoot, "coefficient is the nonzero constant " + c0.str());
        }
        return verify_conjecture(prefix, guard);
    }
    next.value = -c0 / next.slope;
    try {
        difference_report(prefix.extended(next.value), guard);
    } catch (const Error& e) {
        throw Error(ErrorCode::VerificationFailed,
                    "a_" + std::to_string(k) + " = " + next.value.str() + ": " + e.what());
    }
    return next;
}

SolveResult solve_all(int k_max, int guard) {
    if (k_max < 1) {
        throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
    }
    SolveResult res;
    for (int k = 1; k <= k_max; ++k) {
        NextCoefficient next = solve_next(res.coeffs, guard);
        res.coeffs.a.push_back(next.value);
        res.paths.push_back(next.path);
        res.steps.push_back(next);
        res.rate_constants.push_back(difference_report(res.coeffs, guard).rate_constant);
    }
    for (int j = 1; 2 * j + 1 <= k_max; ++j) {
        res.conjecture_holds.push_back(res.coeffs.a[static_cast<size_t>(2 * j)] ==
                                       -res.coeffs.a[static_cast<size_t>(2 * j - 1)]);
    }
    return res;
}

}  // namespace gammacf
