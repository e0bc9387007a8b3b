#pragma once

#include <string>
#include <vector>

#include "gammacf/evaluator.hpp"

namespace gammacf {

enum class SequenceKind { DeTemple, Mortici, ChenMortici, MorticiChenNu, LuCF };

/// How a published formula is read. Three of the rival sequences are known
/// in two forms: the literal transcription and a repaired one.
///   Mortici:       printed "... + 227/240 + 107/480" vs "... + 227/240 n + 107/480"
///   Chen-Mortici:  printed ln(1 + 1/(2n) + ...) vs ln(n (1 + 1/(2n) + ...))
///   Mortici-Chen:  printed "+ 5/1512 / u^4" vs "- 5/1512 / u^4"
/// DeTemple and LuCF have a single reading.
enum class Reading { AsPrinted, Corrected };

struct ComparisonSequence {
    SequenceKind kind = SequenceKind::DeTemple;
    /// Continued-fraction depth for LuCF.
    int depth = 0;
    Reading reading = Reading::Corrected;

    /// Exponent of the claimed error n^-order:
    /// DeTemple 2, Mortici 6, ChenMortici 5, nu 12, LuCF(k) k+1.
    int claimed_order() const;
    std::string name() const;
};

/// Every sequence in both readings where two exist, plus LuCF(1..13).
std::vector<ComparisonSequence> all_comparison_sequences();

/// The limit of n^12 (nu(n) - gamma).
BigRational nu_rate_constant();

/// Enclosure of the sequence value at n (H_n exact, logs certified).
Interval comparison_value(const ComparisonSequence& seq, long n, Precision p);
Interval comparison_value(const ComparisonSequence& seq, long n, const BigRational& harmonic_n, Precision p);

struct OrderCheck {
    ComparisonSequence seq;
    long n1 = 0;
    long n2 = 0;
    /// n^order (value - gamma) at n1 and n2, with order = claimed_order().
    Interval scaled1;
    Interval scaled2;
    /// log(|e(n1)| / |e(n2)|) / log(n2 / n1).
    double estimated_order = 0;
    bool achieves_claimed = false;
};

/// Estimates the convergence order from errors at n1 < n2; the claim is
/// met when the estimate is within 1/4 of claimed_order().
OrderCheck order_check(const ComparisonSequence& seq, long n1, long n2, const Interval& gamma, Precision p);

struct ComparisonRow {
    ComparisonSequence seq;
    Interval value;
    /// value - gamma
    Interval error;
};

std::vector<ComparisonRow> comparison_table(long n, const Interval& gamma, Precision p,
                                            const std::vector<ComparisonSequence>& seqs = all_comparison_sequences());

}  // namespace gammacf
