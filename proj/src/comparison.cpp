#include "gammacf/comparison.hpp"

#include <cmath>

namespace gammacf {

int ComparisonSequence::claimed_order() const {
    switch (kind) {
        case SequenceKind::DeTemple: return 2;
        case SequenceKind::Mortici: return 6;
        case SequenceKind::ChenMortici: return 5;
        case SequenceKind::MorticiChenNu: return 12;
        case SequenceKind::LuCF: return depth + 1;
    }
    return 0;
}

std::string ComparisonSequence::name() const {
    const std::string suffix = reading == Reading::AsPrinted ? "_printed" : "";
    switch (kind) {
        case SequenceKind::DeTemple: return "detemple";
        case SequenceKind::Mortici: return "mortici" + suffix;
        case SequenceKind::ChenMortici: return "chen_mortici" + suffix;
        case SequenceKind::MorticiChenNu: return "nu" + suffix;
        case SequenceKind::LuCF: return "r" + std::to_string(depth);
    }
    return "unknown";
}

std::vector<ComparisonSequence> all_comparison_sequences() {
    std::vector<ComparisonSequence> v;
    v.push_back({SequenceKind::DeTemple, 0, Reading::Corrected});
    for (auto kind : {SequenceKind::Mortici, SequenceKind::ChenMortici, SequenceKind::MorticiChenNu}) {
        v.push_back({kind, 0, Reading::AsPrinted});
        v.push_back({kind, 0, Reading::Corrected});
    }
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        v.push_back({SequenceKind::LuCF, k, Reading::Corrected});
    }
    return v;
}

BigRational nu_rate_constant() { return rat(-796801, 43783740); }

Interval comparison_value(const ComparisonSequence& seq, long n, const BigRational& harmonic_n, Precision p) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidIndex, "comparison sequences need n >= 1");
    }
    const bool printed = seq.reading == Reading::AsPrinted;
    const BigRational x(n);
    const Precision work = p + 32;
    switch (seq.kind) {
        case SequenceKind::DeTemple:
            return (harmonic_n - ln_interval(x + rat(1, 2), work)).rounded(p);
        case SequenceKind::Mortici: {
            const BigRational linear = printed ? rat(227, 240) : rat(227, 240) * x;
            const BigRational num = x.pow(3) + rat(3, 2) * x.pow(2) + linear + rat(107, 480);
            const BigRational den = x.pow(2) + x + rat(97, 240);
            return (harmonic_n - ln_interval(num / den, work)).rounded(p);
        }
        case SequenceKind::ChenMortici: {
            BigRational arg = 1 + rat(1, 2) / x + rat(1, 24) / x.pow(2) - rat(1, 48) / x.pow(3) +
                              rat(23, 5760) / x.pow(4);
            if (!printed) {
                arg *= x;
            }
            return (harmonic_n - ln_interval(arg, work)).rounded(p);
        }
        case SequenceKind::MorticiChenNu: {
            const BigRational u = x.pow(2) + x + rat(1, 3);
            const BigRational c4 = printed ? rat(5, 1512) : rat(-5, 1512);
            const BigRational tail = rat(-1, 180) / u.pow(2) + rat(8, 2835) / u.pow(3) + c4 / u.pow(4) +
                                     rat(592, 93555) / u.pow(5);
            return (harmonic_n - tail - ln_interval(u, work) * rat(1, 2)).rounded(p);
        }
        case SequenceKind::LuCF:
            return eval_rk(n, seq.depth, harmonic_n, p);
    }
    return Interval(p);
}

Interval comparison_value(const ComparisonSequence& seq, long n, Precision p) {
    return comparison_value(seq, n, harmonic(n), p);
}

namespace {

double log_abs_mid(const Interval& v) { return std::log(std::fabs(v.mid())); }

}  // namespace

OrderCheck order_check(const ComparisonSequence& seq, long n1, long n2, const Interval& gamma, Precision p) {
    if (n1 < 1 || n2 <= n1) {
        throw Error(ErrorCode::InvalidArgument, "order check needs 1 <= n1 < n2");
    }
    OrderCheck c;
    c.seq = seq;
    c.n1 = n1;
    c.n2 = n2;
    const int order = seq.claimed_order();
    const Interval e1 = comparison_value(seq, n1, p) - gamma;
    const Interval e2 = comparison_value(seq, n2, p) - gamma;
    c.scaled1 = e1 * BigRational(n1).pow(order);
    c.scaled2 = e2 * BigRational(n2).pow(order);
    // Both errors must be resolved away from zero for the estimate to mean anything.
    const bool resolved = (e1.certainly_positive() || e1.certainly_negative()) &&
                          (e2.certainly_positive() || e2.certainly_negative());
    c.estimated_order = (log_abs_mid(e1) - log_abs_mid(e2)) / std::log(static_cast<double>(n2) / static_cast<double>(n1));
    c.achieves_claimed = resolved && std::fabs(c.estimated_order - order) <= 0.25;
    return c;
}

std::vector<ComparisonRow> comparison_table(long n, const Interval& gamma, Precision p,
                                            const std::vector<ComparisonSequence>& seqs) {
    const BigRational h = harmonic(n);
    std::vector<ComparisonRow> rows;
    rows.reserve(seqs.size());
    for (const auto& s : seqs) {
        Interval v = comparison_value(s, n, h, p);
        Interval e = v - gamma;
        rows.push_back({s, std::move(v), std::move(e)});
    }
    return rows;
}

}  // namespace gammacf
