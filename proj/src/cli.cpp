#include "gammacf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gammacf/comparison.hpp"
#include "gammacf/scans.hpp"
#include "gammacf/solver.hpp"

namespace gammacf::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decimal digits that a `bits`-bit endpoint carries, plus two.
int digits_for(Precision bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30103)) + 2; }

json interval_json(const Interval& v) {
    const int d = digits_for(v.precision());
    return json{{"lo", v.lo_str(d)}, {"hi", v.hi_str(d)}, {"bits", v.precision()}};
}

std::string rational_decimal(const BigRational& q, int digits = 30) {
    const Interval v = Interval::from_rational(q, 256);
    return v.mid() == 0 && q.is_zero() ? "0" : v.lo_str(digits);
}

// Uniform verification row: n, quantity, lower_bound, value_lo, value_hi, upper_bound, verdict.
struct Row {
    std::string n;
    std::string quantity;
    std::string lower;
    std::string value_lo;
    std::string value_hi;
    std::string upper;
    std::string verdict;
};

const char* kCrlf = "\r\n";

void write_csv(std::ostream& out, const std::vector<Row>& rows) {
    out << "n,quantity,lower_bound,value_lo,value_hi,upper_bound,verdict" << kCrlf;
    for (const auto& r : rows) {
        out << csv_field(r.n) << ',' << csv_field(r.quantity) << ',' << csv_field(r.lower) << ','
            << csv_field(r.value_lo) << ',' << csv_field(r.value_hi) << ',' << csv_field(r.upper) << ','
            << csv_field(r.verdict) << kCrlf;
    }
}

json row_json(const Row& r) {
    return json{{"n", r.n},           {"quantity", r.quantity}, {"lower_bound", r.lower}, {"value_lo", r.value_lo},
                {"value_hi", r.value_hi}, {"upper_bound", r.upper}, {"verdict", r.verdict}};
}

Row check_row(const CheckRow& c, int digits) {
    return {std::to_string(c.n),
            c.quantity,
            c.lower ? c.lower->str() : "",
            c.value.lo_str(digits),
            c.value.hi_str(digits),
            c.upper ? c.upper->str() : "",
            c.holds ? "pass" : "fail"};
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

json rationals_json(const std::vector<BigRational>& v) {
    json a = json::array();
    for (const auto& q : v) {
        a.push_back(q.str());
    }
    return a;
}

// ---------------------------------------------------------------- solve

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k_max < 1) {
        throw UsageError("--kmax must be at least 1");
    }
    if (cfg.k_max > kTabulatedDepth && !cfg.beyond_paper) {
        throw UsageError("--kmax above 13 requires --beyond-paper");
    }
    const int tabulated = std::min(cfg.k_max, kTabulatedDepth);
    const CFCoefficients expected_a = theorem1_coefficients();
    const std::vector<BigRational> expected_c = tabulated_rate_constants();

    SolveResult res = solve_all(tabulated);
    std::string beyond_error;
    for (int k = tabulated + 1; k <= cfg.k_max; ++k) {
        try {
            NextCoefficient next = solve_next(res.coeffs);
            res.coeffs.a.push_back(next.value);
            res.paths.push_back(next.path);
            res.steps.push_back(next);
            res.rate_constants.push_back(difference_report(res.coeffs).rate_constant);
        } catch (const Error& e) {
            beyond_error = "a_" + std::to_string(k) + ": " + e.what();
            break;
        }
    }

    bool match = true;
    for (int k = 1; k <= tabulated; ++k) {
        const size_t i = static_cast<size_t>(k - 1);
        match = match && res.coeffs.a[i] == expected_a.a[i] && res.rate_constants[i] == expected_c[i];
    }
    const bool conj = std::all_of(res.conjecture_holds.begin(), res.conjecture_holds.end(), [](bool b) { return b; });
    const bool pass = match && beyond_error.empty();

    const int solved = res.coeffs.depth();
    auto expected_at = [&](const std::vector<BigRational>& table, int k) {
        return k <= kTabulatedDepth ? table[static_cast<size_t>(k - 1)].str() : std::string();
    };

    if (cfg.format == OutputFormat::Json) {
        json j;
        j["schema"] = 1;
        j["command"] = "solve";
        j["k_max"] = cfg.k_max;
        j["a"] = rationals_json(res.coeffs.a);
        j["a_expected"] = rationals_json(expected_a.prefix(tabulated).a);
        j["C"] = rationals_json(res.rate_constants);
        j["C_expected"] = rationals_json(std::vector<BigRational>(expected_c.begin(), expected_c.begin() + tabulated));
        json paths = json::array();
        json affine = json::array();
        for (int k = 1; k <= solved; ++k) {
            const auto& s = res.steps[static_cast<size_t>(k - 1)];
            paths.push_back(std::string(to_string(s.path)));
            affine.push_back(json{{"k", k}, {"intercept", s.intercept.str()}, {"slope", s.slope.str()}});
        }
        j["paths"] = paths;
        j["affine"] = affine;
        j["conjecture_holds"] = res.conjecture_holds;
        if (cfg.k_max > kTabulatedDepth) {
            j["beyond_paper"] = json{{"requested", cfg.k_max}, {"solved", solved}, {"error", beyond_error}};
        }
        j["match"] = match;
        j["pass"] = pass;
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        out << "k,a,a_expected,C,C_expected,path,match" << kCrlf;
        for (int k = 1; k <= solved; ++k) {
            const size_t i = static_cast<size_t>(k - 1);
            const bool ok = k > kTabulatedDepth ||
                            (res.coeffs.a[i] == expected_a.a[i] && res.rate_constants[i] == expected_c[i]);
            out << k << ',' << csv_field(res.coeffs.a[i].str()) << ',' << csv_field(expected_at(expected_a.a, k))
                << ',' << csv_field(res.rate_constants[i].str()) << ',' << csv_field(expected_at(expected_c, k))
                << ',' << to_string(res.paths[i]) << ',' << (ok ? "true" : "false") << kCrlf;
        }
    } else {
        out << "k   a_k                                 C_k                                        path\n";
        for (int k = 1; k <= solved; ++k) {
            const size_t i = static_cast<size_t>(k - 1);
            out << std::left << std::setw(4) << k << std::setw(36) << res.coeffs.a[i].str() << std::setw(43)
                << res.rate_constants[i].str() << to_string(res.paths[i]) << '\n';
        }
        for (size_t j = 0; j < res.conjecture_holds.size(); ++j) {
            out << "a_" << 2 * j + 3 << " = -a_" << 2 * j + 2 << ": " << (res.conjecture_holds[j] ? "yes" : "no")
                << '\n';
        }
        if (!beyond_error.empty()) {
            out << "beyond table: " << beyond_error << '\n';
        }
        out << "table match: " << (match ? "yes" : "no") << (conj ? "" : " (alternation fails)") << '\n';
    }
    return pass ? kPass : kFail;
}

// ---------------------------------------------------------------- verify

namespace {

std::vector<Row> verify_appendix_rows() {
    std::vector<Row> rows;
    const auto ok = validate_appendix();
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        const bool eq = ok[static_cast<size_t>(k - 1)];
        rows.push_back({std::to_string(k), "R" + std::to_string(k) + " continued fraction vs closed form", "",
                        eq ? "equal" : "differ", eq ? "equal" : "differ", "", verdict(eq)});
    }
    return rows;
}

Row identity_row(const std::string& label, const BigRational& computed, const BigRational& expected) {
    return {"", label, expected.str(), computed.str(), computed.str(), expected.str(), verdict(computed == expected)};
}

std::vector<Row> verify_identity_rows() {
    const auto c = tabulated_rate_constants();
    const auto a = theorem1_coefficients();
    std::vector<Row> rows;
    rows.push_back(identity_row("C10 = -D1/132", c[9], -bound_constant_d1() / 132));
    rows.push_back(identity_row("C11 = D2/156", c[10], bound_constant_d2() / 156));

    struct Leading {
        int k;
        const char* l;
    };
    for (const Leading& lead : {Leading{8, "58081/2446472"}, Leading{9, "-262445/9197496"},
                                Leading{13, "-500649950017/2576034146400"}}) {
        const DifferenceReport rep = difference_report(a.prefix(lead.k));
        const std::string k = std::to_string(lead.k);
        rows.push_back(identity_row("leading coefficient of r" + k + "(n) - r" + k + "(n+1)", rep.leading_coeff,
                                    BigRational::parse(lead.l)));
        rows.push_back(identity_row("leading order for depth " + k, BigRational(rep.leading_order),
                                    BigRational(lead.k + 2)));
        rows.push_back(identity_row("C" + k + " = l/(s-1)", rep.rate_constant, c[static_cast<size_t>(lead.k - 1)]));
    }
    // Order-9 coefficient of r_8(n) - r_8(n+1) as a function of a_8.
    const NextCoefficient step = solve_next(a.prefix(7));
    rows.push_back(identity_row("a8 intercept", step.intercept, rat(-8, 9) + rat(360030, 396900)));
    rows.push_back(identity_row("a8 slope", step.slope, rat(-6241, 396900)));
    rows.push_back(identity_row("a8", step.value, a.a[7]));
    return rows;
}

std::vector<Row> verify_derivative_rows() {
    std::vector<Row> rows;
    for (auto which : {DerivativeBound::FR10, DerivativeBound::GR11}) {
        for (long x : {1L, 2L, 10L, 100L, 1000000L}) {
            const DerivativeCheck c = derivative_bound_check(which, BigRational(x));
            const std::string q = which == DerivativeBound::FR10 ? "-f'(x)" : "-g'(x)";
            rows.push_back({std::to_string(x), q, c.lower.str(), rational_decimal(c.value), rational_decimal(c.value),
                            c.upper.str(), verdict(c.holds)});
        }
    }
    return rows;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const std::string target = cfg.target.empty() ? "all" : cfg.target;
    std::vector<std::pair<std::string, std::vector<Row>>> groups;
    if (target == "appendix" || target == "all") {
        groups.emplace_back("appendix", verify_appendix_rows());
    }
    if (target == "identities" || target == "all") {
        groups.emplace_back("identities", verify_identity_rows());
    }
    if (target == "derivatives" || target == "all") {
        groups.emplace_back("derivatives", verify_derivative_rows());
    }
    if (groups.empty()) {
        throw UsageError("unknown verify target '" + target + "'");
    }
    size_t total = 0;
    size_t passed = 0;
    for (const auto& [name, rows] : groups) {
        for (const auto& r : rows) {
            ++total;
            passed += r.verdict == "pass";
        }
    }
    const bool pass = passed == total;

    if (cfg.format == OutputFormat::Json) {
        json j;
        j["schema"] = 1;
        j["command"] = "verify";
        j["target"] = target;
        json g = json::array();
        for (const auto& [name, rows] : groups) {
            json rs = json::array();
            for (const auto& r : rows) {
                rs.push_back(row_json(r));
            }
            g.push_back(json{{"name", name}, {"rows", rs}});
        }
        j["groups"] = g;
        j["passed"] = passed;
        j["total"] = total;
        j["pass"] = pass;
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        std::vector<Row> all;
        for (const auto& [name, rows] : groups) {
            all.insert(all.end(), rows.begin(), rows.end());
        }
        write_csv(out, all);
    } else {
        for (const auto& [name, rows] : groups) {
            size_t ok = 0;
            for (const auto& r : rows) {
                ok += r.verdict == "pass";
            }
            out << name << ": " << ok << "/" << rows.size() << " pass\n";
            for (const auto& r : rows) {
                if (r.verdict != "pass") {
                    out << "  FAIL " << r.n << ' ' << r.quantity << ": " << r.value_lo << " vs [" << r.lower << ", "
                        << r.upper << "]\n";
                }
            }
        }
        out << "total: " << passed << "/" << total << " pass\n";
    }
    return pass ? kPass : kFail;
}

// ---------------------------------------------------------------- bracket

namespace {

std::string common_prefix(const std::string& a, const std::string& b) {
    size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) {
        ++i;
    }
    return a.substr(0, i);
}

}  // namespace

int cmd_bracket(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1) {
        throw UsageError("--n must be at least 1");
    }
    const GammaBracket b = gamma_bracket(cfg.n, cfg.precision_bits, cfg.escalation_cap_bits);
    const int d = b.certified_digits + 6;
    const std::string prefix = common_prefix(b.lower.lo_str(d), b.upper.hi_str(d));

    if (cfg.format == OutputFormat::Json) {
        json j;
        j["schema"] = 1;
        j["command"] = "bracket";
        j["n"] = b.n;
        j["precision"] = b.precision();
        j["lower"] = interval_json(b.lower);
        j["upper"] = interval_json(b.upper);
        j["certified_digits"] = b.certified_digits;
        j["agreed_prefix"] = prefix;
        j["conditional_on"] = "r10(n) < gamma < r11(n)";
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        out << "n,precision,lower_lo,lower_hi,upper_lo,upper_hi,certified_digits,agreed_prefix" << kCrlf;
        const int full = digits_for(b.precision());
        out << b.n << ',' << b.precision() << ',' << b.lower.lo_str(full) << ',' << b.lower.hi_str(full) << ','
            << b.upper.lo_str(full) << ',' << b.upper.hi_str(full) << ',' << b.certified_digits << ','
            << csv_field(prefix) << kCrlf;
    } else {
        const int shown = std::min(digits_for(b.precision()), b.certified_digits + 10);
        out << "n                " << b.n << '\n'
            << "precision        " << b.precision() << " bits\n"
            << "r10(n)           [" << b.lower.lo_str(shown) << ", " << b.lower.hi_str(shown) << "]\n"
            << "r11(n)           [" << b.upper.lo_str(shown) << ", " << b.upper.hi_str(shown) << "]\n"
            << "certified digits " << b.certified_digits << '\n'
            << "gamma            " << prefix << "...\n";
    }
    return kPass;
}

// ---------------------------------------------------------------- scan

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    const std::string target = cfg.target.empty() ? "all" : cfg.target;
    const long first = cfg.range_first;
    const long last = cfg.range_last;
    if (first < 1 || last < first) {
        throw UsageError("--range must be A:B with 1 <= A <= B");
    }
    if (target == "lu3" && first < 2) {
        throw UsageError("the lu3 scan needs a range starting at 2 or later");
    }
    const ScanOptions opts{cfg.precision_bits, cfg.escalation_cap_bits, 0};

    std::vector<ScanReport> reports;
    auto want = [&](std::initializer_list<const char*> names) {
        return std::any_of(names.begin(), names.end(), [&](const char* s) { return target == s; });
    };
    bool known = false;
    if (want({"thm2", "thm2_r10", "all"})) {
        reports.push_back(scan_inequalities(Inequality::Thm2R10, first, last, opts));
        known = true;
    }
    if (want({"thm2", "thm2_r11", "all"})) {
        reports.push_back(scan_inequalities(Inequality::Thm2R11, first, last, opts));
        known = true;
    }
    if (want({"lu", "lu2", "all"})) {
        reports.push_back(scan_inequalities(Inequality::Lu2, first, last, opts));
        known = true;
    }
    if (want({"lu", "lu3", "all"})) {
        if (std::max(first, 2L) <= last) {
            reports.push_back(scan_inequalities(Inequality::Lu3, std::max(first, 2L), last, opts));
        }
        known = true;
    }
    if (want({"monotonicity", "all"})) {
        reports.push_back(scan_monotonicity(10, first, last, opts));
        reports.push_back(scan_monotonicity(11, first, last, opts));
        reports.push_back(scan_bracket_order(first, last));
        known = true;
    }
    if (!known) {
        throw UsageError("unknown scan target '" + target + "'");
    }

    size_t violations = 0;
    for (const auto& r : reports) {
        violations += r.violations();
    }
    const int digits = 25;

    if (cfg.format == OutputFormat::Json) {
        json j;
        j["schema"] = 1;
        j["command"] = "scan";
        j["target"] = target;
        j["range"] = {first, last};
        json scans = json::array();
        for (const auto& r : reports) {
            json bad = json::array();
            for (const auto& row : r.rows) {
                if (!row.holds) {
                    bad.push_back(row_json(check_row(row, digits)));
                }
            }
            scans.push_back(json{{"name", r.name},
                                 {"first", r.first},
                                 {"last", r.last},
                                 {"checked", r.rows.size()},
                                 {"violations", r.violations()},
                                 {"max_bits", r.max_precision},
                                 {"violation_rows", bad}});
        }
        j["scans"] = scans;
        j["pass"] = violations == 0;
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        std::vector<Row> rows;
        for (const auto& r : reports) {
            for (const auto& row : r.rows) {
                rows.push_back(check_row(row, digits));
            }
        }
        write_csv(out, rows);
    } else {
        for (const auto& r : reports) {
            out << std::left << std::setw(18) << r.name << " n in [" << r.first << ", " << r.last << "]  checked "
                << r.rows.size() << "  violations " << r.violations() << "  max bits " << r.max_precision << '\n';
            for (const auto& row : r.rows) {
                if (!row.holds) {
                    const Row pr = check_row(row, digits);
                    out << "  FAIL n=" << pr.n << ' ' << pr.quantity << " in [" << pr.value_lo << ", " << pr.value_hi
                        << "]\n";
                }
            }
        }
        out << "total violations: " << violations << '\n';
    }
    return violations == 0 ? kPass : kFail;
}

// ---------------------------------------------------------------- compare

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    const long n = cfg.n == 0 ? 100 : cfg.n;
    if (n < 1) {
        throw UsageError("--n must be at least 1");
    }
    const Precision p = cfg.precision_bits;
    const Interval gamma = gamma_bracket(1000 * n, p, cfg.escalation_cap_bits).enclosure();
    const auto seqs = all_comparison_sequences();
    const auto table = comparison_table(n, gamma, p, seqs);

    std::vector<OrderCheck> orders;
    for (const auto& s : seqs) {
        orders.push_back(order_check(s, n, 10 * n, gamma, p));
    }

    // |r13(n) - gamma| against every rival that has a usable reading.
    const ComparisonRow* r13 = nullptr;
    for (const auto& r : table) {
        if (r.seq.kind == SequenceKind::LuCF && r.seq.depth == kTabulatedDepth) {
            r13 = &r;
        }
    }
    auto abs_hi = [](const Interval& e) { return std::max(std::fabs(e.mid()) + e.width(), 0.0); };
    auto abs_lo = [](const Interval& e) { return std::max(std::fabs(e.mid()) - e.width(), 0.0); };
    bool r13_best = true;
    bool orders_ok = true;
    std::vector<std::string> verdicts;
    for (size_t i = 0; i < seqs.size(); ++i) {
        const auto& s = seqs[i];
        const bool printed = s.reading == Reading::AsPrinted;
        if (s.kind != SequenceKind::LuCF && !printed) {
            r13_best = r13_best && abs_hi(r13->error) < abs_lo(table[i].error);
        }
        if (printed) {
            verdicts.emplace_back(orders[i].achieves_claimed ? "pass" : "reading-rejected");
        } else {
            orders_ok = orders_ok && orders[i].achieves_claimed;
            verdicts.emplace_back(verdict(orders[i].achieves_claimed));
        }
    }
    const bool pass = orders_ok && r13_best;
    const int digits = 20;

    auto fixed = [](double v) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(3) << v;
        return os.str();
    };

    if (cfg.format == OutputFormat::Json) {
        json j;
        j["schema"] = 1;
        j["command"] = "compare";
        j["n"] = n;
        j["gamma"] = interval_json(gamma);
        json rows = json::array();
        for (size_t i = 0; i < seqs.size(); ++i) {
            rows.push_back(json{{"sequence", seqs[i].name()},
                                {"claimed_order", seqs[i].claimed_order()},
                                {"value", interval_json(table[i].value)},
                                {"error", interval_json(table[i].error)},
                                {"estimated_order", fixed(orders[i].estimated_order)},
                                {"order_n2", 10 * n},
                                {"verdict", verdicts[i]}});
        }
        j["rows"] = rows;
        j["r13_smallest_error"] = r13_best;
        j["pass"] = pass;
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        std::vector<Row> rows;
        for (size_t i = 0; i < seqs.size(); ++i) {
            rows.push_back({std::to_string(n), seqs[i].name() + "(n) - gamma", "", table[i].error.lo_str(digits),
                            table[i].error.hi_str(digits), "", verdicts[i]});
        }
        write_csv(out, rows);
    } else {
        out << "n = " << n << ", gamma from bracket at n = " << 1000 * n << "\n";
        out << std::left << std::setw(22) << "sequence" << std::setw(8) << "claim" << std::setw(10) << "observed"
            << std::setw(30) << "value - gamma" << "verdict\n";
        for (size_t i = 0; i < seqs.size(); ++i) {
            out << std::left << std::setw(22) << seqs[i].name() << std::setw(8) << seqs[i].claimed_order()
                << std::setw(10) << fixed(orders[i].estimated_order) << std::setw(30) << table[i].error.lo_str(8)
                << verdicts[i] << '\n';
        }
        out << "r13 has the smallest error: " << (r13_best ? "yes" : "no") << '\n';
    }
    return pass ? kPass : kFail;
}

// ---------------------------------------------------------------- rates

int cmd_rates(const RunConfig& cfg, std::ostream& out) {
    const long n = cfg.n == 0 ? 1000 : cfg.n;
    if (n < 1) {
        throw UsageError("--n must be at least 1");
    }
    if (cfg.k_max < 1 || cfg.k_max > kTabulatedDepth) {
        throw UsageError("--kmax must be in 1..13 for rates");
    }
    const Precision p = cfg.precision_bits;
    const Interval gamma = gamma_bracket(100 * n, p, cfg.escalation_cap_bits).enclosure();
    const auto c = tabulated_rate_constants();

    struct RateRow {
        std::string name;
        BigRational expected;
        Interval value;
        double rel_dev;
        bool sign_ok;
    };
    std::vector<RateRow> rows;
    for (int k = 1; k <= cfg.k_max; ++k) {
        const BigRational& ck = c[static_cast<size_t>(k - 1)];
        Interval v = empirical_rate(k, n, p, gamma, cfg.escalation_cap_bits);
        const double dev = (v.mid() - ck.to_double()) / ck.to_double();
        const bool sign_ok = ck.sign() > 0 ? v.certainly_positive() : v.certainly_negative();
        rows.push_back({"r" + std::to_string(k), ck, std::move(v), dev, sign_ok});
    }
    {
        const ComparisonSequence nu{SequenceKind::MorticiChenNu, 0, Reading::Corrected};
        Interval v = (comparison_value(nu, n, p) - gamma) * BigRational(n).pow(12);
        const BigRational ck = nu_rate_constant();
        const double dev = (v.mid() - ck.to_double()) / ck.to_double();
        const bool sign_ok = v.certainly_negative();
        rows.push_back({"nu", ck, std::move(v), dev, sign_ok});
    }
    const bool pass = std::all_of(rows.begin(), rows.end(), [](const RateRow& r) { return r.sign_ok; });
    const int digits = 20;

    if (cfg.format == OutputFormat::Json) {
        json j;
        j["schema"] = 1;
        j["command"] = "rates";
        j["n"] = n;
        json rs = json::array();
        for (const auto& r : rows) {
            std::ostringstream dev;
            dev << std::scientific << std::setprecision(6) << r.rel_dev;
            rs.push_back(json{{"sequence", r.name},
                              {"expected", r.expected.str()},
                              {"scaled_error", interval_json(r.value)},
                              {"relative_deviation", dev.str()},
                              {"sign_matches", r.sign_ok}});
        }
        j["rows"] = rs;
        j["pass"] = pass;
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        std::vector<Row> out_rows;
        for (const auto& r : rows) {
            out_rows.push_back({std::to_string(n), "n^order (" + r.name + "(n) - gamma)", r.expected.str(),
                                r.value.lo_str(digits), r.value.hi_str(digits), r.expected.str(), verdict(r.sign_ok)});
        }
        write_csv(out, out_rows);
    } else {
        out << "n = " << n << "\n";
        for (const auto& r : rows) {
            out << std::left << std::setw(5) << r.name << std::setw(28) << r.value.lo_str(12) << std::setw(44)
                << r.expected.str() << std::scientific << std::setprecision(3) << r.rel_dev << std::defaultfloat
                << (r.sign_ok ? "" : "  SIGN MISMATCH") << '\n';
        }
    }
    return pass ? kPass : kFail;
}

// ---------------------------------------------------------------- entry

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') {
            q += '"';
        }
        q += ch;
    }
    return q + '"';
}

namespace {

Precision default_precision() {
    const char* env = std::getenv("GAMMA_CF_BITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultPrecision;
    }
    try {
        size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size() || v < 16) {
            throw std::invalid_argument(env);
        }
        return static_cast<Precision>(v);
    } catch (const std::exception&) {
        throw UsageError(std::string("GAMMA_CF_BITS must be an integer >= 16, got '") + env + "'");
    }
}

void parse_range(const std::string& text, RunConfig& cfg) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("--range expects A:B");
    }
    try {
        size_t u1 = 0;
        size_t u2 = 0;
        const std::string a = text.substr(0, colon);
        const std::string b = text.substr(colon + 1);
        cfg.range_first = std::stol(a, &u1);
        cfg.range_last = std::stol(b, &u2);
        if (u1 != a.size() || u2 != b.size()) {
            throw std::invalid_argument(text);
        }
    } catch (const std::logic_error&) {
        throw UsageError("--range expects integers A:B, got '" + text + "'");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string format = "plain";
    std::string range;
    long bits = 0;

    CLI::App app{"Continued-fraction approximations of the Euler-Mascheroni constant", "gammacf"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    };
    auto add_precision = [&](CLI::App* sub) {
        sub->add_option("--bits", bits, "Working precision in bits (default $GAMMA_CF_BITS or 256)")
            ->check(CLI::Range(16L, 1L << 20));
        sub->add_option("--escalation-cap", cfg.escalation_cap_bits, "Largest precision tried when escalating")
            ->check(CLI::Range(Precision{16}, Precision{1} << 22));
    };

    auto* solve = app.add_subcommand("solve", "Re-derive a_1..a_k and C_1..C_k");
    solve->add_option("--kmax", cfg.k_max, "Depth to solve");
    solve->add_flag("--beyond-paper", cfg.beyond_paper, "Allow depths above 13");
    add_format(solve);

    auto* verify = app.add_subcommand("verify", "Exact checks: appendix | identities | derivatives | all");
    verify->add_option("target", cfg.target, "What to verify");
    add_format(verify);

    auto* bracket = app.add_subcommand("bracket", "Enclose gamma between r10(n) and r11(n)");
    bracket->add_option("--n", cfg.n, "Index n")->required();
    add_precision(bracket);
    add_format(bracket);

    auto* scan = app.add_subcommand("scan", "Inequality scans: thm2 | thm2_r10 | thm2_r11 | lu | lu2 | lu3 | "
                                            "monotonicity | all");
    scan->add_option("target", cfg.target, "Scan to run");
    scan->add_option("--range", range, "Inclusive n range A:B (default 1:10000)");
    add_precision(scan);
    add_format(scan);

    auto* compare = app.add_subcommand("compare", "Error table of rival sequences at n");
    compare->add_option("--n", cfg.n, "Index n (default 100)");
    add_precision(compare);
    add_format(compare);

    auto* rates = app.add_subcommand("rates", "Empirical n^(k+1) (r_k(n) - gamma) against C_k");
    rates->add_option("--n", cfg.n, "Index n (default 1000)");
    rates->add_option("--kmax", cfg.k_max, "Largest depth");
    add_precision(rates);
    add_format(rates);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        cfg.precision_bits = bits != 0 ? static_cast<Precision>(bits) : default_precision();
        cfg.format = format == "json" ? OutputFormat::Json : (format == "csv" ? OutputFormat::Csv : OutputFormat::Plain);
        if (!range.empty()) {
            parse_range(range, cfg);
        }
        if (cfg.escalation_cap_bits < cfg.precision_bits) {
            cfg.escalation_cap_bits = cfg.precision_bits;
        }
        if (solve->parsed()) {
            cfg.command = "solve";
            return cmd_solve(cfg, out);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg, out);
        }
        if (bracket->parsed()) {
            cfg.command = "bracket";
            return cmd_bracket(cfg, out);
        }
        if (scan->parsed()) {
            cfg.command = "scan";
            return cmd_scan(cfg, out);
        }
        if (compare->parsed()) {
            cfg.command = "compare";
            return cmd_compare(cfg, out);
        }
        if (rates->parsed()) {
            cfg.command = "rates";
            return cmd_rates(cfg, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}

}  // namespace gammacf::cli
