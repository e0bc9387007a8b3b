#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gammacf/evaluator.hpp"

namespace gammacf::cli {

enum class OutputFormat { Plain, Json, Csv };

/// Parsed invocation. One value per flag; commands ignore what they don't use.
struct RunConfig {
    std::string command;
    std::string target;  ///< verify / scan topic
    int k_max = kTabulatedDepth;
    long n = 0;
    long range_first = 1;
    long range_last = 10000;
    Precision precision_bits = kDefaultPrecision;
    Precision escalation_cap_bits = kDefaultEscalationCap;
    OutputFormat format = OutputFormat::Plain;
    bool beyond_paper = false;
};

/// Exit codes: 0 all checks pass, 1 a check failed or precision ran out,
/// 2 invalid invocation.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs one invocation; args exclude the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_bracket(const RunConfig& cfg, std::ostream& out);
int cmd_scan(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out);
int cmd_rates(const RunConfig& cfg, std::ostream& out);

/// Minimal RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace gammacf::cli
