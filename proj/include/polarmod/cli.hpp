#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "polarmod/polar.hpp"

namespace polarmod::cli {

using nlohmann::json;

enum class Backend { Matrix, Function, Graded };

std::string backend_name(Backend b);

// Command-line options; every tolerance the math modules consume is
// surfaced here exactly once.
struct Options {
    double tol = 1e-8;
    double rank_tol = 1e-10;
    std::string format = "text";  // "text" | "json"
    std::uint64_t seed = 42;
    std::optional<std::size_t> components;  // graded truncation override

    Tolerances tolerances() const {
        Tolerances t;
        t.identity_tol = tol;
        t.rank_tol = rank_tol;
        return t;
    }
};

struct ProblemFile {
    Backend backend = Backend::Matrix;
    // matrix / graded
    std::optional<BlockProfile> profile;
    std::optional<OperatorMatrix> op;
    std::vector<OperatorMatrix> components;
    // function
    std::optional<DiagOperator> diag;
    // options block of the file (overridden by CLI flags)
    std::optional<double> file_tol;
    std::optional<double> file_rank_tol;
};

ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_json(const json& j);

json operator_to_json(const OperatorMatrix& op);
OperatorMatrix operator_from_json(const BlockProfile& p, const json& j, const std::string& where);
json diag_to_json(const DiagOperator& d);

struct Report {
    std::string command;
    std::string backend;
    std::map<std::string, bool> verdicts;
    std::map<std::string, double> residuals;
    json payload = json::object();
    std::optional<std::string> certificate;
    std::optional<std::string> error;         // stable error kind
    std::optional<std::string> error_detail;  // human-readable message
    double elapsed_ms = 0.0;                  // text output only
    int exit_code = 0;
};

// cmd in {polar, pinv, btransform, inv-btransform, verify-thm31,
// check-complemented, closed-range, classify, graded-report, selftest};
// selftest needs no problem file.
Report run_command(const std::string& cmd, const std::optional<ProblemFile>& problem,
                   const Options& opt);

std::string emit_report(const Report& rep, const std::string& format);

// Randomized invariant suites; returns (passed, failed).
std::pair<int, int> run_selftest(std::uint64_t seed, int trials, const Tolerances& tol);

}  // namespace polarmod::cli
