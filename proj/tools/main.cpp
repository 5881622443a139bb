#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "polarmod/cli.hpp"

using namespace polarmod;
using namespace polarmod::cli;

int main(int argc, char** argv) {
    CLI::App app{"Polar decompositions and generalized inverses of operator\n"
                 "matrices over block matrix algebras, diagonal multiplication\n"
                 "operators over interval domains, and graded operator families."};

    Options opt;
    if (const char* env = std::getenv("POLARMOD_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end && *end == '\0' && v > 0.0) opt.tol = v;
    }

    std::string command;
    std::string problem_path;
    app.add_option("command", command,
                   "polar | pinv | btransform | inv-btransform | verify-thm31 | "
                   "check-complemented | closed-range | classify | graded-report | selftest")
        ->required();
    app.add_option("problem", problem_path, "problem file (JSON)");
    app.add_option("--tol", opt.tol, "identity-check tolerance")->capture_default_str();
    app.add_option("--rank-tol", opt.rank_tol, "singular-value cutoff for rank decisions")
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized commands")->capture_default_str();
    std::size_t components = 0;
    auto* comp_opt =
        app.add_option("--components", components, "truncate a graded family to this many components");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (comp_opt->count() > 0) opt.components = components;

    std::optional<ProblemFile> problem;
    if (!problem_path.empty()) {
        try {
            problem = parse_problem(problem_path);
        } catch (const Error& e) {
            std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
            return 2;
        }
    }
    if (command != "selftest" && !problem) {
        std::cerr << "error: command '" << command << "' needs a problem file\n";
        return 2;
    }

    const Report rep = run_command(command, problem, opt);
    std::cout << emit_report(rep, opt.format);
    return rep.exit_code;
}
