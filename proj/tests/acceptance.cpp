// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "polarmod/cli.hpp"
#include "polarmod/random_gen.hpp"

using namespace polarmod;

namespace {

constexpr double kIdentityTol = 1e-8;
constexpr double kAdjointTol = 1e-10;
constexpr std::uint64_t kSeed = 2024;
constexpr int kCorpusSize = 200;

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << idx << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::vector<OperatorMatrix> corpus() {
    InstanceGen gen(kSeed);
    std::vector<OperatorMatrix> ops;
    for (int i = 0; i < kCorpusSize; ++i) ops.push_back(gen.op(gen.profile()));
    return ops;
}

double max_residual(const std::map<std::string, double>& rs) {
    double m = 0.0;
    for (const auto& [_, r] : rs) m = std::max(m, r);
    return m;
}

// --- criteria 1-4 and 7 share the corpus ---

bool g_cor_ok = true;
std::string g_cor_detail;

void run_corpus_criteria() {
    const auto ops = corpus();
    const auto t0 = std::chrono::steady_clock::now();

    bool thm_ok = true, round_ok = true, commute_ok = true, dual_ok = true, cor_ok = true;
    std::string thm_detail, round_detail, commute_detail, dual_detail, cor_detail;
    const std::vector<std::vector<double>> polys = {
        {1.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}, {0.0, -1.0, 0.0, 3.0}};

    for (std::size_t i = 0; i < ops.size(); ++i) {
        const OperatorMatrix& b = ops[i];
        const RegularOperator t = RegularOperator::from_matrix(b);

        const Thm31Report rep = verify_thm31(t);
        if (!(rep.cond_i && rep.cond_ii && rep.cond_iii && rep.max_residual <= kIdentityTol)) {
            thm_ok = false;
            thm_detail = "instance " + std::to_string(i) +
                         " max residual " + std::to_string(rep.max_residual);
        }

        const OperatorMatrix f = btransform(t);
        const RegularOperator back = inverse_btransform(f);
        if (op_norm(back.matrix() - b) > kIdentityTol * (1.0 + op_norm(b))) {
            round_ok = false;
            round_detail = "instance " + std::to_string(i);
        }
        const RegularOperator tstar = RegularOperator::from_matrix(op_adjoint(b));
        if (op_norm(op_adjoint(f) - btransform(tstar)) > kAdjointTol) {
            round_ok = false;
            round_detail = "adjoint transform, instance " + std::to_string(i);
        }

        for (const auto& poly : polys) {
            const auto [r1, r2] = remark22_residuals(t, poly);
            if (r1 > kIdentityTol || r2 > kIdentityTol) {
                commute_ok = false;
                commute_detail = "instance " + std::to_string(i);
            }
        }

        const GeneralizedInverse gi = generalized_inverse(t);
        const GeneralizedInverse gistar = generalized_inverse(tstar);
        if (op_norm(gi.s - gi.s_alt) > kIdentityTol ||
            max_residual(gi.residuals) > kIdentityTol ||
            graph_decomposition_check(t, gi.s, gistar.s) > kIdentityTol) {
            dual_ok = false;
            dual_detail = "instance " + std::to_string(i);
        }

        if (cor32_check(t) > kIdentityTol || adjoint_polar_check(t) > kIdentityTol ||
            !closed_range_suite(t).consistent) {
            cor_ok = false;
            cor_detail = "instance " + std::to_string(i);
        }
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 10.0) {
        thm_ok = false;
        thm_detail = "runtime " + std::to_string(secs) + "s";
    }

    report(1, "positive suite, 200 random operators", thm_ok, thm_detail);
    report(2, "bounded-transform round trip", round_ok, round_detail);
    report(3, "polynomial commutation identities", commute_ok, commute_detail);
    report(4, "dual construction and graph decomposition", dual_ok, dual_detail);

    // remaining parts of criterion 7: graded and function instances
    bool extra = cor_ok;
    GradedOperator g;
    {
        const BlockProfile p({1});
        for (int n = 1; n <= 20; ++n) {
            CMat m(1, 1);
            m(0, 0) = 1.0 / n;
            g.components.push_back(RegularOperator::from_matrix(
                OperatorMatrix(p, 1, 1, {AlgElement(p, {m})})));
        }
    }
    if (!closed_range_suite(g).consistent) {
        extra = false;
        cor_detail = "graded suite inconsistent";
    }
    const Domain1D unit({{Rational(0), Rational(1)}});
    const DiagOperator fx(unit, {PwRational::coordinate(unit)});
    const DiagOperator fxm2(
        unit, {PwRational::coordinate(unit) - PwRational::constant(unit, CRational(Rational(2)))});
    if (!closed_range_suite(fx).consistent || !closed_range_suite(fxm2).consistent) {
        extra = false;
        cor_detail = "function suite inconsistent";
    }
    g_cor_ok = extra;
    g_cor_detail = cor_detail;
}

// --- criterion 5: exact dichotomy ---

void run_dichotomy() {
    bool ok = true;
    std::string detail;
    const Domain1D unit({{Rational(0), Rational(1)}});

    const DiagThm31Report neg =
        verify_thm31(DiagOperator(unit, {PwRational::coordinate(unit)}));
    if (neg.cond_i || neg.cond_ii || neg.cond_iii || neg.certificate != "0") {
        ok = false;
        detail = "coordinate function not rejected with certificate 0";
    }

    const DiagThm31Report pos = verify_thm31(DiagOperator(
        unit, {PwRational::coordinate(unit) - PwRational::constant(unit, CRational(Rational(2)))}));
    if (!(pos.cond_i && pos.cond_ii && pos.cond_iii && pos.exact)) {
        ok = false;
        detail = "x-2 not accepted exactly";
    }

    // randomized rejected family: one rational root strictly inside [0,1]
    InstanceGen gen(kSeed + 1);
    for (int it = 0; it < 20 && ok; ++it) {
        const Rational root(1 + gen.index(9), 10 + gen.index(5));  // in (0, 1)
        const RatPoly num({CRational(-root), CRational(Rational(1))});          // x - root
        const RatPoly shift({CRational(Rational(1 + gen.index(4))), CRational(Rational(1))});
        const DiagOperator t(unit, {PwRational::from_fraction(unit, num * shift,
                                                              RatPoly::constant(CRational(Rational(1))))});
        const DiagThm31Report rep = verify_thm31(t);
        if (rep.cond_i || rep.cond_ii || rep.cond_iii) {
            ok = false;
            detail = "interior-root instance accepted";
        }
    }

    // randomized accepted family: component-constant vanishing, no other roots
    const Domain1D two({{Rational(0), Rational(1)}, {Rational(2), Rational(3)}});
    for (int it = 0; it < 20 && ok; ++it) {
        std::vector<PwRational> entries;
        const std::size_t rank = 1 + gen.index(2);
        for (std::size_t e = 0; e < rank; ++e) {
            std::vector<std::vector<PwRational::Piece>> pieces;
            bool some_nonzero = false;
            for (std::size_t c = 0; c < 2; ++c) {
                const Rational lo = two.components[c].lo, hi = two.components[c].hi;
                if (gen.index(2) == 0 && !(c == 1 && !some_nonzero)) {
                    pieces.push_back({{lo, hi, RatPoly(),
                                       RatPoly::constant(CRational(Rational(1)))}});
                } else {
                    // x + k with k >= 1: strictly positive on [0,3]
                    pieces.push_back({{lo, hi,
                                       RatPoly({CRational(Rational(1 + gen.index(4))),
                                                CRational(Rational(1))}),
                                       RatPoly::constant(CRational(Rational(1)))}});
                    some_nonzero = true;
                }
            }
            entries.emplace_back(two, std::move(pieces));
        }
        const DiagThm31Report rep = verify_thm31(DiagOperator(two, std::move(entries)));
        if (!(rep.cond_i && rep.cond_ii && rep.cond_iii && rep.exact)) {
            ok = false;
            detail = "component-constant instance rejected";
        }
    }

    report(5, "exact function-backend dichotomy", ok, detail);
}

// --- criterion 6: graded diag(1/n) ---

void run_graded() {
    bool ok = true;
    std::string detail;
    const BlockProfile p({1});
    GradedOperator g;
    for (int n = 1; n <= 50; ++n) {
        CMat m(1, 1);
        m(0, 0) = 1.0 / n;
        g.components.push_back(
            RegularOperator::from_matrix(OperatorMatrix(p, 1, 1, {AlgElement(p, {m})})));
    }
    const GradedReport rep = graded_report(g);
    for (int n = 1; n <= 50; ++n) {
        const GradedComponentRow& row = rep.rows[n - 1];
        // The stored component is fl(1/n); the correctly rounded norm of its
        // inverse can sit one ulp away from n (it does for n = 49), so
        // "exactly n" is checked to the last representable bit.
        if (std::abs(row.s_norm - double(n)) > std::ldexp(double(n), -52)) {
            ok = false;
            detail = "||s_" + std::to_string(n) + "|| != n to the last ulp";
        }
        if (row.v_norm != 1.0 || row.f_norm >= 1.0) {
            ok = false;
            detail = "component " + std::to_string(n) + " isometry/transform norms";
        }
    }
    if (!rep.unbounded_inverse || !rep.range_not_uniformly_closed) {
        ok = false;
        detail = "flags not raised";
    }
    if (!closed_range_suite(g).consistent) {
        ok = false;
        detail = "suite inconsistent";
    }
    report(6, "graded diag(1/n) unboundedness", ok, detail);
}

// --- criterion 8: golden files ---

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(POLARMOD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult res;
    if (!pipe) return res;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void run_golden() {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"identity", "verify-thm31"},
        {"nilpotent2", "polar"},
        {"diag34", "btransform"},
        {"mult_x", "verify-thm31"},
        {"mult_xminus2", "polar"},
        {"two_component_projection", "check-complemented"},
        {"graded_inv_n", "graded-report"},
    };
    for (const auto& [stem, cmd] : cases) {
        const std::string args = cmd + " " + std::string(POLARMOD_PROBLEM_DIR) + "/" + stem +
                                 ".json --format json";
        const RunResult once = run_cli(args);
        const RunResult twice = run_cli(args);
        if (once.exit_code != 0 || once.output != twice.output) {
            ok = false;
            detail = stem + ": not byte-stable or bad exit code";
            continue;
        }
        std::ifstream in(std::string(POLARMOD_GOLDEN_DIR) + "/" + stem + "." + cmd + ".json",
                         std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        if (!in || os.str() != once.output) {
            ok = false;
            detail = stem + ": differs from the committed report";
        }
        try {
            const auto parsed = nlohmann::json::parse(once.output);
            if (parsed.at("schema") != "polarmod-report-v1") throw std::runtime_error("schema");
        } catch (...) {
            ok = false;
            detail = stem + ": report not schema-valid";
        }
    }
    // exit-code contract spot checks
    if (run_cli("btransform " + std::string(POLARMOD_PROBLEM_DIR) + "/mult_x.json").exit_code != 2 ||
        run_cli("selftest --seed 3").exit_code != 0) {
        ok = false;
        detail = "exit-code contract";
    }
    report(8, "golden cli reports", ok, detail);
}

}  // namespace

int main() {
    run_corpus_criteria();
    run_dichotomy();
    run_graded();
    report(7, "corollary residuals and closed-range consistency", g_cor_ok, g_cor_detail);
    run_golden();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << "\n";
    return g_failures == 0 ? 0 : 1;
}
