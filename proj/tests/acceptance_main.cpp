// Acceptance suite: one pass/fail line per criterion. Criteria 1-7 come
// from the in-process verification checks; criterion 8 additionally drives
// the CLI binary (path expected as argv[1]) end to end.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "bilms/verify.hpp"

namespace {

namespace fs = std::filesystem;

int run_command(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliChecks {
    int total = 0;
    int failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++total;
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
};

CliChecks run_cli_checks(const std::string& cli) {
    CliChecks c;
    const fs::path dir = fs::temp_directory_path() / "bilms_acceptance";
    fs::create_directories(dir);
    const std::string q = "'" + cli + "'";

    c.expect(run_command(q + " verify > " + (dir / "verify.txt").string() + " 2>&1") == 0,
             "`verify` must exit 0 on a correct build");
    const std::string verify_table = read_file(dir / "verify.txt");
    for (const char* row : {"Theorem LMSR1", "Theorem SLMSalgo", "Theorem LMS1decomp",
                            "Theorem LMS2decomp", "LeibBCn"})
        c.expect(verify_table.find(row) != std::string::npos,
                 std::string("`verify` table must include a row for ") + row);

    const fs::path cfg = dir / "cfg.json";
    {
        std::ofstream out(cfg);
        out << R"({"algorithm": "blms1", "taps": 4, "mu": 0.05, "steps": 300, "seed": 42, "noise_std": 0.1})";
    }
    const fs::path csv_a = dir / "a.csv";
    const fs::path csv_b = dir / "b.csv";
    c.expect(run_command(q + " run --config " + cfg.string() + " --out " + csv_a.string() +
                         " > /dev/null") == 0,
             "`run` must exit 0");
    c.expect(run_command(q + " run --config " + cfg.string() + " --out " + csv_b.string() +
                         " > /dev/null") == 0,
             "`run` must exit 0 (second invocation)");
    const std::string a = read_file(csv_a);
    c.expect(!a.empty() && a == read_file(csv_b), "identical seed must give byte-identical CSV");
    c.expect(a.rfind("step,sq_error,weight_err_sq\n", 0) == 0,
             "CSV header must be exactly `step,sq_error,weight_err_sq`");

    c.expect(run_command(q + " run --config " + cfg.string() + " 2> /dev/null") == 2,
             "missing required flag must exit 2");
    c.expect(run_command(q + " frobnicate 2> /dev/null") == 2, "unknown subcommand must exit 2");

    const fs::path bad_cfg = dir / "bad.json";
    {
        std::ofstream out(bad_cfg);
        out << R"({"algorithm": "blms1", "taps": 0})";
    }
    const fs::path err_txt = dir / "err.txt";
    c.expect(run_command(q + " run --config " + bad_cfg.string() + " --out " + (dir / "x.csv").string() +
                         " 2> " + err_txt.string()) == 3,
             "invalid config must exit 3");
    c.expect(read_file(err_txt).find("taps must be") != std::string::npos,
             "config error must name the taps bound");

    const fs::path sweep_dir = dir / "sweep";
    c.expect(run_command(q + " sweep --config " + cfg.string() + " --mu-grid 0.01,0.05 --out " +
                         sweep_dir.string() + " > /dev/null") == 0,
             "`sweep` must exit 0");
    c.expect(fs::exists(sweep_dir / "summary.csv") && fs::exists(sweep_dir / "mu_0.01.csv") &&
                 fs::exists(sweep_dir / "mu_0.05.csv"),
             "`sweep` must write one CSV per mu plus summary.csv");

    c.expect(run_command(q + " demo > /dev/null") == 0, "`demo` must exit 0");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const std::map<int, std::string> descriptions{
        {1, "algebra suite: product routes agree, e1/e2 identities, conjugation table"},
        {2, "norms: idempotent formula, sqrt(2) bound, hyperbolic multiplicativity, inverse threshold"},
        {3, "gradient oracle: annihilation table, Leibniz, Finsler and quadratic forms"},
        {4, "learning-rule derivation: numeric gradients match -2 E X* and -2 E Xbar"},
        {5, "decomposition theorems: split trajectories track the bicomplex rules to 1e-10"},
        {6, "complex embedding: BLMS1(mu) equals CLMS(2mu) on C(i) data to 1e-12"},
        {7, "convergence: noiseless weight error < 1e-16, noisy steady state within 2x, < 1 s"},
        {8, "determinism and CLI: byte-identical CSV, exact header, exit codes"},
    };

    const bilms::VerifyOptions opt;
    const auto checks = bilms::run_verification(opt);

    std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
    std::map<int, std::vector<std::string>> failures;
    for (const auto& c : checks) {
        auto& t = tally[c.criterion];
        ++t.second;
        if (c.pass)
            ++t.first;
        else
            failures[c.criterion].push_back(c.name);
    }

    CliChecks cli;
    if (argc > 1) {
        cli = run_cli_checks(argv[1]);
    } else {
        cli.total = 1;
        cli.failures = 1;
        cli.notes.push_back("CLI path missing: pass the bilms binary as argv[1]");
    }

    bool all_ok = true;
    for (int criterion = 1; criterion <= 8; ++criterion) {
        auto [passed, total] = tally[criterion];
        int failed = total - passed;
        if (criterion == 8) {
            total += cli.total;
            passed += cli.total - cli.failures;
            failed += cli.failures;
        }
        const bool ok = failed == 0 && total > 0;
        all_ok = all_ok && ok;
        std::printf("[%s] criterion %d: %s (%d/%d checks)\n", ok ? "PASS" : "FAIL", criterion,
                    descriptions.at(criterion).c_str(), passed, total);
        for (const auto& name : failures[criterion]) std::printf("         failed: %s\n", name.c_str());
        if (criterion == 8)
            for (const auto& note : cli.notes) std::printf("         failed: %s\n", note.c_str());
    }

    const auto [sp, st] = tally[0];
    if (st > 0) {
        const bool ok = sp == st;
        all_ok = all_ok && ok;
        std::printf("[%s] supporting invariants (%d/%d checks)\n", ok ? "PASS" : "FAIL", sp, st);
        for (const auto& name : failures[0]) std::printf("         failed: %s\n", name.c_str());
    }

    std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
