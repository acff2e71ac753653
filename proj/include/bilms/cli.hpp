#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bilms/config.hpp"
#include "bilms/harness.hpp"
#include "bilms/io.hpp"
#include "bilms/verify.hpp"

namespace bilms {

namespace cli_detail {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_bad_flags = 2;
inline constexpr int exit_bad_config = 3;

inline bool parse_mu_grid(const std::string& text, std::vector<double>& out) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            if (pos != item.size()) return false;
            out.push_back(v);
        } catch (const std::exception&) {
            return false;
        }
    }
    return !out.empty();
}

inline std::string mu_file_name(double mu) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "mu_%g.csv", mu);
    return buf;
}

inline int run_verify() {
    VerifyOptions opt;
    if (const char* env = std::getenv("BILMS_FD_H")) {
        try {
            std::size_t pos = 0;
            opt.fd_h = std::stod(env, &pos);
            if (pos != std::string(env).size() || !(opt.fd_h > 0.0)) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            std::cerr << "error: BILMS_FD_H must be a positive number\n";
            return exit_bad_flags;
        }
    }
    const auto results = run_verification(opt);
    print_report(std::cout, results, opt);
    return all_passed(results) ? exit_ok : exit_verify_failed;
}

inline int run_single(const std::string& config_path, const std::string& out_path,
                      const std::optional<std::uint64_t>& seed) {
    ExperimentConfig cfg = load_config(config_path);
    if (seed) cfg.seed = *seed;
    const LearningCurve curve = run_experiment(cfg);
    write_file_atomic(out_path, curve_to_csv(curve));
    std::cout << "wrote " << out_path << " (" << curve.rows.size() << " rows"
              << (curve.diverged ? ", diverged" : "") << ")\n";
    return exit_ok;
}

inline int run_sweep(const std::string& config_path, const std::string& out_dir,
                     const std::vector<double>& mu_grid, const std::optional<std::uint64_t>& seed) {
    ExperimentConfig cfg = load_config(config_path);
    if (seed) cfg.seed = *seed;
    std::filesystem::create_directories(out_dir);
    const std::vector<SweepRow> summary = mu_sweep(cfg, mu_grid);
    for (double mu : mu_grid) {
        ExperimentConfig c = cfg;
        c.mu = mu;
        const LearningCurve curve = run_experiment(c);
        write_file_atomic(std::filesystem::path(out_dir) / mu_file_name(mu), curve_to_csv(curve));
    }
    write_file_atomic(std::filesystem::path(out_dir) / "summary.csv", sweep_summary_csv(summary));
    std::cout << "wrote " << summary.size() << " curves and summary.csv under " << out_dir << "\n";
    return exit_ok;
}

inline int run_demo() {
    // BLMS1 against the classical complex LMS on a shared C(i)-embedded
    // stream: the trajectories coincide when the complex filter runs at
    // twice the step size.
    ExperimentConfig cfg;
    cfg.taps = 4;
    cfg.mu = 0.05;
    cfg.steps = 1000;
    cfg.seed = 42;
    cfg.noise_std = 0.1;
    const double deviation = compare_trajectories(cfg, Algorithm::blms1, Algorithm::clms);

    std::cout << "demo: system identification, n = 4, mu = 0.05, 1000 steps, seed 42, noise 0.1\n\n";
    std::cout << "  algorithm   final sq_error   final weight_err_sq\n";
    for (Algorithm algo : {Algorithm::blms1, Algorithm::clms}) {
        ExperimentConfig c = cfg;
        c.algorithm = algo;
        const LearningCurve curve = run_experiment(c);
        const CurveRow& last = curve.rows.back();
        std::printf("  %-9s   %14.6e   %19.6e\n", to_string(algo), last.sq_error,
                    last.weight_err_sq);
    }
    std::cout << "\n  max weight deviation, BLMS1(mu) vs CLMS(2 mu) on embedded data: "
              << deviation << "\n";
    return exit_ok;
}

}  // namespace cli_detail

inline int cli_main(int argc, const char* const* argv) {
    using namespace cli_detail;

    CLI::App app{"bicomplex LMS adaptive-filter toolkit"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the algebra, gradient and learning-rule suites");

    std::string run_config, run_out;
    std::uint64_t seed_value = 0;
    bool seed_set = false;
    auto* run = app.add_subcommand("run", "run one experiment from a JSON config and write a CSV curve");
    run->add_option("--config", run_config, "experiment config (JSON)")->required();
    run->add_option("--out", run_out, "output CSV path")->required();
    auto* run_seed = run->add_option("--seed", seed_value, "override the config seed");

    std::string sweep_config, sweep_out, mu_grid_text;
    auto* sweep = app.add_subcommand("sweep", "run the config once per step size and write curves + summary");
    sweep->add_option("--config", sweep_config, "experiment config (JSON)")->required();
    sweep->add_option("--mu-grid", mu_grid_text, "comma-separated step sizes, e.g. 0.01,0.05")->required();
    sweep->add_option("--out", sweep_out, "output directory")->required();
    auto* sweep_seed = sweep->add_option("--seed", seed_value, "override the config seed");

    auto* demo = app.add_subcommand("demo", "canned BLMS1 vs CLMS comparison (seed 42)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_flags;
    }
    seed_set = run_seed->count() > 0 || sweep_seed->count() > 0;
    std::optional<std::uint64_t> seed;
    if (seed_set) seed = seed_value;

    try {
        if (verify->parsed()) return run_verify();
        if (run->parsed()) return run_single(run_config, run_out, seed);
        if (sweep->parsed()) {
            std::vector<double> grid;
            if (!parse_mu_grid(mu_grid_text, grid)) {
                std::cerr << "error: --mu-grid must be a comma-separated list of numbers\n";
                return exit_bad_flags;
            }
            return run_sweep(sweep_config, sweep_out, grid, seed);
        }
        if (demo->parsed()) return run_demo();
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_config;
    }
    return exit_bad_flags;
}

}  // namespace bilms
