// gvlp command line: desk-scale experiments for the Ornstein-Uhlenbeck
// semigroup, its subordinated operators and variable-exponent Gaussian norms.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "gvlp/harness.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool refine = false;
};

gvlp::ExperimentConfig load_config(const CommonOptions& opts) {
    gvlp::ExperimentConfig config = opts.config_path.empty()
                                        ? gvlp::ExperimentConfig{}
                                        : gvlp::ExperimentConfig::from_file(opts.config_path);
    if (opts.seed_set) config.seed = opts.seed;
    if (opts.refine) config.refine = true;
    return config;
}

void write_text(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

int finish(const gvlp::ExperimentReport& report, const CommonOptions& opts) {
    if (!opts.out_path.empty()) gvlp::emit_report(report, opts.out_path, opts.format);
    for (const auto& [name, ok] : report.verdicts)
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << '\n';
    if (!report.hypothesis_note.empty()) std::cout << "note: " << report.hypothesis_note << '\n';
    std::cout << (report.all_passed() ? "all verdicts passed" : "some verdicts failed") << '\n';
    return report.all_passed() ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON experiment config");
    cmd->add_option("--out", opts.out_path, "output report path");
    cmd->add_option("--format", opts.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", opts.seed, "override the config seed")
        ->each([&](const std::string&) { opts.seed_set = true; });
    cmd->add_flag("--refine", opts.refine, "double quadrature orders for stability checks");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian harmonic analysis on variable Lebesgue spaces: desk-scale checks"};
    app.require_subcommand(1);
    CommonOptions opts;

    auto* check_exponent =
        app.add_subcommand("check-exponent", "regularity classes of the configured exponent");
    auto* norms = app.add_subcommand("norms", "Luxemburg norms and the norm-equivalence window");
    auto* semigroup =
        app.add_subcommand("semigroup", "spectral/quadrature agreement and kernel bounds");
    auto* covering = app.add_subcommand("covering", "shell covering family and its properties");
    auto* verify_all = app.add_subcommand("verify-all", "run every experiment");
    for (auto* cmd : {check_exponent, norms, semigroup, covering, verify_all})
        add_common(cmd, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        const gvlp::ExperimentConfig config = load_config(opts);
        if (check_exponent->parsed()) return finish(gvlp::run_exponent_checks(config), opts);
        if (norms->parsed()) {
            auto report = gvlp::run_norm_suite(config);
            if (!opts.out_path.empty() && opts.format == "csv") {
                // the norm table has its own row schema
                write_text(opts.out_path, gvlp::norm_results_csv(config));
                opts.out_path.clear();
            }
            return finish(report, opts);
        }
        if (semigroup->parsed()) {
            auto report = gvlp::run_semigroup_experiment(config);
            if (!opts.out_path.empty() && opts.format == "csv") {
                // kernel-bound diagnostics serialize one row per (x, y) pair
                write_text(opts.out_path, gvlp::kernel_reports_csv(config));
                opts.out_path.clear();
            }
            return finish(report, opts);
        }
        if (covering->parsed()) {
            auto report = gvlp::run_covering_experiment(config);
            if (!opts.out_path.empty() && opts.format == "json") {
                write_text(opts.out_path, gvlp::covering_family_json(config));
                opts.out_path.clear();
            }
            return finish(report, opts);
        }
        return finish(gvlp::run_verify_all(config), opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
