#ifndef GVLP_HARNESS_HPP
#define GVLP_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gvlp/exponents.hpp"
#include "gvlp/hermite.hpp"
#include "gvlp/quadrature.hpp"

namespace gvlp {

/// Declarative experiment description, loadable from a JSON config file.
struct ExperimentConfig {
    std::string exponent_name = "rational_decay";
    std::vector<double> exponent_params = {3.0, 1.0};
    int dim = 1;
    int max_order = 8;
    std::vector<double> t_grid = {0.05, 0.3, 1.0, 3.0};
    std::vector<double> beta_list = {0.5, 1.0, 2.0, 4.0};
    int tstar_points = 50;  // log grid on [1e-3, 10]
    int hermite_nodes = 80;
    int laguerre_nodes = 64;
    int box_points = 801;
    double norm_tol = 1e-8;
    std::uint64_t seed = 20240101;
    bool refine = false;  // doubles quadrature orders

    static ExperimentConfig from_json_string(const std::string& text);
    static ExperimentConfig from_file(const std::string& path);
    std::string to_json_string() const;
    /// FNV-1a of the canonical JSON dump; goes into report provenance.
    std::string hash() const;
    ExperimentConfig refined() const;  // doubled quadrature orders

    ExponentFunction exponent() const;
};

/// Suite member: an evaluable function, optionally with a Hermite expansion.
/// `expansion_exact` marks polynomials (expansion is the function);
/// non-polynomial members carry a degree-capped projection and say so in
/// their id.
struct TestFunction {
    std::string id;
    RealFn fn;
    std::optional<HermiteExpansion> expansion;
    bool expansion_exact = false;
    bool nonneg = false;
};

/// The default 20-member desk suite: Hermite basis elements, polynomials,
/// Gaussian bumps and (projected) ball indicators.
std::vector<TestFunction> build_suite(const ExperimentConfig& config);

struct ReportRow {
    std::string function_id;
    std::string op;     // "T_t", "T*", "P_t", "J_beta"
    double param = 0.0; // t, beta, or 0 for T*
    double ratio = 0.0;
    std::string verdict;  // "ok" or "error: ..."
};

struct ExperimentReport {
    std::string schema = "gvlp-report/1";
    std::string config_hash;
    std::uint64_t seed = 0;
    bool hypotheses_verified = false;
    std::string hypothesis_note;
    std::vector<ReportRow> rows;
    std::map<std::string, double> constants;  // measured sup per operator, etc.
    std::vector<std::pair<std::string, bool>> verdicts;

    bool all_passed() const;
};

/// Norm ratios ||Op f|| / ||f|| for Op in {T_t, T*, P_t, J_beta} over the
/// suite; exponent regularity is checked first and the run is flagged (not
/// aborted) when the hypotheses fail. A failing row aborts that row only.
ExperimentReport run_boundedness_experiment(const ExperimentConfig& config);

/// ||T_t f - f||_{p,gamma} along a t-grid decreasing to 0 (spectral path).
std::vector<double> strong_continuity_curve(const HermiteExpansion& f, const ExponentFunction& p,
                                            std::span<const double> t_grid,
                                            const QuadratureRule& gauss_hermite,
                                            double tol = 1e-8);

/// Deterministic serialization: identical config + seed give identical bytes.
void emit_report(const ExperimentReport& report, const std::string& path,
                 const std::string& format);
std::string report_to_json_string(const ExperimentReport& report);
std::string report_to_csv_string(const ExperimentReport& report);

/// Sub-experiment drivers behind the CLI subcommands. Each returns a report
/// whose verdicts gate the process exit code.
ExperimentReport run_exponent_checks(const ExperimentConfig& config);
ExperimentReport run_norm_suite(const ExperimentConfig& config);
ExperimentReport run_semigroup_experiment(const ExperimentConfig& config);
ExperimentReport run_covering_experiment(const ExperimentConfig& config);
ExperimentReport run_verify_all(const ExperimentConfig& config);

/// Per-function Luxemburg norms in both measures, in the norm-table CSV
/// schema: function_id, exponent_id, measure, norm, modular_at_norm,
/// bracket_width.
std::string norm_results_csv(const ExperimentConfig& config);

/// Kernel-bound diagnostics for seeded global pairs, one CSV row per pair.
std::string kernel_reports_csv(const ExperimentConfig& config);

/// The covering family used by `covering`, serialized to JSON.
std::string covering_family_json(const ExperimentConfig& config);

}  // namespace gvlp

#endif
