#ifndef GVLP_EXPONENTS_HPP
#define GVLP_EXPONENTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gvlp/geometry.hpp"

namespace gvlp {

/// Variable exponent p(.) with cached bounds. The standing hypothesis
/// 1 < p_minus <= p_plus < inf is enforced at construction; p_inf (the
/// asymptotic exponent) may stay unset until estimated.
struct ExponentFunction {
    int dim = 1;
    RealFn eval;
    double p_minus = 2.0;
    double p_plus = 2.0;
    std::optional<double> p_inf;
    std::string name = "custom";

    double operator()(std::span<const double> x) const { return eval(x); }
};

/// Catalogue constructors (the CLI contract).
ExponentFunction make_constant_exponent(int dim, double p0);
/// p0 + c / (1 + |x|^2)
ExponentFunction make_rational_decay_exponent(int dim, double p0, double c);
/// p0 + a * sin(|x|)
ExponentFunction make_oscillating_exponent(int dim, double p0, double a);
/// p0 on |x| <= r, p1 outside
ExponentFunction make_step_exponent(int dim, double p0, double p1, double r);
/// Dispatch by catalogue name: constant(p0), rational_decay(p0, c),
/// oscillating(p0, a), step(p0, p1, r).
ExponentFunction make_exponent(const std::string& name, std::span<const double> params, int dim);

/// General-purpose constructor with caller-supplied bounds (validated).
ExponentFunction make_exponent_function(int dim, RealFn eval, double p_minus, double p_plus,
                                        std::optional<double> p_inf = std::nullopt,
                                        std::string name = "custom");

/// p'(x) = p(x)/(p(x)-1); swaps and conjugates the bounds. Rejects p_minus = 1.
ExponentFunction conjugate(const ExponentFunction& p);

inline double conjugate_exponent(double p) { return p / (p - 1.0); }

enum class RegularityClass { LH0, LHinf, PgammaInf };

std::string to_string(RegularityClass c);

/// Sample-based verdict for one regularity class: `constant` is the largest
/// defining ratio seen over the sample set, so it can only grow under sample
/// refinement. "passed" means constant <= cap on these samples, nothing more.
struct RegularityReport {
    RegularityClass class_name = RegularityClass::LH0;
    double constant = 0.0;
    std::pair<Vec, Vec> witness_pair;
    bool passed = false;
    double cap = 0.0;
    std::size_t samples_used = 0;
    std::size_t skipped = 0;                 // coincident pairs
    std::optional<double> fitted_p_inf;      // PgammaInf only
    std::uint64_t seed = 0;                  // provenance when samples came from a seed
};

/// LH_0 check applied to 1/p: constant = max |1/p(x)-1/p(y)| * log(e + 1/|x-y|)
/// over pairs with |x-y| in (0, 1/2]. Coincident pairs are skipped and counted;
/// pairs further apart than 1/2 violate the precondition.
RegularityReport check_log_holder_local(const ExponentFunction& p,
                                        std::span<const std::pair<Vec, Vec>> pairs, double cap);

/// LH_inf check with base point 0 for a raw function g with asymptotic value
/// g_inf: constant = max |g(x)-g_inf| * log(e + |x|).
RegularityReport check_log_holder_inf(const RealFn& g, std::span<const Vec> samples, double g_inf,
                                      double cap);

/// P^inf_{gamma_d} check: constant = max |p(x)-p_inf| * |x|^2 over samples
/// (origin excluded by precondition). When no guess is given, p_inf is fitted
/// as the mean of p over the outermost decile of sample radii.
RegularityReport check_p_gamma_inf(const ExponentFunction& p, std::span<const Vec> samples,
                                   std::optional<double> p_inf_guess, double cap);

/// Two-sided bounds of e^{-|x|^2 (p(x)/p_inf - 1)} and its conjugate analogue
/// over the samples, checked against C1 = e^{C/p_inf}, C2 = e^{C (p_minus)'/p_inf}
/// where C is the P^inf_{gamma_d} constant.
struct ExpEquivalenceReport {
    double max_primal = 0.0, min_primal = 0.0;
    double max_conjugate = 0.0, min_conjugate = 0.0;
    double c1 = 0.0, c2 = 0.0;  // admissible two-sided constants
    bool passed = false;
};

ExpEquivalenceReport check_exp_equivalence(const ExponentFunction& p, std::span<const Vec> samples,
                                           double c_gamma);

}  // namespace gvlp

#endif
