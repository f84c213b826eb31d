#include "gvlp/subordination.hpp"

#include <cmath>
#include <stdexcept>

namespace gvlp {

SubordinationRule poisson_rule(int n) { return {gauss_laguerre_rule(n, -0.5)}; }

SubordinationRule bessel_rule(int n, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("bessel_rule: beta must be positive");
    return {gauss_laguerre_rule(n, beta - 1.0)};
}

double poisson_quadrature_multiplier(int k, double t, const SubordinationRule& rule) {
    if (!(t > 0.0)) throw std::invalid_argument("poisson multiplier: t must be positive");
    const double c = 0.25 * t * t * k;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.laguerre.order(); ++i)
        acc += rule.laguerre.weights[i] * std::exp(-c / rule.laguerre.nodes[i]);
    return acc / std::sqrt(M_PI);
}

HermiteExpansion poisson_apply(const HermiteExpansion& f, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("poisson_apply: t must be non-negative");
    return f.apply_degree_multiplier([t](int k) { return std::exp(-t * std::sqrt(double(k))); });
}

namespace {

// Multiplier table for degrees 0..max_k via `one`, with optional doubling of
// the Laguerre order while any degree disagrees with `target` beyond tol.
template <typename MakeRule, typename One, typename Target>
std::vector<double> multiplier_table(int max_k, const SubordinationOptions& opts,
                                     MakeRule make_rule, One one, Target target) {
    int n = opts.laguerre_nodes;
    for (;;) {
        auto rule = make_rule(n);
        std::vector<double> m(max_k + 1);
        double worst = 0.0;
        for (int k = 0; k <= max_k; ++k) {
            m[k] = one(k, rule);
            const double ref = target(k);
            worst = std::max(worst, std::abs(m[k] - ref) / std::max(std::abs(ref), 1e-300));
        }
        if (!opts.auto_refine || worst <= opts.tolerance || 2 * n > opts.max_nodes) return m;
        n *= 2;
    }
}

}  // namespace

double poisson_apply(const HermiteExpansion& f, double t, std::span<const double> x,
                     ApplyMode mode, const SubordinationOptions& opts) {
    if (!(t > 0.0)) throw std::invalid_argument("poisson_apply: t must be positive");
    if (mode == ApplyMode::spectral) return eval_expansion(poisson_apply(f, t), x);

    const int max_k = f.max_order();
    const auto m = multiplier_table(
        max_k, opts, [](int n) { return poisson_rule(n); },
        [t](int k, const SubordinationRule& r) { return poisson_quadrature_multiplier(k, t, r); },
        [t](int k) { return std::exp(-t * std::sqrt(double(k))); });
    return eval_expansion(f.apply_degree_multiplier([&](int k) { return m[k]; }), x);
}

double bessel_quadrature_multiplier(int k, double beta, const SubordinationRule& rule) {
    if (!(beta > 0.0)) throw std::invalid_argument("bessel multiplier: beta must be positive");
    const double sqrt_k = std::sqrt(double(k));
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.laguerre.order(); ++i)
        acc += rule.laguerre.weights[i] * std::exp(-rule.laguerre.nodes[i] * sqrt_k);
    return acc / std::tgamma(beta);
}

HermiteExpansion bessel_apply(const HermiteExpansion& f, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("bessel_apply: beta must be positive");
    return f.apply_degree_multiplier(
        [beta](int k) { return std::pow(1.0 + std::sqrt(double(k)), -beta); });
}

double bessel_apply(const HermiteExpansion& f, double beta, std::span<const double> x,
                    ApplyMode mode, const SubordinationOptions& opts) {
    if (!(beta > 0.0)) throw std::invalid_argument("bessel_apply: beta must be positive");
    if (mode == ApplyMode::spectral) return eval_expansion(bessel_apply(f, beta), x);

    const int max_k = f.max_order();
    const auto m = multiplier_table(
        max_k, opts, [beta](int n) { return bessel_rule(n, beta); },
        [beta](int k, const SubordinationRule& r) {
            return bessel_quadrature_multiplier(k, beta, r);
        },
        [beta](int k) { return std::pow(1.0 + std::sqrt(double(k)), -beta); });
    return eval_expansion(f.apply_degree_multiplier([&](int k) { return m[k]; }), x);
}

}  // namespace gvlp
