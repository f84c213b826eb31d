#ifndef GVLP_SUBORDINATION_HPP
#define GVLP_SUBORDINATION_HPP

#include <span>

#include "gvlp/hermite.hpp"
#include "gvlp/quadrature.hpp"

namespace gvlp {

/// Gauss-Laguerre rule driving one subordination integral: alpha = -1/2 for
/// the Poisson-Hermite semigroup, alpha = beta - 1 for the Bessel potential.
struct SubordinationRule {
    QuadratureRule laguerre;
    int n() const { return static_cast<int>(laguerre.order()); }
};

SubordinationRule poisson_rule(int n);
SubordinationRule bessel_rule(int n, double beta);

enum class ApplyMode { spectral, quadrature };

struct SubordinationOptions {
    int laguerre_nodes = 64;
    /// Double the node count (up to max_nodes) while the two routes disagree
    /// by more than `tolerance` on any coefficient degree.
    bool auto_refine = false;
    double tolerance = 1e-6;
    int max_nodes = 256;
};

/// Degree multiplier computed by the quadrature route: for the Poisson
/// semigroup pi^{-1/2} sum_i w_i e^{-k t^2/(4 u_i)}; converges to e^{-t sqrt k}.
double poisson_quadrature_multiplier(int k, double t, const SubordinationRule& rule);

/// Poisson-Hermite semigroup on coefficients (spectral path, multiplier
/// e^{-t sqrt k} on J_k).
HermiteExpansion poisson_apply(const HermiteExpansion& f, double t);

double poisson_apply(const HermiteExpansion& f, double t, std::span<const double> x,
                     ApplyMode mode, const SubordinationOptions& opts = {});

/// Bessel multiplier by the quadrature route: Gamma(beta)^{-1} GL(beta-1)
/// integral of the spectral Poisson multiplier; converges to (1+sqrt k)^{-beta}.
double bessel_quadrature_multiplier(int k, double beta, const SubordinationRule& rule);

/// Gaussian Bessel potential on coefficients (multiplier (1+sqrt k)^{-beta}).
HermiteExpansion bessel_apply(const HermiteExpansion& f, double beta);

double bessel_apply(const HermiteExpansion& f, double beta, std::span<const double> x,
                    ApplyMode mode, const SubordinationOptions& opts = {});

}  // namespace gvlp

#endif
