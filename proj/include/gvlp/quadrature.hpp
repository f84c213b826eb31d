#ifndef GVLP_QUADRATURE_HPP
#define GVLP_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gvlp/geometry.hpp"

namespace gvlp {

enum class RuleKind { gauss_hermite, gauss_laguerre, trapezoid_box };

/// One-dimensional node/weight rule, tensorized over d by the integrators below.
struct QuadratureRule {
    RuleKind kind = RuleKind::gauss_hermite;
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // all positive
    double alpha = 0.0;           // gauss_laguerre parameter

    std::size_t order() const { return nodes.size(); }
};

/// n-point rule for the weight e^{-x^2} on R; sum of weights is sqrt(pi),
/// nodes symmetric about 0, exact on polynomials of degree <= 2n-1.
QuadratureRule gauss_hermite_rule(int n);

/// n-point rule for the weight s^alpha e^{-s} on (0,inf); sum of weights is
/// Gamma(alpha+1), exact for s^alpha e^{-s} q(s) with deg q <= 2n-1.
QuadratureRule gauss_laguerre_rule(int n, double alpha);

/// Composite trapezoid rule on [-radius, radius] with the given point count.
QuadratureRule trapezoid_rule(double radius, int points_per_axis);

/// Visit every node of the d-fold tensor product of `rule`, passing the point
/// and the product weight. The point buffer is reused between calls.
void tensor_sweep(int dim, const QuadratureRule& rule,
                  const std::function<void(std::span<const double>, double)>& visit);

/// Integral of f against the Gaussian probability measure gamma_d, i.e.
/// pi^{-d/2} * sum of tensor weights * f(nodes). Throws if f is non-finite at
/// a node (the offending node is reported) or the rule is not gauss_hermite.
double integrate_gaussian(const RealFn& f, int dim, const QuadratureRule& rule);

/// Lebesgue integral of f over the box [-R, R]^d defined by a trapezoid rule.
double integrate_box(const RealFn& f, int dim, const QuadratureRule& rule);

}  // namespace gvlp

#endif
