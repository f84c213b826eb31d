#ifndef GVLP_VLP_HPP
#define GVLP_VLP_HPP

#include <span>
#include <vector>

#include "gvlp/covering.hpp"
#include "gvlp/exponents.hpp"
#include "gvlp/geometry.hpp"
#include "gvlp/quadrature.hpp"

namespace gvlp {

enum class Measure { gaussian, lebesgue };

struct ModularValue {
    double value = 0.0;
    Measure measure = Measure::gaussian;
    double truncation_radius = 0.0;  // box radius backing a Lebesgue modular
};

/// Cached evaluation of lambda -> rho(f/lambda) on a fixed grid: weights,
/// |f| and p are sampled once, after which each modular evaluation is a
/// single pass of exp/log arithmetic. The grids are the quadrature rules of
/// the hosting module, so a sampler is as accurate as its rule.
class ModularSampler {
  public:
    ModularSampler(const RealFn& f, const ExponentFunction& p, Measure measure,
                   const QuadratureRule& rule, int dim);

    /// rho(f/lambda); lambda = 1 gives the plain modular.
    double rho(double lambda) const;
    double sup_abs_f() const { return sup_abs_f_; }
    bool identically_zero() const { return sup_abs_f_ == 0.0; }
    Measure measure() const { return measure_; }
    double truncation_radius() const { return truncation_radius_; }

  private:
    std::vector<double> weight_, log_abs_f_, exponent_;
    double sup_abs_f_ = 0.0;
    Measure measure_;
    double truncation_radius_ = 0.0;
};

ModularValue modular(const RealFn& f, const ExponentFunction& p, Measure measure,
                     const QuadratureRule& rule);

/// Luxemburg norm by bracketing + bisection on the monotone map
/// lambda -> rho(f/lambda). norm is the upper bracket end, so the modular at
/// f/norm is <= 1 by construction.
struct NormResult {
    double norm = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    double modular_at_norm = 0.0;
};

NormResult luxemburg_norm(const ModularSampler& sampler, double tol = 1e-8);
NormResult luxemburg_norm(const RealFn& f, const ExponentFunction& p, Measure measure,
                          const QuadratureRule& rule, double tol = 1e-8);

/// ||f e^{-|.|^2/p(.)}||_{p(.)} (Lebesgue, trapezoid box) over
/// ||f||_{p(.),gamma_d} (Gauss-Hermite); lies in [1, pi^{d/2}] up to
/// quadrature noise.
struct NormEquivalence {
    double gaussian_norm = 0.0;
    double weighted_lebesgue_norm = 0.0;
    double ratio = 0.0;
};

NormEquivalence norm_equivalence_report(const RealFn& f, const ExponentFunction& p,
                                        const QuadratureRule& gauss_hermite,
                                        const QuadratureRule& box, double tol = 1e-8);

/// integral of |f g| dgamma against ||f||_{p,gamma} ||g||_{p',gamma}; the
/// classical variable-exponent Holder constant 4 is asserted, the measured
/// ratio is reported.
struct HolderCheck {
    double lhs = 0.0, rhs = 0.0, ratio = 0.0;
    bool passed = false;
};

HolderCheck holder_check(const RealFn& f, const RealFn& g, const ExponentFunction& p,
                         const QuadratureRule& gauss_hermite, double tol = 1e-8);

/// Class-G block inequality over a covering family (Lebesgue norms):
/// sum_B ||f chi_B||_p ||g chi_B||_{p'} against ||f||_p ||g||_{p'}.
struct ClassGCheck {
    double sum = 0.0, product = 0.0, ratio = 0.0;
};

ClassGCheck class_g_check(const RealFn& f, const RealFn& g, const ExponentFunction& p,
                          const CoveringFamily& family, int points_per_axis = 201,
                          double tol = 1e-8);

/// The truncation inequalities for 0 <= F <= 1 on the box E = [-E, E]^d with
/// R(y) = (e + |y|)^{-N}: measures the minimal constants in
///   int F^{rho(y)} <= C1 int F^{rho_inf} + int R^{rho_minus}
///   int F^{rho_inf} <= C2 int F^{rho(y)} + int R^{rho_minus}
struct Lemma326Report {
    double int_f_rho = 0.0;      // lhs of the first inequality
    double int_f_rho_inf = 0.0;  // lhs of the second
    double int_r = 0.0;          // shared remainder term
    double c1 = 0.0, c2 = 0.0;   // minimal admissible constants
};

Lemma326Report lemma326_report(const RealFn& rho, double rho_minus, double rho_inf,
                               const RealFn& big_f, double box_radius, int n_decay, int dim,
                               int points_per_axis = 801);

/// sup over the test set of |<f, g>_gamma| with every g normalized to unit
/// p'-norm; a duality lower bound for ||f||_{p,gamma}.
double duality_pairing(const RealFn& f, const ExponentFunction& p,
                       std::span<const RealFn> test_set, const QuadratureRule& gauss_hermite,
                       double tol = 1e-8);

}  // namespace gvlp

#endif
