#ifndef GVLP_SEMIGROUP_HPP
#define GVLP_SEMIGROUP_HPP

#include <span>
#include <string>
#include <vector>

#include "gvlp/geometry.hpp"
#include "gvlp/hermite.hpp"
#include "gvlp/quadrature.hpp"

namespace gvlp {

/// Time parameter of the OU semigroup together with s = 1 - e^{-2t}.
struct OUTime {
    double t = 0.0;
    double s = 0.0;
};

/// Builds the (t, s) pair from t > 0. s is computed via expm1 and clamped just
/// below 1 so the kernel formulas stay valid for very large t.
OUTime time_convert(double t);

/// Inverse conversion from s in (0, 1).
OUTime ou_time_from_s(double s);

/// Admissible (hyperbolic) ball: center x, radius d * min(1, 1/|x|).
Ball admissible_ball(std::span<const double> x);

/// Mehler kernel against Lebesgue measure:
/// M(s,x,y) = (pi s)^{-d/2} exp(-|y - sqrt(1-s) x|^2 / s), s in (0,1).
double mehler_kernel(const OUTime& ou, std::span<const double> x, std::span<const double> y);

/// Quadrature mode refuses s below this (kernel too concentrated for the
/// integration grid; use the spectral path instead).
inline constexpr double kOuMinQuadratureS = 1e-3;

/// Spectral path on coefficients: J_k components scaled by e^{-tk}.
HermiteExpansion ou_apply(const HermiteExpansion& f, double t);

/// Spectral path evaluated at x.
double ou_apply_spectral(const HermiteExpansion& f, const OUTime& ou, std::span<const double> x);

/// Quadrature path: Gauss-Hermite evaluation of the Mehler integral in the
/// kernel variable y = sqrt(1-s) x + sqrt(s) u. Refuses s < kOuMinQuadratureS.
double ou_apply_quadrature(const RealFn& f, const OUTime& ou, std::span<const double> x,
                           const QuadratureRule& gauss_hermite);

/// Box radius used for all global/Lebesgue truncations: max(8, |x| + 8).
double truncation_radius(std::span<const double> x);

struct SplitResult {
    double local = 0.0;   // integral over B_h(x)
    double global = 0.0;  // integral over the complement
};

/// Local/global decomposition of the Mehler integral via a trapezoid box rule;
/// local + global equals the full quadrature integral of the same grid.
/// points_per_axis = 0 picks a resolution from s (finer as s shrinks).
SplitResult ou_split(const RealFn& f, const OUTime& ou, std::span<const double> x,
                     int points_per_axis = 0);

/// Grid lower bound of T* f(x) = sup_t T_t f(x), spectral path.
double ou_maximal(const HermiteExpansion& f, std::span<const double> x,
                  std::span<const double> t_grid);

/// Grid lower bound of T* f(x), quadrature path.
double ou_maximal(const RealFn& f, std::span<const double> x, std::span<const double> t_grid,
                  const QuadratureRule& gauss_hermite);

/// log-uniform grid on [lo, hi] with n points.
std::vector<double> log_grid(double lo, double hi, int n);

/// Grid lower bound of the Hardy-Littlewood maximal function: max over the
/// given radii of the ball average of |f|, by box quadrature.
double hl_maximal(const RealFn& f, std::span<const double> x, std::span<const double> radii,
                  int points_per_axis = 201);

/// Diagnostics of the global-part kernel estimates at one pair (x, y) outside
/// the admissible ball: sup over an s-grid of M(s,x,y) against the branch
/// bound e^{-|y|^2} (b <= 0) or e^{-u0}/t0^{d/2} (b > 0).
struct KernelBoundReport {
    Vec x, y;
    double b = 0.0;      // 2 <x, y>
    double a = 0.0;      // |x|^2 + |y|^2
    double t0 = 0.0;     // b > 0 branch only
    double u0 = 0.0;     // b > 0 branch only
    double sup_m = 0.0;  // refined grid maximum of M(s,x,y)
    double bound = 0.0;
    double ratio = 0.0;  // sup_m / bound
    enum class Branch { b_nonpositive, b_positive } branch = Branch::b_nonpositive;
};

/// Branch quantities b = 2<x,y>, a = |x|^2+|y|^2 and, when b > 0,
/// t0 = 2 sqrt(a^2-b^2)/(a + sqrt(a^2-b^2)) and
/// u0 = (|y|^2 - |x|^2 + |x+y| |x-y|)/2. Defined for any pair; the global
/// region precondition is enforced by kernel_bound_report only.
struct KernelBranchParams {
    double b = 0.0, a = 0.0, t0 = 0.0, u0 = 0.0;
    bool b_positive = false;
};

KernelBranchParams kernel_branch_params(std::span<const double> x, std::span<const double> y);

KernelBoundReport kernel_bound_report(std::span<const double> x, std::span<const double> y,
                                      std::span<const double> s_grid);

std::string kernel_report_csv_header();
std::string to_csv_row(const KernelBoundReport& rep);

/// alpha_inf = 1/2 - |1/p_inf - 1/2|, positive for p_inf in (1, inf).
double alpha_infinity(double p_inf);

/// Integral over the truncated box of P(x,y) = |x+y|^d e^{-alpha_inf |x+y| |x-y|} dy.
double global_majorant_integral(std::span<const double> x, double p_inf,
                                int points_per_axis = 0);

}  // namespace gvlp

#endif
