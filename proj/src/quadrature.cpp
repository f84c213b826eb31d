#include "gvlp/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gvlp {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal Jacobi
// matrix, weights are mu0 times the squared first components of the
// normalized eigenvectors.
QuadratureRule golub_welsch(const std::vector<double>& diag,
                            const std::vector<double>& offdiag, double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) jacobi(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        jacobi(i, i + 1) = offdiag[i];
        jacobi(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("golub_welsch: eigensolver failed");

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);  // ascending
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int n) {
    if (n < 1 || n > 256)
        throw std::invalid_argument("gauss_hermite_rule: n must be in [1, 256]");
    // Monic recurrence for the weight e^{-x^2}: a_k = 0, b_k = k/2.
    std::vector<double> diag(n, 0.0);
    std::vector<double> offdiag(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) offdiag[k - 1] = std::sqrt(0.5 * k);
    QuadratureRule rule = golub_welsch(diag, offdiag, std::sqrt(M_PI));
    rule.kind = RuleKind::gauss_hermite;
    // Enforce exact symmetry about 0 (the eigensolver is symmetric only to
    // rounding; downstream parity arguments rely on it).
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        const double node = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -node;
        rule.nodes[j] = node;
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadratureRule gauss_laguerre_rule(int n, double alpha) {
    if (n < 1 || n > 256)
        throw std::invalid_argument("gauss_laguerre_rule: n must be in [1, 256]");
    if (alpha <= -1.0)
        throw std::invalid_argument("gauss_laguerre_rule: alpha must exceed -1");
    std::vector<double> diag(n);
    std::vector<double> offdiag(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) offdiag[k - 1] = std::sqrt(k * (k + alpha));
    QuadratureRule rule = golub_welsch(diag, offdiag, std::tgamma(alpha + 1.0));
    rule.kind = RuleKind::gauss_laguerre;
    rule.alpha = alpha;
    return rule;
}

QuadratureRule trapezoid_rule(double radius, int points_per_axis) {
    if (!(radius > 0.0)) throw std::invalid_argument("trapezoid_rule: radius must be positive");
    if (points_per_axis < 2)
        throw std::invalid_argument("trapezoid_rule: need at least 2 points");
    QuadratureRule rule;
    rule.kind = RuleKind::trapezoid_box;
    const int n = points_per_axis;
    const double h = 2.0 * radius / (n - 1);
    rule.nodes.resize(n);
    rule.weights.assign(n, h);
    for (int i = 0; i < n; ++i) rule.nodes[i] = -radius + i * h;
    rule.weights.front() = 0.5 * h;
    rule.weights.back() = 0.5 * h;
    return rule;
}

void tensor_sweep(int dim, const QuadratureRule& rule,
                  const std::function<void(std::span<const double>, double)>& visit) {
    const std::size_t n = rule.order();
    std::vector<std::size_t> idx(dim, 0);
    Vec point(dim);
    for (;;) {
        double w = 1.0;
        for (int a = 0; a < dim; ++a) {
            point[a] = rule.nodes[idx[a]];
            w *= rule.weights[idx[a]];
        }
        visit(point, w);
        int axis = 0;
        while (axis < dim && ++idx[axis] == n) {
            idx[axis] = 0;
            ++axis;
        }
        if (axis == dim) break;
    }
}

double integrate_gaussian(const RealFn& f, int dim, const QuadratureRule& rule) {
    if (rule.kind != RuleKind::gauss_hermite)
        throw std::invalid_argument("integrate_gaussian: rule must be gauss_hermite");
    double acc = 0.0;
    tensor_sweep(dim, rule, [&](std::span<const double> x, double w) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "integrate_gaussian: non-finite integrand at node (";
            for (int a = 0; a < dim; ++a) os << (a ? ", " : "") << x[a];
            os << ")";
            throw std::runtime_error(os.str());
        }
        acc += w * v;
    });
    return acc * std::pow(M_PI, -0.5 * dim);
}

double integrate_box(const RealFn& f, int dim, const QuadratureRule& rule) {
    if (rule.kind != RuleKind::trapezoid_box)
        throw std::invalid_argument("integrate_box: rule must be trapezoid_box");
    double acc = 0.0;
    tensor_sweep(dim, rule, [&](std::span<const double> x, double w) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "integrate_box: non-finite integrand at node (";
            for (int a = 0; a < dim; ++a) os << (a ? ", " : "") << x[a];
            os << ")";
            throw std::runtime_error(os.str());
        }
        acc += w * v;
    });
    return acc;
}

}  // namespace gvlp
