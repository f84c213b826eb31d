#include "gvlp/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gvlp {

OUTime time_convert(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("time_convert: t must be positive and finite");
    OUTime ou;
    ou.t = t;
    ou.s = -std::expm1(-2.0 * t);
    // s rounds to 1.0 once t > ~18; keep it inside (0,1) for the kernel.
    const double below_one = 1.0 - std::numeric_limits<double>::epsilon();
    ou.s = std::min(ou.s, below_one);
    return ou;
}

OUTime ou_time_from_s(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("ou_time_from_s: s must be in (0,1)");
    OUTime ou;
    ou.s = s;
    ou.t = -0.5 * std::log1p(-s);
    return ou;
}

Ball admissible_ball(std::span<const double> x) {
    const int d = static_cast<int>(x.size());
    const double r = norm(x);
    Ball b;
    b.center.assign(x.begin(), x.end());
    b.radius = d * std::min(1.0, r > 0.0 ? 1.0 / r : 1.0);
    return b;
}

double mehler_kernel(const OUTime& ou, std::span<const double> x, std::span<const double> y) {
    const double s = ou.s;
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("mehler_kernel: s must be in (0,1)");
    const int d = static_cast<int>(x.size());
    const double c = std::sqrt(1.0 - s);
    double q = 0.0;
    for (int a = 0; a < d; ++a) {
        const double diff = y[a] - c * x[a];
        q += diff * diff;
    }
    return std::pow(M_PI * s, -0.5 * d) * std::exp(-q / s);
}

HermiteExpansion ou_apply(const HermiteExpansion& f, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("ou_apply: t must be non-negative");
    return f.apply_degree_multiplier([t](int k) { return std::exp(-t * k); });
}

double ou_apply_spectral(const HermiteExpansion& f, const OUTime& ou, std::span<const double> x) {
    return eval_expansion(ou_apply(f, ou.t), x);
}

double ou_apply_quadrature(const RealFn& f, const OUTime& ou, std::span<const double> x,
                           const QuadratureRule& gh) {
    if (ou.s < kOuMinQuadratureS)
        throw std::invalid_argument(
            "ou_apply_quadrature: kernel too singular (s < 1e-3); use the spectral mode");
    const int d = static_cast<int>(x.size());
    const double c = std::sqrt(1.0 - ou.s);
    const double rs = std::sqrt(ou.s);
    Vec y(d);
    auto shifted = [&](std::span<const double> u) {
        for (int a = 0; a < d; ++a) y[a] = c * x[a] + rs * u[a];
        return f(y);
    };
    return integrate_gaussian(shifted, d, gh);
}

double truncation_radius(std::span<const double> x) { return std::max(8.0, norm(x) + 8.0); }

SplitResult ou_split(const RealFn& f, const OUTime& ou, std::span<const double> x,
                     int points_per_axis) {
    if (ou.s < kOuMinQuadratureS)
        throw std::invalid_argument("ou_split: kernel too singular (s < 1e-3)");
    const int d = static_cast<int>(x.size());
    const double radius = truncation_radius(x);
    if (points_per_axis == 0) {
        const double h = std::min(0.02, std::sqrt(ou.s) / 12.0);
        points_per_axis = static_cast<int>(std::ceil(2.0 * radius / h)) + 1;
        if (d >= 2) points_per_axis = std::min(points_per_axis, 801);
    }
    const QuadratureRule box = trapezoid_rule(radius, points_per_axis);
    const Ball ball = admissible_ball(x);

    SplitResult out;
    tensor_sweep(d, box, [&](std::span<const double> y, double w) {
        const double v = w * mehler_kernel(ou, x, y) * f(y);
        if (ball.contains(y))
            out.local += v;
        else
            out.global += v;
    });
    return out;
}

double ou_maximal(const HermiteExpansion& f, std::span<const double> x,
                  std::span<const double> t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("ou_maximal: empty t grid");
    double best = -std::numeric_limits<double>::infinity();
    for (double t : t_grid) best = std::max(best, eval_expansion(ou_apply(f, t), x));
    return best;
}

double ou_maximal(const RealFn& f, std::span<const double> x, std::span<const double> t_grid,
                  const QuadratureRule& gh) {
    if (t_grid.empty()) throw std::invalid_argument("ou_maximal: empty t grid");
    double best = -std::numeric_limits<double>::infinity();
    for (double t : t_grid) best = std::max(best, ou_apply_quadrature(f, time_convert(t), x, gh));
    return best;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0 && hi > lo) || n < 2) throw std::invalid_argument("log_grid: bad parameters");
    std::vector<double> g(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(i * step);
    return g;
}

double hl_maximal(const RealFn& f, std::span<const double> x, std::span<const double> radii,
                  int points_per_axis) {
    const int d = static_cast<int>(x.size());
    double best = 0.0;
    Vec y(d);
    for (double r : radii) {
        if (!(r > 0.0)) throw std::invalid_argument("hl_maximal: radii must be positive");
        const QuadratureRule box = trapezoid_rule(r, points_per_axis);
        double mass = 0.0;
        tensor_sweep(d, box, [&](std::span<const double> u, double w) {
            if (norm_sq(u) > r * r) return;
            for (int a = 0; a < d; ++a) y[a] = x[a] + u[a];
            mass += w * std::abs(f(y));
        });
        const double volume = unit_ball_volume(d) * std::pow(r, d);
        best = std::max(best, mass / volume);
    }
    return best;
}

namespace {

// One golden-section pass around the best grid cell sharpens the grid sup.
double refine_sup(const std::function<double(double)>& g, double lo, double hi, int iters = 40) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = g(c), fd = g(d);
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = g(d);
        }
    }
    return std::max(fc, fd);
}

}  // namespace

KernelBoundReport kernel_bound_report(std::span<const double> x, std::span<const double> y,
                                      std::span<const double> s_grid) {
    if (s_grid.size() < 2) throw std::invalid_argument("kernel_bound_report: s grid too small");
    const Ball ball = admissible_ball(x);
    if (ball.contains(y))
        throw std::invalid_argument(
            "kernel_bound_report: y lies in the admissible ball (estimates hold on the global "
            "region only)");
    const int d = static_cast<int>(x.size());

    KernelBoundReport rep;
    rep.x.assign(x.begin(), x.end());
    rep.y.assign(y.begin(), y.end());
    rep.b = 2.0 * dot(x, y);
    rep.a = norm_sq(x) + norm_sq(y);

    if (rep.b > 0.0) {
        rep.branch = KernelBoundReport::Branch::b_positive;
        const double root = std::sqrt(std::max(0.0, rep.a * rep.a - rep.b * rep.b));
        rep.t0 = 2.0 * root / (rep.a + root);
        Vec sum(d), diff(d);
        for (int i = 0; i < d; ++i) {
            sum[i] = x[i] + y[i];
            diff[i] = x[i] - y[i];
        }
        rep.u0 = 0.5 * (norm_sq(y) - norm_sq(x) + norm(sum) * norm(diff));
        rep.bound = std::exp(-rep.u0) / std::pow(rep.t0, 0.5 * d);
    } else {
        rep.branch = KernelBoundReport::Branch::b_nonpositive;
        rep.bound = std::exp(-norm_sq(y));
    }

    auto m_of_s = [&](double s) { return mehler_kernel(ou_time_from_s(s), x, y); };
    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        const double v = m_of_s(s_grid[i]);
        if (v > best_val) {
            best = i;
            best_val = v;
        }
    }
    const double lo = s_grid[best > 0 ? best - 1 : 0];
    const double hi = s_grid[std::min(best + 1, s_grid.size() - 1)];
    rep.sup_m = std::max(best_val, refine_sup(m_of_s, lo, hi));
    rep.ratio = rep.sup_m / rep.bound;
    return rep;
}

std::string kernel_report_csv_header() {
    return "x,y,b,branch,t0,u0,sup_M,bound,ratio";
}

std::string to_csv_row(const KernelBoundReport& rep) {
    std::ostringstream os;
    os.precision(17);
    auto put_vec = [&](const Vec& v) {
        os << '"';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
        os << '"';
    };
    put_vec(rep.x);
    os << ',';
    put_vec(rep.y);
    os << ',' << rep.b << ','
       << (rep.branch == KernelBoundReport::Branch::b_positive ? "b_positive" : "b_nonpositive")
       << ',' << rep.t0 << ',' << rep.u0 << ',' << rep.sup_m << ',' << rep.bound << ','
       << rep.ratio;
    return os.str();
}

double alpha_infinity(double p_inf) {
    if (!(p_inf > 1.0)) throw std::invalid_argument("alpha_infinity: p_inf must exceed 1");
    return 0.5 - std::abs(1.0 / p_inf - 0.5);
}

double global_majorant_integral(std::span<const double> x, double p_inf, int points_per_axis) {
    const double alpha = alpha_infinity(p_inf);
    if (!(alpha > 0.0)) throw std::invalid_argument("global_majorant_integral: alpha_inf <= 0");
    const int d = static_cast<int>(x.size());
    if (points_per_axis == 0) points_per_axis = d == 1 ? 4001 : 421;
    const double radius = truncation_radius(x);
    const QuadratureRule box = trapezoid_rule(radius, points_per_axis);
    Vec sum(d), diff(d);
    double acc = 0.0;
    tensor_sweep(d, box, [&](std::span<const double> y, double w) {
        for (int a = 0; a < d; ++a) {
            sum[a] = x[a] + y[a];
            diff[a] = x[a] - y[a];
        }
        const double ns = norm(sum);
        acc += w * std::pow(ns, d) * std::exp(-alpha * ns * norm(diff));
    });
    return acc;
}

}  // namespace gvlp
