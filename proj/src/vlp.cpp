#include "gvlp/vlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gvlp {

ModularSampler::ModularSampler(const RealFn& f, const ExponentFunction& p, Measure measure,
                               const QuadratureRule& rule, int dim)
    : measure_(measure) {
    if (measure == Measure::gaussian && rule.kind != RuleKind::gauss_hermite)
        throw std::invalid_argument("ModularSampler: gaussian measure needs a gauss_hermite rule");
    if (measure == Measure::lebesgue && rule.kind != RuleKind::trapezoid_box)
        throw std::invalid_argument("ModularSampler: lebesgue measure needs a trapezoid rule");
    if (measure == Measure::lebesgue) truncation_radius_ = rule.nodes.back();

    const double normalization =
        measure == Measure::gaussian ? std::pow(M_PI, -0.5 * dim) : 1.0;
    tensor_sweep(dim, rule, [&](std::span<const double> x, double w) {
        const double fv = std::abs(f(x));
        if (!std::isfinite(fv))
            throw std::runtime_error("ModularSampler: non-finite |f| at a node");
        const double pv = p(x);
        if (!(pv >= 1.0) || !std::isfinite(pv))
            throw std::runtime_error("ModularSampler: exponent out of range at a node");
        if (fv == 0.0) return;  // contributes nothing for any lambda
        weight_.push_back(w * normalization);
        log_abs_f_.push_back(std::log(fv));
        exponent_.push_back(pv);
        sup_abs_f_ = std::max(sup_abs_f_, fv);
    });
}

double ModularSampler::rho(double lambda) const {
    if (!(lambda > 0.0)) throw std::invalid_argument("ModularSampler::rho: lambda must be > 0");
    const double log_lambda = std::log(lambda);
    double acc = 0.0;
    for (std::size_t i = 0; i < weight_.size(); ++i)
        acc += weight_[i] * std::exp(exponent_[i] * (log_abs_f_[i] - log_lambda));
    return acc;
}

ModularValue modular(const RealFn& f, const ExponentFunction& p, Measure measure,
                     const QuadratureRule& rule) {
    ModularSampler sampler(f, p, measure, rule, p.dim);
    return {sampler.rho(1.0), measure, sampler.truncation_radius()};
}

NormResult luxemburg_norm(const ModularSampler& sampler, double tol) {
    if (!(tol > 0.0 && tol <= 1e-2))
        throw std::invalid_argument("luxemburg_norm: tol must lie in (0, 1e-2]");
    if (sampler.identically_zero()) return {0.0, 0.0, 0.0, 0.0};

    double hi = std::max(sampler.sup_abs_f() * 1e-6, 1e-300);
    int doubling = 0;
    while (sampler.rho(hi) > 1.0) {
        hi *= 2.0;
        if (++doubling > 60)
            throw std::runtime_error("luxemburg_norm: bracket expansion failed (modular stays > 1)");
    }
    double lo = 0.5 * hi;
    if (doubling == 0) {
        // initial guess already below 1: shrink until the modular crosses it
        while (sampler.rho(lo) <= 1.0) {
            hi = lo;
            lo *= 0.5;
            if (lo < 1e-300) return {0.0, 0.0, hi, sampler.rho(hi)};
        }
    }

    // rho(lo) > 1 >= rho(hi); bisect to relative width tol
    for (int i = 0; i < 200 && hi - lo > tol * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (sampler.rho(mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return {hi, lo, hi, sampler.rho(hi)};
}

NormResult luxemburg_norm(const RealFn& f, const ExponentFunction& p, Measure measure,
                          const QuadratureRule& rule, double tol) {
    return luxemburg_norm(ModularSampler(f, p, measure, rule, p.dim), tol);
}

NormEquivalence norm_equivalence_report(const RealFn& f, const ExponentFunction& p,
                                        const QuadratureRule& gauss_hermite,
                                        const QuadratureRule& box, double tol) {
    NormEquivalence out;
    out.gaussian_norm = luxemburg_norm(f, p, Measure::gaussian, gauss_hermite, tol).norm;
    if (out.gaussian_norm == 0.0)
        throw std::invalid_argument("norm_equivalence_report: zero Gaussian norm");
    auto weighted = [&](std::span<const double> x) {
        return f(x) * std::exp(-norm_sq(x) / p(x));
    };
    out.weighted_lebesgue_norm = luxemburg_norm(weighted, p, Measure::lebesgue, box, tol).norm;
    out.ratio = out.weighted_lebesgue_norm / out.gaussian_norm;
    return out;
}

HolderCheck holder_check(const RealFn& f, const RealFn& g, const ExponentFunction& p,
                         const QuadratureRule& gh, double tol) {
    HolderCheck out;
    out.lhs = integrate_gaussian(
        [&](std::span<const double> x) { return std::abs(f(x) * g(x)); }, p.dim, gh);
    const double nf = luxemburg_norm(f, p, Measure::gaussian, gh, tol).norm;
    const double ng = luxemburg_norm(g, conjugate(p), Measure::gaussian, gh, tol).norm;
    out.rhs = nf * ng;
    out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
    out.passed = out.lhs <= 4.0 * out.rhs + tol;
    return out;
}

namespace {

// Luxemburg norm of f restricted to a ball, Lebesgue measure: trapezoid on
// the bounding box with a radial cutoff (exact restriction in d = 1).
NormResult ball_restricted_norm(const RealFn& f, const ExponentFunction& p, const Ball& ball,
                                int points_per_axis, double tol) {
    const QuadratureRule box = trapezoid_rule(ball.radius, points_per_axis);
    const int d = p.dim;
    Vec y(d);
    auto restricted = [&](std::span<const double> u) {
        if (norm_sq(u) > ball.radius * ball.radius) return 0.0;
        for (int a = 0; a < d; ++a) y[a] = ball.center[a] + u[a];
        return f(y);
    };
    auto shifted_p = [&](std::span<const double> u) {
        Vec z(d);
        for (int a = 0; a < d; ++a) z[a] = ball.center[a] + u[a];
        return p(z);
    };
    ExponentFunction p_local =
        make_exponent_function(d, shifted_p, p.p_minus, p.p_plus, p.p_inf, p.name + "|ball");
    return luxemburg_norm(restricted, p_local, Measure::lebesgue, box, tol);
}

}  // namespace

ClassGCheck class_g_check(const RealFn& f, const RealFn& g, const ExponentFunction& p,
                          const CoveringFamily& family, int points_per_axis, double tol) {
    const ExponentFunction q = conjugate(p);
    ClassGCheck out;
    for (const auto& m : family.balls) {
        const double scale = m.shell == 0 ? 1.0 : family.scale_tilde;
        Ball b{m.ball.center, scale * m.ball.radius};
        const double nf = ball_restricted_norm(f, p, b, points_per_axis, tol).norm;
        const double ng = ball_restricted_norm(g, q, b, points_per_axis, tol).norm;
        out.sum += nf * ng;
    }
    const double radius = family.built_radius() + 2.0;
    const int full_points = p.dim == 1 ? std::max(2001, points_per_axis) : std::max(301, points_per_axis);
    const QuadratureRule box = trapezoid_rule(radius, full_points);
    out.product = luxemburg_norm(f, p, Measure::lebesgue, box, tol).norm *
                  luxemburg_norm(g, q, Measure::lebesgue, box, tol).norm;
    out.ratio = out.product > 0.0 ? out.sum / out.product : 0.0;
    return out;
}

Lemma326Report lemma326_report(const RealFn& rho, double rho_minus, double rho_inf,
                               const RealFn& big_f, double box_radius, int n_decay, int dim,
                               int points_per_axis) {
    if (!(rho_inf > 0.0) || !std::isfinite(rho_inf))
        throw std::invalid_argument("lemma326_report: need 0 < rho_inf < inf");
    if (!(n_decay > dim / rho_minus))
        throw std::invalid_argument("lemma326_report: need N > d / rho_minus");

    const QuadratureRule box = trapezoid_rule(box_radius, points_per_axis);
    Lemma326Report rep;
    tensor_sweep(dim, box, [&](std::span<const double> y, double w) {
        const double fv = big_f(y);
        if (fv < 0.0 || fv > 1.0)
            throw std::runtime_error("lemma326_report: F outside [0,1] at a node");
        const double rv = rho(y);
        rep.int_f_rho += w * std::pow(fv, rv);
        rep.int_f_rho_inf += w * std::pow(fv, rho_inf);
        rep.int_r += w * std::pow(std::exp(1.0) + norm(y), -double(n_decay) * rho_minus);
    });
    rep.c1 = rep.int_f_rho_inf > 0.0
                 ? std::max(0.0, (rep.int_f_rho - rep.int_r) / rep.int_f_rho_inf)
                 : 0.0;
    rep.c2 = rep.int_f_rho > 0.0
                 ? std::max(0.0, (rep.int_f_rho_inf - rep.int_r) / rep.int_f_rho)
                 : 0.0;
    return rep;
}

double duality_pairing(const RealFn& f, const ExponentFunction& p,
                       std::span<const RealFn> test_set, const QuadratureRule& gh, double tol) {
    if (test_set.empty()) throw std::invalid_argument("duality_pairing: empty test set");
    const ExponentFunction q = conjugate(p);
    double best = 0.0;
    for (const auto& g : test_set) {
        const double ng = luxemburg_norm(g, q, Measure::gaussian, gh, tol).norm;
        if (ng == 0.0) continue;
        const double pairing = integrate_gaussian(
            [&](std::span<const double> x) { return f(x) * g(x) / ng; }, p.dim, gh);
        best = std::max(best, std::abs(pairing));
    }
    return best;
}

}  // namespace gvlp
