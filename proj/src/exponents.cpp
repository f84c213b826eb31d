#include "gvlp/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gvlp {

namespace {

void validate_bounds(double p_minus, double p_plus) {
    if (!(p_minus > 1.0))
        throw std::invalid_argument("ExponentFunction: requires p_minus > 1");
    if (!(p_minus <= p_plus) || !std::isfinite(p_plus))
        throw std::invalid_argument("ExponentFunction: requires p_minus <= p_plus < inf");
}

}  // namespace

ExponentFunction make_exponent_function(int dim, RealFn eval, double p_minus, double p_plus,
                                        std::optional<double> p_inf, std::string name) {
    validate_bounds(p_minus, p_plus);
    if (p_inf && (*p_inf < p_minus || *p_inf > p_plus))
        throw std::invalid_argument("ExponentFunction: p_inf outside [p_minus, p_plus]");
    ExponentFunction p;
    p.dim = dim;
    p.eval = std::move(eval);
    p.p_minus = p_minus;
    p.p_plus = p_plus;
    p.p_inf = p_inf;
    p.name = std::move(name);
    return p;
}

ExponentFunction make_constant_exponent(int dim, double p0) {
    std::ostringstream id;
    id << "constant(" << p0 << ")";
    return make_exponent_function(
        dim, [p0](std::span<const double>) { return p0; }, p0, p0, p0, id.str());
}

ExponentFunction make_rational_decay_exponent(int dim, double p0, double c) {
    std::ostringstream id;
    id << "rational_decay(" << p0 << "," << c << ")";
    auto fn = [p0, c](std::span<const double> x) { return p0 + c / (1.0 + norm_sq(x)); };
    const double lo = c >= 0.0 ? p0 : p0 + c;
    const double hi = c >= 0.0 ? p0 + c : p0;
    return make_exponent_function(dim, fn, lo, hi, p0, id.str());
}

ExponentFunction make_oscillating_exponent(int dim, double p0, double a) {
    std::ostringstream id;
    id << "oscillating(" << p0 << "," << a << ")";
    auto fn = [p0, a](std::span<const double> x) { return p0 + a * std::sin(norm(x)); };
    // no asymptotic value: p_inf left unset
    return make_exponent_function(dim, fn, p0 - std::abs(a), p0 + std::abs(a), std::nullopt,
                                  id.str());
}

ExponentFunction make_step_exponent(int dim, double p0, double p1, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("step exponent: radius must be positive");
    std::ostringstream id;
    id << "step(" << p0 << "," << p1 << "," << r << ")";
    auto fn = [p0, p1, r](std::span<const double> x) { return norm(x) <= r ? p0 : p1; };
    return make_exponent_function(dim, fn, std::min(p0, p1), std::max(p0, p1), p1, id.str());
}

ExponentFunction make_exponent(const std::string& name, std::span<const double> params, int dim) {
    auto need = [&](std::size_t n) {
        if (params.size() != n) {
            std::ostringstream os;
            os << "exponent '" << name << "' expects " << n << " parameter(s), got "
               << params.size();
            throw std::invalid_argument(os.str());
        }
    };
    if (name == "constant") {
        need(1);
        return make_constant_exponent(dim, params[0]);
    }
    if (name == "rational_decay") {
        need(2);
        return make_rational_decay_exponent(dim, params[0], params[1]);
    }
    if (name == "oscillating") {
        need(2);
        return make_oscillating_exponent(dim, params[0], params[1]);
    }
    if (name == "step") {
        need(3);
        return make_step_exponent(dim, params[0], params[1], params[2]);
    }
    throw std::invalid_argument("unknown exponent catalogue name: " + name);
}

ExponentFunction conjugate(const ExponentFunction& p) {
    if (!(p.p_minus > 1.0))
        throw std::invalid_argument("conjugate: p_minus must exceed 1 (conjugate unbounded)");
    ExponentFunction q;
    q.dim = p.dim;
    q.eval = [inner = p.eval](std::span<const double> x) {
        const double v = inner(x);
        return v / (v - 1.0);
    };
    q.p_minus = conjugate_exponent(p.p_plus);
    q.p_plus = conjugate_exponent(p.p_minus);
    if (p.p_inf) q.p_inf = conjugate_exponent(*p.p_inf);
    q.name = "conjugate(" + p.name + ")";
    return q;
}

std::string to_string(RegularityClass c) {
    switch (c) {
        case RegularityClass::LH0: return "LH0";
        case RegularityClass::LHinf: return "LHinf";
        case RegularityClass::PgammaInf: return "PgammaInf";
    }
    return "?";
}

RegularityReport check_log_holder_local(const ExponentFunction& p,
                                        std::span<const std::pair<Vec, Vec>> pairs, double cap) {
    if (pairs.empty())
        throw std::invalid_argument("check_log_holder_local: need at least one pair");
    RegularityReport rep;
    rep.class_name = RegularityClass::LH0;
    rep.cap = cap;
    for (const auto& [x, y] : pairs) {
        const double d = dist(x, y);
        if (d == 0.0) {
            ++rep.skipped;
            continue;
        }
        if (d > 0.5)
            throw std::invalid_argument("check_log_holder_local: pair distance exceeds 1/2");
        const double ratio =
            std::abs(1.0 / p(x) - 1.0 / p(y)) * std::log(std::exp(1.0) + 1.0 / d);
        if (ratio > rep.constant) {
            rep.constant = ratio;
            rep.witness_pair = {x, y};
        }
        ++rep.samples_used;
    }
    rep.passed = rep.constant <= cap;
    return rep;
}

RegularityReport check_log_holder_inf(const RealFn& g, std::span<const Vec> samples, double g_inf,
                                      double cap) {
    if (samples.empty()) throw std::invalid_argument("check_log_holder_inf: empty sample set");
    RegularityReport rep;
    rep.class_name = RegularityClass::LHinf;
    rep.cap = cap;
    for (const auto& x : samples) {
        const double ratio = std::abs(g(x) - g_inf) * std::log(std::exp(1.0) + norm(x));
        if (ratio > rep.constant) {
            rep.constant = ratio;
            rep.witness_pair = {x, x};
        }
        ++rep.samples_used;
    }
    rep.passed = rep.constant <= cap;
    return rep;
}

RegularityReport check_p_gamma_inf(const ExponentFunction& p, std::span<const Vec> samples,
                                   std::optional<double> p_inf_guess, double cap) {
    if (samples.empty()) throw std::invalid_argument("check_p_gamma_inf: empty sample set");
    for (const auto& x : samples)
        if (norm_sq(x) == 0.0)
            throw std::invalid_argument("check_p_gamma_inf: samples must exclude the origin");

    double p_inf;
    if (p_inf_guess) {
        p_inf = *p_inf_guess;
    } else {
        // fit as the average of p over the outermost decile of sample radii
        std::vector<std::size_t> idx(samples.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return norm_sq(samples[a]) > norm_sq(samples[b]);
        });
        const std::size_t decile = std::max<std::size_t>(1, samples.size() / 10);
        double sum = 0.0;
        for (std::size_t i = 0; i < decile; ++i) sum += p(samples[idx[i]]);
        p_inf = sum / static_cast<double>(decile);
    }

    RegularityReport rep;
    rep.class_name = RegularityClass::PgammaInf;
    rep.cap = cap;
    rep.fitted_p_inf = p_inf;
    for (const auto& x : samples) {
        const double ratio = std::abs(p(x) - p_inf) * norm_sq(x);
        if (ratio > rep.constant) {
            rep.constant = ratio;
            rep.witness_pair = {x, x};
        }
        ++rep.samples_used;
    }
    rep.passed = rep.constant <= cap;
    return rep;
}

ExpEquivalenceReport check_exp_equivalence(const ExponentFunction& p, std::span<const Vec> samples,
                                           double c_gamma) {
    if (!p.p_inf) throw std::invalid_argument("check_exp_equivalence: p_inf must be set");
    if (samples.empty()) throw std::invalid_argument("check_exp_equivalence: empty sample set");
    const double p_inf = *p.p_inf;
    const double q_inf = conjugate_exponent(p_inf);
    const auto q = conjugate(p);

    ExpEquivalenceReport rep;
    rep.max_primal = rep.max_conjugate = -std::numeric_limits<double>::infinity();
    rep.min_primal = rep.min_conjugate = std::numeric_limits<double>::infinity();
    for (const auto& x : samples) {
        const double r2 = norm_sq(x);
        const double primal = std::exp(-r2 * (p(x) / p_inf - 1.0));
        const double conj = std::exp(-r2 * (q(x) / q_inf - 1.0));
        rep.max_primal = std::max(rep.max_primal, primal);
        rep.min_primal = std::min(rep.min_primal, primal);
        rep.max_conjugate = std::max(rep.max_conjugate, conj);
        rep.min_conjugate = std::min(rep.min_conjugate, conj);
    }
    rep.c1 = std::exp(c_gamma / p_inf);
    rep.c2 = std::exp(c_gamma * conjugate_exponent(p.p_minus) / p_inf);
    const double slack = 1.0 + 1e-12;
    rep.passed = rep.max_primal <= rep.c1 * slack && rep.min_primal >= 1.0 / (rep.c1 * slack) &&
                 rep.max_conjugate <= rep.c2 * slack &&
                 rep.min_conjugate >= 1.0 / (rep.c2 * slack);
    return rep;
}

}  // namespace gvlp
