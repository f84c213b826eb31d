#include "gvlp/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace gvlp {

namespace {

void enumerate_rec(int dim, int axis, int budget, std::vector<int>& current,
                   std::vector<MultiIndex>& out) {
    if (axis == dim - 1) {
        for (int e = 0; e <= budget; ++e) {
            current[axis] = e;
            // only emit exact order handled by caller loop
            out.emplace_back(current);
        }
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        current[axis] = e;
        enumerate_rec(dim, axis + 1, budget - e, current, out);
    }
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(int dim, int max_order) {
    if (dim < 1) throw std::invalid_argument("multi_indices_up_to: dim must be positive");
    std::vector<MultiIndex> all;
    std::vector<int> current(dim, 0);
    enumerate_rec(dim, 0, max_order, current, all);
    std::sort(all.begin(), all.end(), [](const MultiIndex& a, const MultiIndex& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.entries < b.entries;
    });
    return all;
}

std::vector<double> hermite_axis_values(int max_order, double x) {
    std::vector<double> h(max_order + 1);
    h[0] = 1.0;
    if (max_order >= 1) h[1] = std::sqrt(2.0) * x;
    for (int n = 1; n < max_order; ++n)
        h[n + 1] = x * std::sqrt(2.0 / (n + 1)) * h[n] - std::sqrt(n / (n + 1.0)) * h[n - 1];
    return h;
}

double hermite_normalized_eval(const MultiIndex& nu, std::span<const double> x) {
    double v = 1.0;
    for (int a = 0; a < nu.dim(); ++a) {
        const int n = nu.entries[a];
        v *= hermite_axis_values(n, x[a])[n];
    }
    return v;
}

HermiteExpansion HermiteExpansion::basis(const MultiIndex& nu) {
    HermiteExpansion e(nu.dim());
    e.set_coeff(nu, 1.0);
    return e;
}

int HermiteExpansion::max_order() const {
    int m = 0;
    for (const auto& [nu, c] : coeffs_) m = std::max(m, nu.order());
    return m;
}

double HermiteExpansion::coeff(const MultiIndex& nu) const {
    const auto it = coeffs_.find(nu);
    return it == coeffs_.end() ? 0.0 : it->second;
}

void HermiteExpansion::set_coeff(const MultiIndex& nu, double c) {
    if (nu.dim() != dim_) throw std::invalid_argument("HermiteExpansion: index dimension mismatch");
    if (std::abs(c) <= kCoeffTolerance)
        coeffs_.erase(nu);
    else
        coeffs_[nu] = c;
}

HermiteExpansion& HermiteExpansion::operator+=(const HermiteExpansion& other) {
    for (const auto& [nu, c] : other.coeffs_) add_coeff(nu, c);
    return *this;
}

HermiteExpansion& HermiteExpansion::operator-=(const HermiteExpansion& other) {
    for (const auto& [nu, c] : other.coeffs_) add_coeff(nu, -c);
    return *this;
}

HermiteExpansion& HermiteExpansion::operator*=(double c) {
    std::map<MultiIndex, double> scaled;
    for (const auto& [nu, v] : coeffs_)
        if (std::abs(c * v) > kCoeffTolerance) scaled[nu] = c * v;
    coeffs_ = std::move(scaled);
    return *this;
}

HermiteExpansion HermiteExpansion::apply_degree_multiplier(
    const std::function<double(int)>& m) const {
    HermiteExpansion out(dim_);
    for (const auto& [nu, c] : coeffs_) out.set_coeff(nu, m(nu.order()) * c);
    return out;
}

std::string HermiteExpansion::to_json_string() const {
    nlohmann::ordered_json j;
    j["dim"] = dim_;
    j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& [nu, c] : coeffs_) {
        nlohmann::ordered_json entry;
        entry["nu"] = nu.entries;
        entry["c"] = c;
        j["coeffs"].push_back(entry);
    }
    return j.dump();
}

HermiteExpansion HermiteExpansion::from_json_string(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    HermiteExpansion e(j.at("dim").get<int>());
    for (const auto& entry : j.at("coeffs"))
        e.set_coeff(MultiIndex(entry.at("nu").get<std::vector<int>>()),
                    entry.at("c").get<double>());
    return e;
}

HermiteExpansion expand(const RealFn& f, int dim, int max_order, const QuadratureRule& rule) {
    const auto indices = multi_indices_up_to(dim, max_order);
    std::vector<double> acc(indices.size(), 0.0);
    std::vector<std::vector<double>> axis(dim);

    tensor_sweep(dim, rule, [&](std::span<const double> x, double w) {
        const double fv = f(x);
        if (!std::isfinite(fv)) throw std::runtime_error("expand: non-finite integrand value");
        for (int a = 0; a < dim; ++a) axis[a] = hermite_axis_values(max_order, x[a]);
        for (std::size_t i = 0; i < indices.size(); ++i) {
            double basis = 1.0;
            for (int a = 0; a < dim; ++a) basis *= axis[a][indices[i].entries[a]];
            acc[i] += w * fv * basis;
        }
    });

    const double scale = std::pow(M_PI, -0.5 * dim);
    HermiteExpansion e(dim);
    for (std::size_t i = 0; i < indices.size(); ++i) e.set_coeff(indices[i], scale * acc[i]);
    return e;
}

HermiteExpansion project_degree(const HermiteExpansion& e, int k) {
    if (k < 0) throw std::invalid_argument("project_degree: k must be non-negative");
    HermiteExpansion out(e.dim());
    for (const auto& [nu, c] : e.coeffs())
        if (nu.order() == k) out.set_coeff(nu, c);
    return out;
}

double eval_expansion(const HermiteExpansion& e, std::span<const double> x) {
    if (e.empty()) return 0.0;
    const int m = e.max_order();
    std::vector<std::vector<double>> axis(e.dim());
    for (int a = 0; a < e.dim(); ++a) axis[a] = hermite_axis_values(m, x[a]);
    double v = 0.0;
    for (const auto& [nu, c] : e.coeffs()) {
        double basis = 1.0;
        for (int a = 0; a < e.dim(); ++a) basis *= axis[a][nu.entries[a]];
        v += c * basis;
    }
    return v;
}

RealFn expansion_fn(HermiteExpansion e) {
    return [e = std::move(e)](std::span<const double> x) { return eval_expansion(e, x); };
}

}  // namespace gvlp
