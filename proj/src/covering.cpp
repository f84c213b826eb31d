#include "gvlp/covering.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "gvlp/semigroup.hpp"

namespace gvlp {

namespace {

constexpr double kSeparationSlack = 1e-12;

// Smallest c with B_h(x) within c*B for every x in B, from the worst-case
// |x - center| = r and the smallest attainable |x|.
double hull_scale(const Ball& b, int dim) {
    const double low_norm = std::max(0.0, norm(b.center) - b.radius);
    const double r_h = dim * (low_norm <= 1.0 ? 1.0 : 1.0 / low_norm);
    return 1.0 + r_h / b.radius;
}

}  // namespace

double CoveringFamily::built_radius() const { return std::sqrt(static_cast<double>(k_max)); }

std::string CoveringFamily::to_json_string() const {
    nlohmann::ordered_json j;
    j["dim"] = dim;
    j["k_max"] = k_max;
    j["balls"] = nlohmann::ordered_json::array();
    for (const auto& m : balls) {
        nlohmann::ordered_json entry;
        entry["center"] = m.ball.center;
        entry["radius"] = m.ball.radius;
        entry["shell"] = m.shell;
        j["balls"].push_back(entry);
    }
    return j.dump();
}

CoveringFamily build_covering(int dim, int k_max) {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("build_covering: only dim 1 and 2 are constructed");
    if (k_max < 1) throw std::invalid_argument("build_covering: k_max must be >= 1");

    CoveringFamily family;
    family.dim = dim;
    family.k_max = k_max;
    family.balls.push_back({Ball{Vec(dim, 0.0), 1.0}, 0});

    for (int k = 1; k <= k_max; ++k) {
        const double rho = 0.5 * (std::sqrt(double(k)) + std::sqrt(double(k + 1)));
        const double diam = std::sqrt(double(k + 1)) - std::sqrt(double(k));
        if (dim == 1) {
            for (double sign : {-1.0, 1.0})
                family.balls.push_back({Ball{Vec{sign * rho}, 0.5 * diam}, k});
        } else {
            // Largest equally spaced count whose chord still separates
            // neighbours; keeps the diameter identity diam = 1/(2 rho) exact.
            const double half_angle = std::asin(std::min(1.0, diam / (2.0 * rho)));
            int count = std::max(1, static_cast<int>(std::floor(M_PI / half_angle)));
            while (count > 1 &&
                   2.0 * rho * std::sin(M_PI / count) < diam * (1.0 + kSeparationSlack))
                --count;
            for (int j = 0; j < count; ++j) {
                const double theta = 2.0 * M_PI * j / count;
                family.balls.push_back(
                    {Ball{Vec{rho * std::cos(theta), rho * std::sin(theta)}, 0.5 * diam}, k});
            }
        }
    }

    // C_n is taken over the covering members themselves (base unscaled,
    // shells tilde-scaled), so B_h(x) within C_n * B holds for every x in B.
    family.scale_hat = 0.0;
    for (const auto& m : family.balls) {
        const double scale = m.shell == 0 ? 1.0 : family.scale_tilde;
        Ball scaled{m.ball.center, scale * m.ball.radius};
        family.scale_hat = std::max(family.scale_hat, hull_scale(scaled, dim));
    }
    return family;
}

double coverage_check(const CoveringFamily& family, std::span<const Vec> samples) {
    const double built = family.built_radius();
    std::size_t covered = 0;
    for (const auto& x : samples) {
        if (norm(x) > built)
            throw std::invalid_argument("coverage_check: sample beyond the built radius");
        for (const auto& m : family.balls) {
            const double scale = m.shell == 0 ? 1.0 : family.scale_tilde;
            if (m.ball.contains(x, scale)) {
                ++covered;
                break;
            }
        }
    }
    return samples.empty() ? 1.0 : static_cast<double>(covered) / samples.size();
}

int overlap_count(const CoveringFamily& family, std::span<const Vec> samples,
                  BallScaling scaling) {
    int worst = 0;
    for (const auto& x : samples) {
        int count = 0;
        for (const auto& m : family.balls) {
            double scale = 1.0;
            if (scaling == BallScaling::tilde)
                scale = m.shell == 0 ? 1.0 : family.scale_tilde;
            else if (scaling == BallScaling::hat)
                scale = family.scale_hat * (m.shell == 0 ? 1.0 : family.scale_tilde);
            if (m.ball.contains(x, scale)) ++count;
        }
        worst = std::max(worst, count);
    }
    return worst;
}

BallStats ball_stats(const Ball& ball, std::span<const Vec> samples_in_ball) {
    if (samples_in_ball.empty()) throw std::invalid_argument("ball_stats: empty sample set");
    BallStats stats;
    double min_sq = norm_sq(samples_in_ball.front());
    double max_sq = min_sq;
    for (const auto& x : samples_in_ball) {
        if (!ball.contains(x, 1.0 + 1e-12))
            throw std::invalid_argument("ball_stats: sample outside the ball");
        const double n2 = norm_sq(x);
        min_sq = std::min(min_sq, n2);
        max_sq = std::max(max_sq, n2);
        const Ball bh = admissible_ball(x);
        stats.hull_constant =
            std::max(stats.hull_constant, (dist(x, ball.center) + bh.radius) / ball.radius);
    }
    stats.density_ratio = std::exp(max_sq - min_sq);
    return stats;
}

}  // namespace gvlp
