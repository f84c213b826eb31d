#ifndef GVLP_SAMPLING_HPP
#define GVLP_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gvlp/geometry.hpp"

namespace gvlp {

/// Deterministic uniform generator. mt19937_64 output is pinned by the
/// standard; the [0,1) mapping below avoids std::uniform_real_distribution,
/// whose stream is implementation-defined. Reports that quote a seed stay
/// byte-reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    Vec point_in_box(int dim, double radius) {
        Vec x(dim);
        for (auto& c : x) c = uniform(-radius, radius);
        return x;
    }

  private:
    std::mt19937_64 engine_;
};

/// n points uniform in [-radius, radius]^d.
inline std::vector<Vec> sample_box(int dim, double radius, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vec> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(rng.point_in_box(dim, radius));
    return out;
}

/// n points with norms in [r_lo, r_hi] (rejection from the bounding box).
inline std::vector<Vec> sample_annulus(int dim, double r_lo, double r_hi, std::size_t n,
                                       std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vec> out;
    out.reserve(n);
    while (out.size() < n) {
        Vec x = rng.point_in_box(dim, r_hi);
        const double r = norm(x);
        if (r >= r_lo && r <= r_hi) out.push_back(std::move(x));
    }
    return out;
}

/// n pairs (x, y) with x in [-radius, radius]^d and 0 < |x-y| <= max_sep.
inline std::vector<std::pair<Vec, Vec>> sample_close_pairs(int dim, double radius,
                                                           double max_sep, std::size_t n,
                                                           std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<Vec, Vec>> out;
    out.reserve(n);
    while (out.size() < n) {
        Vec x = rng.point_in_box(dim, radius);
        Vec y = x;
        for (auto& c : y) c += rng.uniform(-max_sep, max_sep);
        const double d = dist(x, y);
        if (d > 0.0 && d <= max_sep) out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

/// Full d-dimensional grid with per_axis points per axis on [lo, hi]^d.
inline std::vector<Vec> grid_points(int dim, double lo, double hi, int per_axis) {
    std::vector<Vec> out;
    const double h = per_axis > 1 ? (hi - lo) / (per_axis - 1) : 0.0;
    std::vector<int> idx(dim, 0);
    for (;;) {
        Vec x(dim);
        for (int a = 0; a < dim; ++a) x[a] = lo + idx[a] * h;
        out.push_back(std::move(x));
        int axis = 0;
        while (axis < dim && ++idx[axis] == per_axis) {
            idx[axis] = 0;
            ++axis;
        }
        if (axis == dim) break;
    }
    return out;
}

}  // namespace gvlp

#endif
