#ifndef GVLP_GEOMETRY_HPP
#define GVLP_GEOMETRY_HPP

#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace gvlp {

using Vec = std::vector<double>;

/// Scalar field on R^d, evaluated at a point given as a span of coordinates.
using RealFn = std::function<double(std::span<const double>)>;

inline double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm_sq(std::span<const double> x) { return dot(x, x); }

inline double norm(std::span<const double> x) { return std::sqrt(norm_sq(x)); }

inline double dist(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Volume of the unit ball in dimension d (d <= 3 is all we ever use).
inline double unit_ball_volume(int dim) {
    switch (dim) {
        case 1: return 2.0;
        case 2: return 3.14159265358979323846;
        case 3: return 4.18879020478639098462;  // 4*pi/3
        default: return 0.0;
    }
}

struct Ball {
    Vec center;
    double radius = 0.0;

    bool contains(std::span<const double> x, double scale = 1.0) const {
        return dist(center, x) <= scale * radius;
    }
};

}  // namespace gvlp

#endif
