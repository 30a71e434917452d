#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "bbmfront/errors.hpp"

namespace bbmfront {

constexpr double kSqrt2 = 1.4142135623730951;

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Square orthogonal map stored row-major.
struct RotationMatrix {
    int dim = 0;
    std::vector<double> m;  // dim*dim, row-major

    std::vector<double> apply(std::span<const double> x) const {
        std::vector<double> y(static_cast<std::size_t>(dim), 0.0);
        for (int i = 0; i < dim; ++i) {
            double s = 0.0;
            for (int j = 0; j < dim; ++j)
                s += m[static_cast<std::size_t>(i * dim + j)] * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        return y;
    }
};

// Rotation sending the unit vector theta to e1, acting as the identity on the
// orthogonal complement of span{theta, e1}. For theta = -e1 the rotation is
// taken in the (e1, e2) plane.
RotationMatrix rotation_to_e1(std::span<const double> theta);

// Centering of the maximal particle norm: sqrt(2) t + (d-4)/(2 sqrt(2)) log t,
// with the log term set to 0 for t <= 1 (the centering is asymptotic and the
// small-t log would produce sign artifacts).
inline double centering_m(double t, int dim) {
    if (t <= 1.0) return kSqrt2 * t;
    return kSqrt2 * t + (static_cast<double>(dim) - 4.0) / (2.0 * kSqrt2) * std::log(t);
}

// Occupancy-front radius: sqrt(2) t - (d+2)/(2 sqrt(2)) log t, same small-t
// convention.
inline double centering_gartner(double t, int dim) {
    if (t <= 1.0) return kSqrt2 * t;
    return kSqrt2 * t - (static_cast<double>(dim) + 2.0) / (2.0 * kSqrt2) * std::log(t);
}

}  // namespace bbmfront
