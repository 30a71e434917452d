#include "bbmfront/geometry.hpp"

#include <cmath>

namespace bbmfront {

RotationMatrix rotation_to_e1(std::span<const double> theta) {
    const int d = static_cast<int>(theta.size());
    if (d < 1) throw parameter_error("rotation_to_e1: empty direction");
    const double n = norm(theta);
    if (std::abs(n - 1.0) > 1e-12)
        throw parameter_error("rotation_to_e1: direction is not a unit vector");

    RotationMatrix rot;
    rot.dim = d;
    rot.m.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0.0);
    auto at = [&](int i, int j) -> double& { return rot.m[static_cast<std::size_t>(i * d + j)]; };
    for (int i = 0; i < d; ++i) at(i, i) = 1.0;

    const double c = theta[0];  // cos of the angle between theta and e1
    // Transversal part of theta.
    std::vector<double> v(theta.begin() + 1, theta.end());
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);  // sin of the angle

    if (s < 1e-15) {
        if (c > 0.0) return rot;  // theta == e1: identity
        // Antipodal case: half-turn in the (e1, e2) plane.
        if (d < 2) throw parameter_error("rotation_to_e1: -e1 in dimension 1");
        at(0, 0) = -1.0;
        at(1, 1) = -1.0;
        return rot;
    }

    // Plane rotation in span{e1, u} with u = (0, v/s): maps theta to e1.
    //   R = I + (c-1)(e1 e1^T + u u^T) + s (e1 u^T - u e1^T)
    for (double& x : v) x /= s;
    at(0, 0) = c;
    for (int j = 1; j < d; ++j) {
        const double uj = v[static_cast<std::size_t>(j - 1)];
        at(0, j) = s * uj;
        at(j, 0) = -s * uj;
        for (int k = 1; k < d; ++k)
            at(j, k) += (c - 1.0) * uj * v[static_cast<std::size_t>(k - 1)];
    }
    return rot;
}

}  // namespace bbmfront
