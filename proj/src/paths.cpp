#include "bbmfront/paths.hpp"

#include <algorithm>
#include <cmath>

namespace bbmfront {

PathGrid sample_brownian_path(int dim, const TimeGrid& grid, RngStream& rng) {
    if (dim < 1) throw parameter_error("brownian path: dim must be >= 1");
    grid.validate();
    PathGrid path(grid, dim);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double sd = std::sqrt(grid[i] - grid[i - 1]);
        auto prev = path.point(i - 1);
        auto cur = path.point_mut(i);
        for (int j = 0; j < dim; ++j) cur[j] = prev[j] + sd * rng.normal();
    }
    return path;
}

PathGrid sample_bessel3_path(const TimeGrid& grid, RngStream& rng) {
    const PathGrid bm = sample_brownian_path(3, grid, rng);
    PathGrid out(grid, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto p = bm.point(i);
        out.values[i] = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    }
    return out;
}

BrownianPath::BrownianPath(int dim, const TimeGrid& grid, RngStream& rng)
    : path_(sample_brownian_path(dim, grid, rng)) {}

void BrownianPath::extend(const std::vector<double>& later_times, RngStream& rng) {
    const int d = path_.dim;
    for (double t : later_times) {
        const double prev_t = path_.grid.horizon();
        if (!(t > prev_t)) throw grid_error("extend: times must exceed the horizon");
        const double sd = std::sqrt(t - prev_t);
        const std::size_t n = path_.size();
        path_.grid.points.push_back(t);
        path_.values.resize((n + 1) * static_cast<std::size_t>(d));
        auto prev = path_.point(n - 1);
        auto cur = path_.point_mut(n);
        for (int j = 0; j < d; ++j) cur[j] = prev[j] + sd * rng.normal();
    }
}

void BrownianPath::insert(const std::vector<double>& times, RngStream& rng) {
    bridge_insert(path_, times, rng);
}

void bridge_insert(PathGrid& path, const std::vector<double>& times, RngStream& rng) {
    if (times.empty()) return;
    std::vector<double> ts = times;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    const auto& pts = path.grid.points;
    for (double t : ts)
        if (t < pts.front() || t > pts.back())
            throw grid_error("bridge_insert: time outside the path interior");

    // Single merged pass; inserting several points into one interval
    // conditions each on the previously inserted left neighbor and the fixed
    // right grid point, which reproduces the joint bridge law.
    const int d = path.dim;
    const std::size_t dsz = static_cast<std::size_t>(d);
    std::vector<double> new_pts;
    std::vector<double> new_vals;
    new_pts.reserve(pts.size() + ts.size());
    new_vals.reserve((pts.size() + ts.size()) * dsz);

    std::size_t ti = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        new_pts.push_back(pts[k]);
        auto row = path.point(k);
        new_vals.insert(new_vals.end(), row.begin(), row.end());
        while (ti < ts.size() && ts[ti] <= pts[k]) ++ti;  // duplicates of grid points
        if (k + 1 == pts.size()) break;
        const double b = pts[k + 1];
        auto hi = path.point(k + 1);
        while (ti < ts.size() && ts[ti] < b) {
            const double t = ts[ti++];
            const double a = new_pts.back();
            const double w = (t - a) / (b - a);
            const double sd = std::sqrt((t - a) * (b - t) / (b - a));
            const std::size_t left = new_vals.size() - dsz;
            new_pts.push_back(t);
            for (int j = 0; j < d; ++j) {
                const double lo = new_vals[left + static_cast<std::size_t>(j)];
                new_vals.push_back(lo + w * (hi[j] - lo) + sd * rng.normal());
            }
        }
    }
    path.grid.points = std::move(new_pts);
    path.values = std::move(new_vals);
}

PathGrid sample_brownian_bridge(int dim, const TimeGrid& grid,
                                std::span<const double> endpoint, RngStream& rng) {
    if (dim < 1 || static_cast<int>(endpoint.size()) != dim)
        throw parameter_error("brownian bridge: endpoint dimension mismatch");
    grid.validate();
    const double T = grid.horizon();
    if (!(T > 0.0)) throw grid_error("brownian bridge: horizon must be positive");

    PathGrid path(grid, dim);
    auto last = path.point_mut(grid.size() - 1);
    for (int j = 0; j < dim; ++j) last[j] = endpoint[static_cast<std::size_t>(j)];
    // Forward conditional recursion toward the pinned endpoint.
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double t0 = grid[i - 1], t1 = grid[i];
        const double w = (t1 - t0) / (T - t0);
        const double sd = std::sqrt((t1 - t0) * (T - t1) / (T - t0));
        auto prev = path.point(i - 1);
        auto cur = path.point_mut(i);
        for (int j = 0; j < dim; ++j)
            cur[j] = prev[j] + w * (endpoint[static_cast<std::size_t>(j)] - prev[j]) +
                     sd * rng.normal();
    }
    return path;
}

PathGrid BrownianPath::norm_path() const {
    PathGrid out(path_.grid, 1);
    for (std::size_t i = 0; i < path_.size(); ++i) {
        auto p = path_.point(i);
        double s = 0.0;
        for (double c : p) s += c * c;
        out.values[i] = std::sqrt(s);
    }
    return out;
}

double last_exit_time(const PathGrid& scalar_path, double level) {
    if (scalar_path.dim != 1) throw parameter_error("last_exit_time: scalar path required");
    for (std::size_t i = scalar_path.size(); i-- > 0;) {
        const double v = scalar_path.values[i];
        if (v >= 0.0 && v <= level) return scalar_path.grid[i];
    }
    return 0.0;
}

}  // namespace bbmfront
