#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bbmfront/errors.hpp"

namespace bbmfront {

// Time grid: explicit point list starting at 0, strictly increasing.
// Explicit lists (rather than start/step/count) so non-uniform grids, e.g.
// geometric grids dense near 0, work everywhere.
struct TimeGrid {
    std::vector<double> points;

    TimeGrid() = default;
    explicit TimeGrid(std::vector<double> pts) : points(std::move(pts)) { validate(); }

    std::size_t size() const { return points.size(); }
    double operator[](std::size_t i) const { return points[i]; }
    double horizon() const { return points.empty() ? 0.0 : points.back(); }

    void validate() const {
        if (points.empty()) throw grid_error("time grid is empty");
        if (points.front() != 0.0) throw grid_error("time grid must start at 0");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!std::isfinite(points[i])) throw grid_error("time grid has non-finite point");
            if (i > 0 && !(points[i] > points[i - 1]))
                throw grid_error("time grid is not strictly increasing at index " +
                                 std::to_string(i));
        }
    }

    static TimeGrid single() { return TimeGrid({0.0}); }

    // 0, h, 2h, ..., horizon with `steps` intervals.
    static TimeGrid uniform(double horizon, std::size_t steps) {
        if (!(horizon > 0.0) || steps == 0)
            throw grid_error("uniform grid needs horizon > 0 and steps >= 1");
        std::vector<double> pts(steps + 1);
        for (std::size_t i = 0; i <= steps; ++i)
            pts[i] = horizon * static_cast<double>(i) / static_cast<double>(steps);
        pts[0] = 0.0;
        pts[steps] = horizon;
        return TimeGrid(std::move(pts));
    }

    // {0} then geometric from `first` to (at least) `horizon`.
    static TimeGrid geometric(double first, double horizon, int points_per_decade) {
        if (!(first > 0.0) || !(horizon > first) || points_per_decade < 1)
            throw grid_error("geometric grid needs 0 < first < horizon");
        std::vector<double> pts{0.0};
        const double ratio = std::pow(10.0, 1.0 / points_per_decade);
        for (double t = first; t < horizon; t *= ratio) pts.push_back(t);
        pts.push_back(horizon);
        return TimeGrid(std::move(pts));
    }
};

// Scalar- or vector-valued path sampled on a time grid. Values stored
// row-major: values[i*dim + j] is coordinate j at grid point i.
struct PathGrid {
    TimeGrid grid;
    int dim = 1;
    std::vector<double> values;

    PathGrid() = default;
    PathGrid(TimeGrid g, int d) : grid(std::move(g)), dim(d) {
        if (dim < 1) throw parameter_error("path dimension must be >= 1");
        values.assign(grid.size() * static_cast<std::size_t>(dim), 0.0);
    }

    std::size_t size() const { return grid.size(); }

    double scalar(std::size_t i) const { return values[i * static_cast<std::size_t>(dim)]; }

    std::span<const double> point(std::size_t i) const {
        return {values.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }

    std::span<double> point_mut(std::size_t i) {
        return {values.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
};

}  // namespace bbmfront
