#pragma once

#include <vector>

#include "bbmfront/grid.hpp"
#include "bbmfront/rng.hpp"

namespace bbmfront {

// Brownian motion evaluated exactly at grid points: increments over grid
// intervals are independent N(0, dt I). No discretization bias at the grid.
PathGrid sample_brownian_path(int dim, const TimeGrid& grid, RngStream& rng);

// Bessel(3) path as the pointwise norm of a 3-dimensional Brownian path,
// so grid-point marginals are exact. Scalar output, starts at 0, always >= 0.
PathGrid sample_bessel3_path(const TimeGrid& grid, RngStream& rng);

// Mutable Brownian path supporting exact extension past the horizon and
// exact interior refinement (Brownian bridge), both preserving the joint law.
class BrownianPath {
public:
    BrownianPath(int dim, const TimeGrid& grid, RngStream& rng);

    const PathGrid& path() const { return path_; }
    const TimeGrid& grid() const { return path_.grid; }
    int dim() const { return path_.dim; }

    // Append exact increments at strictly increasing times beyond the horizon.
    void extend(const std::vector<double>& later_times, RngStream& rng);

    // Insert bridge-sampled values at interior times (each strictly inside an
    // existing interval; duplicates of existing grid times are skipped).
    void insert(const std::vector<double>& times, RngStream& rng);

    // Euclidean norm per grid point (scalar PathGrid on the same grid).
    PathGrid norm_path() const;

private:
    PathGrid path_;
};

// Insert bridge-sampled values into an existing path at interior times,
// conditioning on the neighboring grid values. Works for unconditioned paths
// and for bridges alike, since the endpoint information is carried by the
// neighbors. Duplicate times are skipped.
void bridge_insert(PathGrid& path, const std::vector<double>& times, RngStream& rng);

// Brownian bridge from the origin to `endpoint` over the grid's horizon,
// sampled exactly at the grid points.
PathGrid sample_brownian_bridge(int dim, const TimeGrid& grid,
                                std::span<const double> endpoint, RngStream& rng);

// Last grid time at which the scalar path lies in [0, level]; the path starts
// at 0 so the result is always defined (>= 0).
double last_exit_time(const PathGrid& scalar_path, double level);

}  // namespace bbmfront
