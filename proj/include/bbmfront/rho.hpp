#pragma once

#include <vector>

#include "bbmfront/front.hpp"
#include "bbmfront/grid.hpp"
#include "bbmfront/rng.hpp"

namespace bbmfront {

struct LegendreResult {
    double value = 0.0;   // max over grid sigma of (sigma*s - sigma*path(sigma)), floored at 0
    double argmax = 0.0;  // smallest sigma attaining the max
};

// Grid supremum of the tilted-path functional. The scan over the grid is the
// definition; ties resolve to the smallest sigma.
LegendreResult legendre_sup(const PathGrid& path, double s);

struct SigmaGridSpec {
    double sigma_min = 1e-4;       // first positive grid point
    int points_per_decade = 24;    // geometric density
    int refine_points = 8;         // uniform points added around each coarse argmax
    double escape_factor = 1000.0; // path must end this far above s_max
    double hard_cap = 1e9;         // give up extending beyond this horizon
};

// One transform sample: a single radial path shared across every s, with the
// supremum evaluated per s on a common sigma grid. Squaring gives a max of
// linear functions of s, so monotonicity and convexity of rho^2 hold exactly
// on the grid, not approximately.
struct RhoSample {
    std::vector<double> s_grid;
    std::vector<double> rho;           // nonnegative, nondecreasing, rho(0) = 0
    std::vector<double> argmax_sigma;  // per-s optimizer location
    std::vector<double> sigma_grid;    // final common grid (after refinement)
};

// Draw a Bessel(3) path on a geometric sigma grid (dense near 0, where the
// optimizer lives for small s) and apply the transform at every s. The
// horizon extends adaptively until the path clears max(s_grid) over the last
// quarter of the grid and ends escape_factor * max(s_grid) high, which caps
// the chance of truncating a late excursion at 1/escape_factor. A
// config_error is raised if the hard cap is hit first.
RhoSample sample_rho(const std::vector<double>& s_grid, double sigma_horizon,
                     const SigmaGridSpec& spec, RngStream& rng);

// Constant-in-theta surface: heights(s, theta) = rho(s) for every theta.
FrontSurface revolve_surface(const RhoSample& rho, const std::vector<double>& theta_set,
                             int dim);

}  // namespace bbmfront
