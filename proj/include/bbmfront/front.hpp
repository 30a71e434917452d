#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bbmfront/bbm.hpp"
#include "bbmfront/geometry.hpp"

namespace bbmfront {

// Finite labeled point set in R^d. `tag` carries provenance (leaf id for
// extracted clusters, branch index for assembled limit clusters, -1 for a
// synthetic origin point).
struct PointCloud {
    int dim = 0;
    std::vector<double> coords;     // point-major, dim columns
    std::vector<std::int64_t> tag;  // one per point

    std::size_t size() const { return tag.size(); }
    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
    void add(std::span<const double> p, std::int64_t t) {
        coords.insert(coords.end(), p.begin(), p.end());
        tag.push_back(t);
    }
};

enum class ConeMode {
    signed_dot,   // theta . arg >= 1 - eps
    absolute_dot  // |theta . arg| >= 1 - eps
};

// Heights over (s, theta): s runs over a nonnegative increasing grid, theta
// over a finite set of unit vectors in R^(d-1) (for d = 2 that set is
// {+1, -1}). heights is row-major over (s, theta).
struct FrontSurface {
    std::vector<double> s_grid;
    int theta_dim = 1;                // = d - 1
    std::vector<double> theta_set;    // theta-major, theta_dim columns
    std::vector<double> heights;      // s-major, |theta| columns
    double epsilon = 0.0;
    double slab_width = 1.0;

    std::size_t theta_count() const {
        return theta_set.size() / static_cast<std::size_t>(theta_dim);
    }
    std::span<const double> theta(std::size_t k) const {
        return {theta_set.data() + k * static_cast<std::size_t>(theta_dim),
                static_cast<std::size_t>(theta_dim)};
    }
    double& height(std::size_t si, std::size_t ti) {
        return heights[si * theta_count() + ti];
    }
    double height(std::size_t si, std::size_t ti) const {
        return heights[si * theta_count() + ti];
    }
};

// Direction grid on the unit sphere of R^(d-1): {+1, -1} for d = 2, uniform
// angles for d = 3, uniform product angle grids above that.
std::vector<double> make_theta_set(int dim, int theta_steps);

// Maximal transversal displacement behind the right-most point: for each
// (s, theta), the max of ||p2|| over cloud points with p1 in
// (-s, -s + slab_width] whose transversal direction lies in the cone around
// theta. Empty slabs give height 0; points with p2 = 0 never pass the cone
// test (their direction is undefined) but still count as height 0.
//
// The cloud must contain the origin (the right-most-point normalization);
// otherwise a parameter_error is raised.
FrontSurface front_of_point_process(const PointCloud& cloud, double epsilon,
                                    double slab_width,
                                    const std::vector<double>& s_grid,
                                    const std::vector<double>& theta_set,
                                    ConeMode mode = ConeMode::signed_dot);

// Time-horizon particle configuration recentered at the maximal-norm leaf and
// rotated so that leaf's direction becomes e1. The image of the maximal leaf
// is the zero vector. Requires horizon > 0 (the direction is undefined at 0).
PointCloud extremal_cluster(const BbmTree& tree);

FrontSurface front_of_bbm(const BbmTree& tree, double epsilon, double slab_width,
                          const std::vector<double>& s_grid,
                          const std::vector<double>& theta_set,
                          ConeMode mode = ConeMode::signed_dot);

// One snapshot per clan leader: recentered norm, direction, and the full
// configuration recentered and rotated around that leader.
struct LandscapeEntry {
    double recentered_norm = 0.0;
    std::vector<double> direction;
    PointCloud cluster;
};

std::vector<LandscapeEntry> extremal_landscape(const BbmTree& tree, double ell);

}  // namespace bbmfront
