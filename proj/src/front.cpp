#include "bbmfront/front.hpp"

#include <algorithm>
#include <cmath>

#include "bbmfront/errors.hpp"

namespace bbmfront {

std::vector<double> make_theta_set(int dim, int theta_steps) {
    if (dim < 2) throw parameter_error("theta grid needs dim >= 2");
    if (dim == 2) return {1.0, -1.0};
    if (theta_steps < 1) throw parameter_error("theta grid needs theta_steps >= 1");
    const int tdim = dim - 1;
    if (dim == 3) {
        std::vector<double> out;
        for (int j = 0; j < theta_steps; ++j) {
            const double a = 2.0 * M_PI * j / theta_steps;
            out.push_back(std::cos(a));
            out.push_back(std::sin(a));
        }
        return out;
    }
    // Product angle grid: tdim-1 polar angles over (0, pi), one azimuth over
    // [0, 2 pi).
    std::vector<double> out;
    std::vector<int> idx(static_cast<std::size_t>(tdim - 1), 0);
    for (;;) {
        std::vector<double> angles(static_cast<std::size_t>(tdim - 1));
        for (int a = 0; a < tdim - 1; ++a) {
            const bool azimuth = (a == tdim - 2);
            const double span = azimuth ? 2.0 * M_PI : M_PI;
            angles[static_cast<std::size_t>(a)] =
                azimuth ? span * idx[static_cast<std::size_t>(a)] / theta_steps
                        : span * (idx[static_cast<std::size_t>(a)] + 0.5) / theta_steps;
        }
        double sinprod = 1.0;
        for (int c = 0; c < tdim; ++c) {
            const double v = (c < tdim - 1)
                                 ? sinprod * std::cos(angles[static_cast<std::size_t>(c)])
                                 : sinprod;
            out.push_back(v);
            if (c < tdim - 1) sinprod *= std::sin(angles[static_cast<std::size_t>(c)]);
        }
        int a = tdim - 2;
        while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == theta_steps)
            idx[static_cast<std::size_t>(a--)] = 0;
        if (a < 0) break;
    }
    return out;
}

namespace {

bool contains_origin(const PointCloud& cloud) {
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        bool zero = true;
        for (double c : p)
            if (std::abs(c) > 1e-9) {
                zero = false;
                break;
            }
        if (zero) return true;
    }
    return false;
}

}  // namespace

FrontSurface front_of_point_process(const PointCloud& cloud, double epsilon,
                                    double slab_width, const std::vector<double>& s_grid,
                                    const std::vector<double>& theta_set, ConeMode mode) {
    if (cloud.dim < 2) throw parameter_error("front: cloud dimension must be >= 2");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw parameter_error("front: epsilon must lie in (0,1)");
    if (!(slab_width > 0.0)) throw parameter_error("front: slab_width must be > 0");
    if (!contains_origin(cloud))
        throw parameter_error("front: cloud lacks the origin normalization");

    const int tdim = cloud.dim - 1;
    if (theta_set.empty() || theta_set.size() % static_cast<std::size_t>(tdim) != 0)
        throw parameter_error("front: theta set does not match dimension");

    FrontSurface surf;
    surf.s_grid = s_grid;
    surf.theta_dim = tdim;
    surf.theta_set = theta_set;
    surf.epsilon = epsilon;
    surf.slab_width = slab_width;
    const std::size_t nt = surf.theta_count();
    surf.heights.assign(s_grid.size() * nt, 0.0);

    const double cone = 1.0 - epsilon;
    std::vector<double> arg(static_cast<std::size_t>(tdim));
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        const double p1 = p[0];
        std::span<const double> p2{p.data() + 1, static_cast<std::size_t>(tdim)};
        const double h = norm(p2);
        if (h == 0.0) continue;  // direction undefined; contributes height 0
        for (int j = 0; j < tdim; ++j)
            arg[static_cast<std::size_t>(j)] = p2[static_cast<std::size_t>(j)] / h;

        // Slab membership p1 in (-s, -s+w] holds on a contiguous s range;
        // bracket it by binary search, then confirm each candidate with the
        // defining inequalities so grid heights match a full scan exactly.
        auto lo = std::lower_bound(s_grid.begin(), s_grid.end(), -p1);
        std::size_t k0 = lo == s_grid.begin()
                             ? 0
                             : static_cast<std::size_t>(lo - s_grid.begin()) - 1;
        for (std::size_t k = k0; k < s_grid.size(); ++k) {
            const double s = s_grid[k];
            if (!(p1 > -s)) continue;
            if (!(p1 <= -s + slab_width)) break;
            for (std::size_t t = 0; t < nt; ++t) {
                const double d = dot(surf.theta(t), arg);
                const double c = mode == ConeMode::absolute_dot ? std::abs(d) : d;
                if (c >= cone && h > surf.height(k, t)) surf.height(k, t) = h;
            }
        }
    }
    return surf;
}

PointCloud extremal_cluster(const BbmTree& tree) {
    if (tree.horizon <= 0.0)
        throw parameter_error("extremal_cluster: horizon must be positive");
    const ExtremalRecord star = max_norm_particle(tree);
    if (!star.direction_defined)
        throw parameter_error("extremal_cluster: direction of the maximal particle undefined");
    const RotationMatrix rot = rotation_to_e1(star.direction);
    const auto center = tree.final_position(star.particle_id);

    PointCloud cloud;
    cloud.dim = tree.dim;
    std::vector<double> rel(static_cast<std::size_t>(tree.dim));
    for (std::int64_t leaf : tree.leaf_ids()) {
        auto pos = tree.final_position(leaf);
        for (int j = 0; j < tree.dim; ++j)
            rel[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j)] -
                                               center[static_cast<std::size_t>(j)];
        auto img = rot.apply(rel);
        if (leaf == star.particle_id) std::fill(img.begin(), img.end(), 0.0);
        cloud.add(img, leaf);
    }
    return cloud;
}

FrontSurface front_of_bbm(const BbmTree& tree, double epsilon, double slab_width,
                          const std::vector<double>& s_grid,
                          const std::vector<double>& theta_set, ConeMode mode) {
    return front_of_point_process(extremal_cluster(tree), epsilon, slab_width, s_grid,
                                  theta_set, mode);
}

std::vector<LandscapeEntry> extremal_landscape(const BbmTree& tree, double ell) {
    if (!(ell > 0.0) || !(ell < tree.horizon))
        throw parameter_error("extremal_landscape: need 0 < ell < horizon");
    const auto leaders = clan_leaders(tree, ell);

    std::vector<LandscapeEntry> out;
    out.reserve(leaders.size());
    std::vector<double> rel(static_cast<std::size_t>(tree.dim));
    for (const auto& leader : leaders) {
        LandscapeEntry entry;
        entry.recentered_norm = leader.recentered;
        entry.direction = leader.direction;
        const RotationMatrix rot = rotation_to_e1(leader.direction);
        const auto center = tree.final_position(leader.particle_id);
        entry.cluster.dim = tree.dim;
        for (std::int64_t leaf : tree.leaf_ids()) {
            auto pos = tree.final_position(leaf);
            for (int j = 0; j < tree.dim; ++j)
                rel[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j)] -
                                                   center[static_cast<std::size_t>(j)];
            auto img = rot.apply(rel);
            if (leaf == leader.particle_id) std::fill(img.begin(), img.end(), 0.0);
            entry.cluster.add(img, leaf);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace bbmfront
