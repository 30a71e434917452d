#include "bbmfront/rho.hpp"

#include <algorithm>
#include <cmath>

#include "bbmfront/errors.hpp"
#include "bbmfront/paths.hpp"

namespace bbmfront {

LegendreResult legendre_sup(const PathGrid& path, double s) {
    if (path.dim != 1) throw parameter_error("legendre_sup: scalar path required");
    if (s < 0.0) throw parameter_error("legendre_sup: s must be >= 0");
    LegendreResult best;  // sigma = 0 term is exactly 0
    for (std::size_t i = 0; i < path.size(); ++i) {
        const double sigma = path.grid[i];
        const double term = sigma * (s - path.values[i]);
        if (term > best.value) {
            best.value = term;
            best.argmax = sigma;
        }
    }
    return best;
}

namespace {

bool horizon_sufficient(const PathGrid& bessel, double s_max, double escape_factor) {
    const double horizon = bessel.grid.horizon();
    const double cutoff = 0.75 * horizon;
    for (std::size_t i = bessel.size(); i-- > 0;) {
        if (bessel.grid[i] < cutoff) break;
        if (bessel.values[i] <= s_max) return false;
    }
    return bessel.values[bessel.size() - 1] >= escape_factor * s_max;
}

}  // namespace

RhoSample sample_rho(const std::vector<double>& s_grid, double sigma_horizon,
                     const SigmaGridSpec& spec, RngStream& rng) {
    if (s_grid.empty()) throw parameter_error("sample_rho: empty s grid");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (s_grid[i] < 0.0) throw parameter_error("sample_rho: s must be >= 0");
        if (i > 0 && !(s_grid[i] > s_grid[i - 1]))
            throw parameter_error("sample_rho: s grid must be increasing");
    }
    const double s_max = s_grid.back();

    double horizon = std::max(sigma_horizon, 16.0 * spec.sigma_min);
    BrownianPath bm3(3, TimeGrid::geometric(spec.sigma_min, horizon, spec.points_per_decade),
                     rng);
    PathGrid bessel = bm3.norm_path();

    if (s_max > 0.0) {
        while (!horizon_sufficient(bessel, s_max, spec.escape_factor)) {
            if (horizon * 2.0 > spec.hard_cap)
                throw config_error("sample_rho: sigma horizon cap reached before the path "
                                   "escaped; raise the cap or lower max(s_grid)");
            const double ratio = std::pow(10.0, 1.0 / spec.points_per_decade);
            std::vector<double> more;
            for (double t = horizon * ratio; t < 2.0 * horizon; t *= ratio) more.push_back(t);
            more.push_back(2.0 * horizon);
            horizon *= 2.0;
            bm3.extend(more, rng);
            bessel = bm3.norm_path();
        }
    }

    // Coarse pass, then one local uniform refinement around each argmax. The
    // refinement times are pooled so every s is re-evaluated on one common
    // grid.
    std::vector<double> refine_times;
    for (double s : s_grid) {
        const LegendreResult coarse = legendre_sup(bessel, s);
        const auto& pts = bessel.grid.points;
        const auto it = std::lower_bound(pts.begin(), pts.end(), coarse.argmax);
        const std::size_t k = static_cast<std::size_t>(it - pts.begin());
        const double lo = k > 0 ? pts[k - 1] : pts[0];
        const double hi = k + 1 < pts.size() ? pts[k + 1] : pts.back();
        if (!(hi > lo)) continue;
        for (int j = 1; j <= spec.refine_points; ++j) {
            const double t = lo + (hi - lo) * j / (spec.refine_points + 1);
            if (t > lo && t < hi) refine_times.push_back(t);
        }
    }
    bm3.insert(refine_times, rng);
    bessel = bm3.norm_path();

    RhoSample out;
    out.s_grid = s_grid;
    out.sigma_grid = bessel.grid.points;
    out.rho.reserve(s_grid.size());
    out.argmax_sigma.reserve(s_grid.size());
    for (double s : s_grid) {
        const LegendreResult fine = legendre_sup(bessel, s);
        out.rho.push_back(s == 0.0 ? 0.0 : std::sqrt(fine.value));
        out.argmax_sigma.push_back(fine.argmax);
    }
    return out;
}

FrontSurface revolve_surface(const RhoSample& rho, const std::vector<double>& theta_set,
                             int dim) {
    if (dim < 2) throw parameter_error("revolve_surface: dim must be >= 2");
    FrontSurface surf;
    surf.s_grid = rho.s_grid;
    surf.theta_dim = dim - 1;
    surf.theta_set = theta_set;
    const std::size_t nt = surf.theta_count();
    if (nt == 0) throw parameter_error("revolve_surface: empty theta set");
    surf.heights.resize(rho.s_grid.size() * nt);
    for (std::size_t si = 0; si < rho.s_grid.size(); ++si)
        for (std::size_t ti = 0; ti < nt; ++ti) surf.height(si, ti) = rho.rho[si];
    return surf;
}

}  // namespace bbmfront
