#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bbmfront/front.hpp"
#include "bbmfront/grid.hpp"
#include "bbmfront/paths.hpp"
#include "bbmfront/rng.hpp"

namespace bbmfront {

// Monte Carlo table of G_r(x) = P(max of 1D branching run at time r exceeds
// sqrt(2) r - x/sqrt(2)). Rows with r beyond the simulation feasibility cap
// hold the exponential right-tail upper bound instead of an estimate
// (stderr 0 marks those cells).
struct GrTable {
    std::vector<double> r_grid;
    std::vector<double> x_grid;
    std::vector<double> values;   // r-major, in [0,1], nondecreasing in x per row
    std::vector<double> stderrs;  // r-major; 0 for analytic-bound cells
    std::size_t replicas = 0;
    double feasible_r_max = 0.0;

    double cell(std::size_t ri, std::size_t xi) const {
        return values[ri * x_grid.size() + xi];
    }
    // Bilinear lookup with edge clamping; beyond the feasible r range the
    // analytic bound is evaluated directly.
    double operator()(double r, double x) const;
};

// Right-tail bound on G_r(x): min(1, z exp(-sqrt(2) z)) at the recentered
// exceedance z = (3 / (2 sqrt(2))) log r - x / sqrt(2); 1 when z < 1.
double gr_tail_bound(double r, double x);

GrTable build_gr_table(const std::vector<double>& r_grid, const std::vector<double>& x_grid,
                       std::size_t replicas, const RngStream& rng,
                       std::int64_t particle_cap = kDefaultParticleCap);

enum class SpineMode { approximate, tilted };
enum class IntensityMode { rate2, tilted };

// Backbone trajectory (A_s, Y_s) of the limit cluster, with the recentered
// radial part A_hat_s = -A_s - sqrt(2) s as the primary stored path.
//
// approximate mode: A_hat is a Bessel(3) path (drawn as the norm of a
// 3-dimensional Brownian path), Y an independent Brownian path, weight 1.
//
// tilted mode: the ascent-to-maximum piece is built exactly by time reversal
// (a Bessel(3) bridge to the conditioned maximum b, with the hitting time
// drawn from its closed-form law), followed by an independent Bessel(3)
// descent. The Radon-Nikodym tilt exp(-2 int G) is carried as an importance
// weight, truncated at the horizon with the truncated mass bounded and
// reported; weights are emitted, never applied silently.
class SpinePath {
public:
    SpineMode mode = SpineMode::approximate;
    int dim = 2;
    double b = 0.0;                  // conditioned maximum (tilted mode)
    double log_weight = 0.0;         // -2 * integral of G along the path
    double weight = 1.0;
    double weight_tail_bound = 0.0;  // bound on the exponent mass beyond the horizon

    const TimeGrid& grid() const { return y_->grid(); }
    double horizon() const { return grid().horizon(); }
    std::size_t size() const { return grid().size(); }

    double a(std::size_t i) const { return -(a_hat_[i] + kSqrt2 * grid()[i]); }
    double a_hat(std::size_t i) const { return a_hat_[i]; }
    std::span<const double> y(std::size_t i) const { return y_->path().point(i); }

    // Values at an exact grid time (refine first when needed).
    std::size_t index_of_time(double t) const;
    double a_hat_at(double t) const { return a_hat_[index_of_time(t)]; }
    double a_at(double t) const { return a(index_of_time(t)); }
    std::span<const double> y_at(double t) const { return y_->path().point(index_of_time(t)); }

    PathGrid a_hat_path() const;

    // Exact bridge refinement of every component at the given times.
    void refine_at(const std::vector<double>& times, RngStream& rng);

    // Exact extension past the horizon on geometrically spaced times. In
    // tilted mode, pass the table so the weight integral covers the new
    // range.
    void extend_to(double new_horizon, int points_per_decade, RngStream& rng,
                   const GrTable* gr = nullptr);

    static SpinePath sample(SpineMode mode, const TimeGrid& grid, int dim, RngStream& rng,
                            const GrTable* gr = nullptr, double proposal_b_max = 8.0);

private:
    std::vector<double> a_hat_;
    std::optional<BrownianPath> y_;  // (dim-1)-dimensional, on the full clock

    // approximate mode: A_hat = |bm3_|.
    std::optional<BrownianPath> bm3_;
    // tilted mode: ascent bridge (3-dim, reversed time) and descent motion.
    double hit_time_ = 0.0;
    std::optional<PathGrid> ascent_bridge_;  // on [0, hit_time_], reversed clock
    std::optional<BrownianPath> descent_;    // 3-dim, clock t - hit_time_

    void rebuild_a_hat();
    void recompute_weight(const GrTable& gr);
};

struct BranchingTimes {
    std::vector<double> times;  // strictly increasing
    IntensityMode intensity_mode = IntensityMode::rate2;
};

// Poisson branching times on (start_time, horizon). rate2: homogeneous rate
// 2. tilted: thinning of the same rate-2 candidate sequence with acceptance
// 1 - G_t(-sqrt(2) A_hat_t) read from the table; candidates and acceptance
// draws use separate derived streams, so the tilted set is a pathwise subset
// of the rate2 set under a shared seed. The spine is refined at every
// candidate time as a side effect. A nonzero start_time restricts the
// process to the window (the restriction of a Poisson process is the Poisson
// process of the window; times outside never contribute to the scaled
// front).
BranchingTimes sample_branching_times(SpinePath& spine, double horizon, RngStream& rng,
                                      IntensityMode mode, const GrTable* gr = nullptr,
                                      double start_time = 0.0);

struct CloudSample {
    double branch_time = 0.0;
    PointCloud cloud;                  // absolute coordinates
    std::int64_t accepted_after = 0;   // rejections before the accepted draw
};

// Rejection sampling of one branch cloud: a d-dimensional branching run of
// duration tau, accepted when its maximal first coordinate stays below
// -a_tau. Accepted terminal points are returned in absolute coordinates
// (a_tau + x, y_tau + y); every accepted point has first coordinate < 0.
CloudSample sample_conditioned_cloud(double tau, double a_tau, std::span<const double> y_tau,
                                     int dim, const RngStream& rng, std::int64_t max_rejects,
                                     std::int64_t particle_cap = kDefaultParticleCap);

struct AcceptanceProbe {
    std::size_t attempts = 0;
    std::size_t accepted = 0;
    double rate = 0.0;
};

// Acceptance probability of the cloud conditioning, estimated without
// materializing clouds: the conditioning event depends only on the first
// coordinate, whose law is a 1-dimensional branching run, so each attempt is
// a pruned max-threshold simulation that stays cheap at durations where the
// full population would be astronomically large.
AcceptanceProbe estimate_conditioning_acceptance(double tau, double a_tau,
                                                 std::size_t attempts, const RngStream& rng,
                                                 double prune_delta = 1e-10);

// delta_0 plus all accepted cloud points, tagged by source branch index.
// clouds[i] must carry branch_time == times[i].
PointCloud assemble_cluster(const SpinePath& spine, const BranchingTimes& times,
                            const std::vector<CloudSample>& clouds);

struct XlPath {
    std::vector<double> s_grid;
    std::vector<double> values;        // nonnegative, nondecreasing
    std::vector<double> argmax_sigma;  // per-s optimizer (in sigma units)
};

// X_L(s) = sqrt(sup over sigma of sigma*s - sigma*A_hat(sigma L^2)/L), the
// sup running over the spine grid clipped at sigma_max. The spine horizon
// must reach sigma_max * L^2.
XlPath compute_xl(const SpinePath& spine, double L, const std::vector<double>& s_grid,
                  double sigma_max);

// Per-branch-time cloud summary used by the scaled-window front. Exact
// clouds carry terminal points in cloud-local coordinates; band summaries
// carry the norm extent sqrt(2) tau + c(tau) used in place of a population
// that is far beyond any feasible particle budget.
struct WindowCloud {
    double tau = 0.0;
    bool exact = false;
    PointCloud points;         // cloud-local (x, y) terminal positions
    double norm_center = 0.0;  // band mode
};

struct SimplifiedFrontParams {
    double L = 30.0;
    double epsilon = 0.1;
    std::vector<double> s_grid;
    std::vector<double> theta_set;  // unit vectors in R^(dim-1)
    ConeMode cone_mode = ConeMode::signed_dot;
    // Band model: norm extent sqrt(2) tau - band_log_coeff * log tau - band_offset.
    double band_log_coeff = 0.7071067811865476;
    double band_offset = 0.25;
    double exact_tau_cap = 12.0;  // sample real clouds up to this duration
    std::int64_t particle_cap = kDefaultParticleCap;
};

// Cloud summaries for every branch time inside the scaled window
// [L^1.4, last exit of A_hat from [0, max(s) L]]; exact populations below
// exact_tau_cap, band summaries above it. Refines the spine at the window
// times.
std::vector<WindowCloud> make_window_clouds(SpinePath& spine, const BranchingTimes& times,
                                            const SimplifiedFrontParams& params,
                                            RngStream& rng);

// Scaled-window front: for each branch time in the window, the maximal
// transversal displacement among cloud points whose first coordinate falls in
// (-sL, -sL+1] around the spine, scaled by L^(-3/2). Empty windows give 0.
FrontSurface simplified_front(const SpinePath& spine, const BranchingTimes& times,
                              const std::vector<WindowCloud>& clouds,
                              const SimplifiedFrontParams& params);

// make_window_clouds followed by simplified_front, but without materializing
// the cloud list; band summaries stream straight into the surface, so memory
// stays O(surface) even when the window holds millions of branch times.
FrontSurface simplified_front_streamed(SpinePath& spine, const BranchingTimes& times,
                                       const SimplifiedFrontParams& params, RngStream& rng);

}  // namespace bbmfront
