#include "bbmfront/cluster.hpp"

#include <algorithm>
#include <cmath>

#include "bbmfront/bbm.hpp"
#include "bbmfront/errors.hpp"

namespace bbmfront {

namespace {

constexpr double kGrLogCoeff = 3.0 / (2.0 * kSqrt2);

// In-place L2 isotonic regression (pool adjacent violators), nondecreasing.
void isotonic_nondecreasing(std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<double> level(n), weight(n);
    std::vector<std::size_t> size(n);
    std::size_t blocks = 0;
    for (std::size_t i = 0; i < n; ++i) {
        level[blocks] = v[i];
        weight[blocks] = 1.0;
        size[blocks] = 1;
        ++blocks;
        while (blocks > 1 && level[blocks - 2] > level[blocks - 1]) {
            const double w = weight[blocks - 2] + weight[blocks - 1];
            level[blocks - 2] =
                (weight[blocks - 2] * level[blocks - 2] + weight[blocks - 1] * level[blocks - 1]) /
                w;
            weight[blocks - 2] = w;
            size[blocks - 2] += size[blocks - 1];
            --blocks;
        }
    }
    std::size_t i = 0;
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t k = 0; k < size[b]; ++k) v[i++] = level[b];
}

double bilinear_weight(double lo, double hi, double x) {
    return hi > lo ? (x - lo) / (hi - lo) : 0.0;
}

}  // namespace

double gr_tail_bound(double r, double x) {
    if (r <= 0.0) return 1.0;
    const double z = kGrLogCoeff * std::log(r) - x / kSqrt2;
    if (z < 1.0) return 1.0;  // outside the right-tail regime
    return std::min(1.0, z * std::exp(-kSqrt2 * z));
}

double GrTable::operator()(double r, double x) const {
    if (r_grid.empty() || x_grid.empty()) throw config_error("GrTable: empty table");
    if (r > feasible_r_max) return gr_tail_bound(r, x);

    const double rc = std::clamp(r, r_grid.front(), r_grid.back());
    const double xc = std::clamp(x, x_grid.front(), x_grid.back());
    auto rit = std::upper_bound(r_grid.begin(), r_grid.end(), rc);
    std::size_t ri = rit == r_grid.begin() ? 0 : static_cast<std::size_t>(rit - r_grid.begin()) - 1;
    if (ri + 1 >= r_grid.size()) ri = r_grid.size() - 2 + (r_grid.size() == 1 ? 1 : 0);
    auto xit = std::upper_bound(x_grid.begin(), x_grid.end(), xc);
    std::size_t xi = xit == x_grid.begin() ? 0 : static_cast<std::size_t>(xit - x_grid.begin()) - 1;
    if (xi + 1 >= x_grid.size()) xi = x_grid.size() - 2 + (x_grid.size() == 1 ? 1 : 0);

    if (r_grid.size() == 1 && x_grid.size() == 1) return cell(0, 0);
    if (r_grid.size() == 1) {
        const double wx = bilinear_weight(x_grid[xi], x_grid[xi + 1], xc);
        return (1.0 - wx) * cell(0, xi) + wx * cell(0, xi + 1);
    }
    if (x_grid.size() == 1) {
        const double wr = bilinear_weight(r_grid[ri], r_grid[ri + 1], rc);
        return (1.0 - wr) * cell(ri, 0) + wr * cell(ri + 1, 0);
    }
    const double wr = bilinear_weight(r_grid[ri], r_grid[ri + 1], rc);
    const double wx = bilinear_weight(x_grid[xi], x_grid[xi + 1], xc);
    return (1.0 - wr) * ((1.0 - wx) * cell(ri, xi) + wx * cell(ri, xi + 1)) +
           wr * ((1.0 - wx) * cell(ri + 1, xi) + wx * cell(ri + 1, xi + 1));
}

GrTable build_gr_table(const std::vector<double>& r_grid, const std::vector<double>& x_grid,
                       std::size_t replicas, const RngStream& rng,
                       std::int64_t particle_cap) {
    if (replicas < 100) throw parameter_error("build_gr_table: need replicas >= 100");
    if (r_grid.empty() || x_grid.empty())
        throw parameter_error("build_gr_table: empty grid");
    for (std::size_t i = 1; i < r_grid.size(); ++i)
        if (!(r_grid[i] > r_grid[i - 1]))
            throw parameter_error("build_gr_table: r grid must be increasing");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (!(x_grid[i] > x_grid[i - 1]))
            throw parameter_error("build_gr_table: x grid must be increasing");

    GrTable table;
    table.r_grid = r_grid;
    table.x_grid = x_grid;
    table.replicas = replicas;
    // Expected population of a run of duration r is about 2 e^r nodes.
    table.feasible_r_max = std::log(static_cast<double>(particle_cap) / 2.0) - 1.0;
    table.values.assign(r_grid.size() * x_grid.size(), 0.0);
    table.stderrs.assign(r_grid.size() * x_grid.size(), 0.0);

    const double n = static_cast<double>(replicas);
    std::vector<double> maxima(replicas);
    std::vector<double> row(x_grid.size());
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
        const double r = r_grid[ri];
        if (r > table.feasible_r_max) {
            for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
                table.values[ri * x_grid.size() + xi] = gr_tail_bound(r, x_grid[xi]);
                table.stderrs[ri * x_grid.size() + xi] = 0.0;
            }
            continue;
        }
        RngStream row_rng = rng.derive(ri);
        for (std::size_t rep = 0; rep < replicas; ++rep)
            maxima[rep] = sample_max_1d(r, row_rng.derive(rep), particle_cap);
        std::sort(maxima.begin(), maxima.end());
        for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
            const double threshold = kSqrt2 * r - x_grid[xi] / kSqrt2;
            const auto it = std::lower_bound(maxima.begin(), maxima.end(), threshold);
            const double p = static_cast<double>(maxima.end() - it) / n;
            row[xi] = p;
            table.stderrs[ri * x_grid.size() + xi] = std::sqrt(p * (1.0 - p) / n);
        }
        isotonic_nondecreasing(row);  // exact no-op here; enforced regardless
        for (std::size_t xi = 0; xi < x_grid.size(); ++xi)
            table.values[ri * x_grid.size() + xi] = row[xi];
    }
    return table;
}

std::size_t SpinePath::index_of_time(double t) const {
    const auto& pts = grid().points;
    const auto it = std::lower_bound(pts.begin(), pts.end(), t);
    if (it == pts.end() || *it != t) {
        if (it != pts.end() && std::abs(*it - t) <= 1e-12 * (1.0 + std::abs(t)))
            return static_cast<std::size_t>(it - pts.begin());
        if (it != pts.begin() && std::abs(*(it - 1) - t) <= 1e-12 * (1.0 + std::abs(t)))
            return static_cast<std::size_t>(it - pts.begin()) - 1;
        throw parameter_error("spine: time is not on the grid; refine first");
    }
    return static_cast<std::size_t>(it - pts.begin());
}

PathGrid SpinePath::a_hat_path() const {
    PathGrid out(grid(), 1);
    out.values = a_hat_;
    return out;
}

void SpinePath::rebuild_a_hat() {
    const auto& pts = grid().points;
    a_hat_.assign(pts.size(), 0.0);
    if (mode == SpineMode::approximate) {
        const PathGrid& bm = bm3_->path();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto p = bm.point(i);
            a_hat_[i] = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        }
        return;
    }
    // Tilted: A_hat = -Gamma with Gamma the ascent (time-reversed bridge
    // toward b) followed by the descent b - R.
    const auto& asc = *ascent_bridge_;
    const auto& desc = descent_->path();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double t = pts[i];
        double gamma;
        if (t <= hit_time_) {
            const double u = hit_time_ - t;
            const auto& ug = asc.grid.points;
            auto it = std::lower_bound(ug.begin(), ug.end(), u);
            if (it == ug.end() || (*it != u && std::abs(*it - u) > 1e-9 * (1.0 + u))) {
                if (it != ug.begin() && std::abs(*(it - 1) - u) <= 1e-9 * (1.0 + u))
                    --it;
                else
                    throw config_error("spine: ascent grid misses a reversed time");
            }
            auto w = asc.point(static_cast<std::size_t>(it - ug.begin()));
            gamma = b - std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
        } else {
            const double r = t - hit_time_;
            const auto& rg = desc.grid.points;
            auto it = std::lower_bound(rg.begin(), rg.end(), r);
            if (it == rg.end() || (*it != r && std::abs(*it - r) > 1e-9 * (1.0 + r))) {
                if (it != rg.begin() && std::abs(*(it - 1) - r) <= 1e-9 * (1.0 + r))
                    --it;
                else
                    throw config_error("spine: descent grid misses a time");
            }
            auto w = desc.point(static_cast<std::size_t>(it - rg.begin()));
            gamma = b - std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
        }
        a_hat_[i] = -gamma;
    }
}

SpinePath SpinePath::sample(SpineMode mode, const TimeGrid& grid, int dim, RngStream& rng,
                            const GrTable* gr, double proposal_b_max) {
    grid.validate();
    if (dim < 2) throw parameter_error("spine: dim must be >= 2");

    SpinePath spine;
    spine.mode = mode;
    spine.dim = dim;

    if (mode == SpineMode::approximate) {
        spine.bm3_.emplace(3, grid, rng);
        spine.y_.emplace(dim - 1, grid, rng);
        spine.rebuild_a_hat();
        spine.weight = 1.0;
        spine.log_weight = 0.0;
        return spine;
    }

    if (gr == nullptr)
        throw config_error("spine: tilted mode requires a GrTable");
    if (!(proposal_b_max > 0.0))
        throw parameter_error("spine: proposal_b_max must be positive");

    // Proposal for the conditioned maximum; flat on (0, b_max], so the
    // importance weight is the bare exponential tilt.
    spine.b = rng.uniform_pos() * proposal_b_max;

    // First hitting time of b by Brownian motion: (b/|Z|)^2 in closed form.
    double z;
    do {
        z = rng.normal();
    } while (z == 0.0);
    spine.hit_time_ = (spine.b / z) * (spine.b / z);

    const double horizon = grid.horizon();
    std::vector<double> fwd = grid.points;
    if (spine.hit_time_ < horizon) {
        fwd.push_back(spine.hit_time_);
        std::sort(fwd.begin(), fwd.end());
        fwd.erase(std::unique(fwd.begin(), fwd.end()), fwd.end());
    }

    // Ascent: reversed clock u = T_b - t. The pre-hit Brownian segment,
    // reversed in time, is the norm of a 3-dimensional Brownian bridge from 0
    // to a point at distance b, which keeps every grid marginal exact and the
    // whole segment below b.
    std::vector<double> upts{0.0, spine.hit_time_};
    for (double t : fwd)
        if (t < spine.hit_time_) upts.push_back(spine.hit_time_ - t);
    std::sort(upts.begin(), upts.end());
    upts.erase(std::unique(upts.begin(), upts.end()), upts.end());
    const std::vector<double> endpoint{spine.b, 0.0, 0.0};
    spine.ascent_bridge_ =
        sample_brownian_bridge(3, TimeGrid(upts), std::span<const double>(endpoint), rng);

    // Descent: independent radial escape on the clock t - T_b.
    std::vector<double> rpts{0.0};
    for (double t : fwd)
        if (t > spine.hit_time_) rpts.push_back(t - spine.hit_time_);
    std::sort(rpts.begin(), rpts.end());
    rpts.erase(std::unique(rpts.begin(), rpts.end()), rpts.end());
    if (rpts.size() == 1) rpts.push_back(1.0);  // degenerate: hit beyond horizon
    spine.descent_.emplace(3, TimeGrid(rpts), rng);

    spine.y_.emplace(dim - 1, TimeGrid(fwd), rng);
    spine.rebuild_a_hat();
    spine.recompute_weight(*gr);
    return spine;
}

// Exponential tilt exp(-2 int_0^H G_r) by trapezoid quadrature, with the
// beyond-horizon mass bounded by the closed-form integral of the right-tail
// bound continued from the terminal spine level.
void SpinePath::recompute_weight(const GrTable& gr) {
    const auto& pts = grid().points;
    double integral = 0.0;
    double prev_g = gr(pts[0], -kSqrt2 * a_hat_[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double g = gr(pts[i], -kSqrt2 * a_hat_[i]);
        integral += 0.5 * (g + prev_g) * (pts[i] - pts[i - 1]);
        prev_g = g;
    }
    log_weight = -2.0 * integral;
    weight = std::exp(log_weight);

    const double c0 = a_hat_.back();  // z(r) = c1 log r + c0
    const double c1 = kGrLogCoeff;
    const double r_star = std::exp((1.0 - c0) / c1);  // where the bound leaves 1
    const double lo = std::max(horizon(), r_star);
    const double analytic =
        2.0 / std::sqrt(lo) * std::exp(-kSqrt2 * c0) * (c1 * std::log(lo) + c0 + 2.0 * c1);
    weight_tail_bound = 2.0 * (std::max(0.0, r_star - horizon()) + std::max(0.0, analytic));
}

void SpinePath::extend_to(double new_horizon, int points_per_decade, RngStream& rng,
                          const GrTable* gr) {
    const double old_horizon = horizon();
    if (!(new_horizon > old_horizon))
        throw parameter_error("spine extend: new horizon must exceed the current one");
    const double ratio = std::pow(10.0, 1.0 / points_per_decade);
    std::vector<double> later;
    for (double t = old_horizon * ratio; t < new_horizon; t *= ratio) later.push_back(t);
    later.push_back(new_horizon);

    if (mode == SpineMode::approximate) {
        bm3_->extend(later, rng);
    } else {
        // Times before the hitting time belong to the ascent bridge (reversed
        // clock), later ones to the descent motion.
        std::vector<double> asc, desc_insert, desc_extend;
        const double desc_horizon = descent_->grid().horizon();
        for (double t : later) {
            if (t < hit_time_) {
                asc.push_back(hit_time_ - t);
            } else if (t > hit_time_) {
                const double r = t - hit_time_;
                (r <= desc_horizon ? desc_insert : desc_extend).push_back(r);
            }
        }
        bridge_insert(*ascent_bridge_, asc, rng);
        descent_->insert(desc_insert, rng);
        descent_->extend(desc_extend, rng);
    }
    y_->extend(later, rng);
    rebuild_a_hat();
    if (mode == SpineMode::tilted && gr != nullptr) recompute_weight(*gr);
}

void SpinePath::refine_at(const std::vector<double>& times, RngStream& rng) {
    std::vector<double> fresh;
    const auto& pts = grid().points;
    for (double t : times) {
        if (!(t >= 0.0) || t > horizon())
            throw parameter_error("spine refine: time outside [0, horizon]");
        if (!std::binary_search(pts.begin(), pts.end(), t)) fresh.push_back(t);
    }
    if (fresh.empty()) return;
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());

    if (mode == SpineMode::approximate) {
        bm3_->insert(fresh, rng);
    } else {
        std::vector<double> asc, desc;
        for (double t : fresh) {
            if (t < hit_time_)
                asc.push_back(hit_time_ - t);
            else if (t > hit_time_)
                desc.push_back(t - hit_time_);
        }
        bridge_insert(*ascent_bridge_, asc, rng);
        descent_->insert(desc, rng);
    }
    y_->insert(fresh, rng);
    rebuild_a_hat();
}

BranchingTimes sample_branching_times(SpinePath& spine, double horizon, RngStream& rng,
                                      IntensityMode mode, const GrTable* gr,
                                      double start_time) {
    if (horizon < 0.0) throw parameter_error("branching times: horizon must be >= 0");
    if (start_time < 0.0) throw parameter_error("branching times: start_time must be >= 0");
    if (horizon > spine.horizon() + 1e-9)
        throw parameter_error("branching times: horizon exceeds the spine horizon");
    if (mode == IntensityMode::tilted && gr == nullptr)
        throw config_error("branching times: tilted mode requires a GrTable");

    RngStream cand_rng = rng.derive(0);
    RngStream accept_rng = rng.derive(1);
    RngStream refine_rng = rng.derive(2);

    std::vector<double> candidates;
    for (double t = start_time + cand_rng.exponential(2.0); t < horizon;
         t += cand_rng.exponential(2.0))
        candidates.push_back(t);

    BranchingTimes out;
    out.intensity_mode = mode;
    if (mode == IntensityMode::rate2) {
        out.times = std::move(candidates);
        return out;
    }

    spine.refine_at(candidates, refine_rng);
    for (double t : candidates) {
        const double g = (*gr)(t, -kSqrt2 * spine.a_hat_at(t));
        if (accept_rng.uniform01() < 1.0 - g) out.times.push_back(t);
    }
    return out;
}

CloudSample sample_conditioned_cloud(double tau, double a_tau, std::span<const double> y_tau,
                                     int dim, const RngStream& rng, std::int64_t max_rejects,
                                     std::int64_t particle_cap) {
    if (tau < 0.0) throw parameter_error("conditioned cloud: tau must be >= 0");
    if (max_rejects < 1) throw parameter_error("conditioned cloud: max_rejects must be >= 1");
    if (static_cast<int>(y_tau.size()) != dim - 1)
        throw parameter_error("conditioned cloud: transversal offset dimension mismatch");

    for (std::int64_t attempt = 0; attempt < max_rejects; ++attempt) {
        if (tau == 0.0) {
            if (!(a_tau < 0.0)) continue;  // a lone point at a_tau >= 0 can never pass
            CloudSample sample;
            sample.branch_time = 0.0;
            sample.accepted_after = attempt;
            sample.cloud.dim = dim;
            std::vector<double> p(static_cast<std::size_t>(dim));
            p[0] = a_tau;
            for (int j = 1; j < dim; ++j) p[static_cast<std::size_t>(j)] = y_tau[static_cast<std::size_t>(j - 1)];
            sample.cloud.add(p, 0);
            return sample;
        }

        const BbmTree tree = simulate_bbm(dim, tau, rng.derive(static_cast<std::uint64_t>(attempt)),
                                          particle_cap);
        double max_x = -1e300;
        for (std::int64_t leaf : tree.leaf_ids())
            max_x = std::max(max_x, tree.final_position(leaf)[0]);
        if (!(max_x + a_tau < 0.0)) continue;

        CloudSample sample;
        sample.branch_time = tau;
        sample.accepted_after = attempt;
        sample.cloud.dim = dim;
        std::vector<double> p(static_cast<std::size_t>(dim));
        for (std::int64_t leaf : tree.leaf_ids()) {
            auto pos = tree.final_position(leaf);
            p[0] = a_tau + pos[0];
            for (int j = 1; j < dim; ++j)
                p[static_cast<std::size_t>(j)] =
                    y_tau[static_cast<std::size_t>(j - 1)] + pos[static_cast<std::size_t>(j)];
            sample.cloud.add(p, leaf);
        }
        return sample;
    }
    throw budget_error("conditioned cloud: rejection budget " + std::to_string(max_rejects) +
                           " exhausted",
                       0.0);
}

AcceptanceProbe estimate_conditioning_acceptance(double tau, double a_tau,
                                                 std::size_t attempts, const RngStream& rng,
                                                 double prune_delta) {
    if (attempts == 0) throw parameter_error("acceptance probe: attempts must be >= 1");
    AcceptanceProbe probe;
    probe.attempts = attempts;
    for (std::size_t i = 0; i < attempts; ++i)
        if (!bbm_max_exceeds(tau, -a_tau, rng.derive(i), prune_delta)) ++probe.accepted;
    probe.rate = static_cast<double>(probe.accepted) / static_cast<double>(attempts);
    return probe;
}

PointCloud assemble_cluster(const SpinePath& spine, const BranchingTimes& times,
                            const std::vector<CloudSample>& clouds) {
    if (clouds.size() != times.times.size())
        throw parameter_error("assemble_cluster: clouds and branching times differ in count");
    for (std::size_t i = 0; i < clouds.size(); ++i)
        if (clouds[i].branch_time != times.times[i])
            throw parameter_error("assemble_cluster: cloud " + std::to_string(i) +
                                  " does not match its branching time");

    PointCloud cluster;
    cluster.dim = spine.dim;
    std::vector<double> origin(static_cast<std::size_t>(spine.dim), 0.0);
    cluster.add(origin, -1);
    for (std::size_t i = 0; i < clouds.size(); ++i) {
        const PointCloud& c = clouds[i].cloud;
        if (c.dim != spine.dim)
            throw parameter_error("assemble_cluster: cloud dimension mismatch");
        for (std::size_t p = 0; p < c.size(); ++p)
            cluster.add(c.point(p), static_cast<std::int64_t>(i));
    }
    return cluster;
}

XlPath compute_xl(const SpinePath& spine, double L, const std::vector<double>& s_grid,
                  double sigma_max) {
    if (!(L > 0.0)) throw parameter_error("compute_xl: L must be positive");
    if (!(sigma_max > 0.0)) throw parameter_error("compute_xl: sigma_max must be positive");
    const double required = sigma_max * L * L;
    if (spine.horizon() < required * (1.0 - 1e-12))
        throw config_error("compute_xl: spine horizon " + std::to_string(spine.horizon()) +
                           " too short; need >= " + std::to_string(required));

    // Scalar path sigma -> A_hat(sigma L^2) / L on the grid-induced sigma set.
    PathGrid sigma_path;
    sigma_path.dim = 1;
    std::vector<double> sigmas;
    std::vector<double> vals;
    const auto& pts = spine.grid().points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double sigma = pts[i] / (L * L);
        if (sigma > sigma_max) break;
        sigmas.push_back(sigma);
        vals.push_back(spine.a_hat(i) / L);
    }
    sigma_path.grid = TimeGrid(std::move(sigmas));
    sigma_path.values = std::move(vals);

    XlPath out;
    out.s_grid = s_grid;
    out.values.reserve(s_grid.size());
    out.argmax_sigma.reserve(s_grid.size());
    for (double s : s_grid) {
        if (s < 0.0) throw parameter_error("compute_xl: s must be >= 0");
        double best = 0.0, arg = 0.0;
        for (std::size_t i = 0; i < sigma_path.size(); ++i) {
            const double sigma = sigma_path.grid[i];
            const double term = sigma * (s - sigma_path.values[i]);
            if (term > best) {
                best = term;
                arg = sigma;
            }
        }
        out.values.push_back(std::sqrt(best));
        out.argmax_sigma.push_back(arg);
    }
    return out;
}

std::vector<WindowCloud> make_window_clouds(SpinePath& spine, const BranchingTimes& times,
                                            const SimplifiedFrontParams& params,
                                            RngStream& rng) {
    if (params.s_grid.empty()) throw parameter_error("window clouds: empty s grid");
    const double big_t = params.s_grid.back();
    const double win_lo = std::pow(params.L, 1.4);
    const double win_hi = last_exit_time(spine.a_hat_path(), big_t * params.L);

    std::vector<double> selected;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < times.times.size(); ++i) {
        const double tau = times.times[i];
        if (tau >= win_lo && tau <= win_hi) {
            selected.push_back(tau);
            index.push_back(i);
        }
    }
    RngStream refine_rng = rng.derive(0);
    RngStream cloud_rng = rng.derive(1);
    spine.refine_at(selected, refine_rng);

    std::vector<WindowCloud> out;
    out.reserve(selected.size());
    for (std::size_t k = 0; k < selected.size(); ++k) {
        WindowCloud wc;
        wc.tau = selected[k];
        if (wc.tau <= params.exact_tau_cap) {
            wc.exact = true;
            const BbmTree tree = simulate_bbm(spine.dim, wc.tau, cloud_rng.derive(index[k]),
                                              params.particle_cap);
            wc.points.dim = spine.dim;
            for (std::int64_t leaf : tree.leaf_ids()) wc.points.add(tree.final_position(leaf), leaf);
        } else {
            wc.exact = false;
            wc.norm_center = kSqrt2 * wc.tau - params.band_log_coeff * std::log(wc.tau) -
                             params.band_offset;
        }
        out.push_back(std::move(wc));
    }
    return out;
}

namespace {

FrontSurface empty_surface(const SpinePath& spine, const SimplifiedFrontParams& params) {
    if (params.s_grid.empty()) throw parameter_error("simplified front: empty s grid");
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
        throw parameter_error("simplified front: epsilon must lie in (0,1)");
    const int tdim = spine.dim - 1;
    if (params.theta_set.empty() ||
        params.theta_set.size() % static_cast<std::size_t>(tdim) != 0)
        throw parameter_error("simplified front: theta set does not match dimension");
    FrontSurface surf;
    surf.s_grid = params.s_grid;
    surf.theta_dim = tdim;
    surf.theta_set = params.theta_set;
    surf.epsilon = params.epsilon;
    surf.slab_width = 1.0;
    surf.heights.assign(params.s_grid.size() * surf.theta_count(), 0.0);
    return surf;
}

void add_band_contribution(FrontSurface& surf, double a_tau, double norm_center, double L) {
    const double scale = std::pow(L, -1.5);
    const std::size_t nt = surf.theta_count();
    for (std::size_t k = 0; k < surf.s_grid.size(); ++k) {
        const double lower = -(surf.s_grid[k] * L) - a_tau;  // window bottom, cloud-local
        const double zsq = norm_center * norm_center - lower * lower;
        if (zsq <= 0.0) continue;
        const double h = scale * std::sqrt(zsq);
        for (std::size_t t = 0; t < nt; ++t)
            if (h > surf.height(k, t)) surf.height(k, t) = h;
    }
}

void add_exact_contribution(FrontSurface& surf, const PointCloud& points, double a_tau,
                            std::span<const double> y_spine,
                            const SimplifiedFrontParams& params) {
    const int tdim = surf.theta_dim;
    const double L = params.L;
    const double scale = std::pow(L, -1.5);
    const double cone = 1.0 - params.epsilon;
    const std::size_t nt = surf.theta_count();
    std::vector<double> shifted(static_cast<std::size_t>(tdim));
    for (std::size_t p = 0; p < points.size(); ++p) {
        auto pt = points.point(p);
        const double x_abs = pt[0] + a_tau;
        std::span<const double> yv{pt.data() + 1, static_cast<std::size_t>(tdim)};
        const double hraw = norm(yv);
        if (hraw == 0.0) continue;  // transversal direction undefined
        for (int j = 0; j < tdim; ++j)
            shifted[static_cast<std::size_t>(j)] =
                yv[static_cast<std::size_t>(j)] + y_spine[static_cast<std::size_t>(j)];
        const double shifted_norm = norm(shifted);
        if (shifted_norm == 0.0) continue;
        for (std::size_t k = 0; k < surf.s_grid.size(); ++k) {
            const double sL = surf.s_grid[k] * L;
            if (!(x_abs > -sL && x_abs <= -sL + 1.0)) continue;
            const double h = scale * hraw;
            for (std::size_t t = 0; t < nt; ++t) {
                double d = 0.0;
                for (int j = 0; j < tdim; ++j)
                    d += surf.theta(t)[static_cast<std::size_t>(j)] *
                         shifted[static_cast<std::size_t>(j)] / shifted_norm;
                const double cval =
                    params.cone_mode == ConeMode::absolute_dot ? std::abs(d) : d;
                if (cval >= cone && h > surf.height(k, t)) surf.height(k, t) = h;
            }
        }
    }
}

}  // namespace

FrontSurface simplified_front(const SpinePath& spine, const BranchingTimes& times,
                              const std::vector<WindowCloud>& clouds,
                              const SimplifiedFrontParams& params) {
    FrontSurface surf = empty_surface(spine, params);
    for (const auto& wc : clouds)
        if (!std::binary_search(times.times.begin(), times.times.end(), wc.tau))
            throw parameter_error("simplified front: cloud time missing from branching times");

    for (const auto& wc : clouds) {
        const double a_tau = spine.a_at(wc.tau);
        if (wc.exact)
            add_exact_contribution(surf, wc.points, a_tau, spine.y_at(wc.tau), params);
        else
            add_band_contribution(surf, a_tau, wc.norm_center, params.L);
    }
    return surf;
}

FrontSurface simplified_front_streamed(SpinePath& spine, const BranchingTimes& times,
                                       const SimplifiedFrontParams& params, RngStream& rng) {
    FrontSurface surf = empty_surface(spine, params);
    const double big_t = params.s_grid.back();
    const double win_lo = std::pow(params.L, 1.4);
    const double win_hi = last_exit_time(spine.a_hat_path(), big_t * params.L);

    std::vector<double> selected;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < times.times.size(); ++i) {
        const double tau = times.times[i];
        if (tau >= win_lo && tau <= win_hi) {
            selected.push_back(tau);
            index.push_back(i);
        }
    }
    RngStream refine_rng = rng.derive(0);
    RngStream cloud_rng = rng.derive(1);
    spine.refine_at(selected, refine_rng);

    for (std::size_t k = 0; k < selected.size(); ++k) {
        const double tau = selected[k];
        const double a_tau = spine.a_at(tau);
        if (tau <= params.exact_tau_cap) {
            const BbmTree tree =
                simulate_bbm(spine.dim, tau, cloud_rng.derive(index[k]), params.particle_cap);
            PointCloud points;
            points.dim = spine.dim;
            for (std::int64_t leaf : tree.leaf_ids()) points.add(tree.final_position(leaf), leaf);
            add_exact_contribution(surf, points, a_tau, spine.y_at(tau), params);
        } else {
            const double nc = kSqrt2 * tau - params.band_log_coeff * std::log(tau) -
                              params.band_offset;
            add_band_contribution(surf, a_tau, nc, params.L);
        }
    }
    return surf;
}

}  // namespace bbmfront
