#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bbmfront/geometry.hpp"
#include "bbmfront/rng.hpp"

namespace bbmfront {

constexpr std::int64_t kDefaultParticleCap = 2'000'000;

struct ParticleNode {
    std::int64_t id = 0;
    std::int64_t parent_id = -1;  // -1 for the root
    double birth_time = 0.0;
    double final_time = 0.0;  // branch time, or the horizon for leaves
    std::span<const double> birth_position;
    std::span<const double> final_position;
};

// Genealogical tree of one branching run: binary splits at rate-1 exponential
// times, independent Brownian displacement per lifetime. Positions are stored
// only at birth and final times; everything downstream (fronts, clusters,
// clans, occupancy) reads branch-time and horizon positions, so trajectories
// are never materialized and memory stays O(#nodes * dim).
class BbmTree {
public:
    int dim = 1;
    double horizon = 0.0;

    std::size_t node_count() const { return parent_.size(); }
    std::size_t leaf_count() const { return leaf_ids_.size(); }
    const std::vector<std::int64_t>& leaf_ids() const { return leaf_ids_; }

    ParticleNode node(std::int64_t id) const;
    std::int64_t parent(std::int64_t id) const { return parent_[static_cast<std::size_t>(id)]; }
    double birth_time(std::int64_t id) const { return birth_time_[static_cast<std::size_t>(id)]; }
    double final_time(std::int64_t id) const { return final_time_[static_cast<std::size_t>(id)]; }
    std::span<const double> birth_position(std::int64_t id) const;
    std::span<const double> final_position(std::int64_t id) const;
    bool is_leaf(std::int64_t id) const;
    double leaf_norm(std::int64_t id) const { return norm(final_position(id)); }

    friend BbmTree simulate_bbm(int dim, double horizon, RngStream rng,
                                std::int64_t particle_cap);

private:
    std::int64_t add_node(std::int64_t parent, double birth, std::span<const double> pos);

    std::vector<std::int64_t> parent_;
    std::vector<double> birth_time_;
    std::vector<double> final_time_;
    std::vector<double> birth_pos_;  // node-major, dim columns
    std::vector<double> final_pos_;
    std::vector<std::int64_t> leaf_ids_;
};

// Event-driven simulation: a min-heap of branch events keyed by (time, id)
// gives exact branch times and a processing order that is deterministic given
// the stream. Exceeding `particle_cap` nodes raises capacity_error naming the
// first violating branch time; growth is exponential in the horizon, so a
// silent truncation would corrupt every downstream statistic.
BbmTree simulate_bbm(int dim, double horizon, RngStream rng,
                     std::int64_t particle_cap = kDefaultParticleCap);

struct ExtremalRecord {
    std::int64_t particle_id = -1;
    double max_norm = 0.0;
    double recentered = 0.0;            // max_norm - centering_m(horizon, dim)
    std::vector<double> direction;      // unit vector; empty if undefined
    bool direction_defined = false;     // false when the maximal position is 0
};

// Leaf of maximal Euclidean norm; ties broken by smallest id.
ExtremalRecord max_norm_particle(const BbmTree& tree);

// Death time of the most recent common ancestor of leaves u and v.
// split_time(u, u) is the horizon by convention.
double split_time(const BbmTree& tree, std::int64_t u, std::int64_t v);

// One record per ancestor alive at time horizon - ell: the maximal-norm leaf
// among that ancestor's descendants. Requires 0 < ell <= horizon.
std::vector<ExtremalRecord> clan_leaders(const BbmTree& tree, double ell);

// Maximum norm at the horizon without materializing the tree (ensemble runs).
double sample_max_norm(int dim, double horizon, RngStream rng,
                       std::int64_t particle_cap = kDefaultParticleCap);

// One-sided maximum of a 1-dimensional branching run at the horizon.
double sample_max_1d(double horizon, RngStream rng,
                     std::int64_t particle_cap = kDefaultParticleCap);

// Whether the running maximum of a 1-dimensional branching run reaches
// `threshold` by the horizon. Subtrees whose chance of reaching the threshold
// is below `prune_delta` (by exponential and Gaussian tail bounds) are
// dropped, which keeps the particle count polynomial even for horizons where
// the full population is astronomically large. The wrong-answer probability
// is at most prune_delta per pruned subtree.
bool bbm_max_exceeds(double horizon, double threshold, RngStream rng,
                     double prune_delta = 1e-12);

}  // namespace bbmfront
