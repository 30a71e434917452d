#include "bbmfront/bbm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <string>

#include "bbmfront/errors.hpp"

namespace bbmfront {

ParticleNode BbmTree::node(std::int64_t id) const {
    const auto i = static_cast<std::size_t>(id);
    if (id < 0 || i >= parent_.size())
        throw parameter_error("unknown particle id " + std::to_string(id));
    ParticleNode n;
    n.id = id;
    n.parent_id = parent_[i];
    n.birth_time = birth_time_[i];
    n.final_time = final_time_[i];
    n.birth_position = birth_position(id);
    n.final_position = final_position(id);
    return n;
}

std::span<const double> BbmTree::birth_position(std::int64_t id) const {
    const auto i = static_cast<std::size_t>(id);
    return {birth_pos_.data() + i * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
}

std::span<const double> BbmTree::final_position(std::int64_t id) const {
    const auto i = static_cast<std::size_t>(id);
    return {final_pos_.data() + i * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
}

bool BbmTree::is_leaf(std::int64_t id) const {
    return std::find(leaf_ids_.begin(), leaf_ids_.end(), id) != leaf_ids_.end();
}

std::int64_t BbmTree::add_node(std::int64_t parent, double birth,
                               std::span<const double> pos) {
    const auto id = static_cast<std::int64_t>(parent_.size());
    parent_.push_back(parent);
    birth_time_.push_back(birth);
    final_time_.push_back(birth);
    birth_pos_.insert(birth_pos_.end(), pos.begin(), pos.end());
    final_pos_.insert(final_pos_.end(), pos.begin(), pos.end());
    return id;
}

BbmTree simulate_bbm(int dim, double horizon, RngStream rng, std::int64_t particle_cap) {
    if (dim < 1) throw parameter_error("simulate_bbm: dim must be >= 1");
    if (horizon < 0.0) throw parameter_error("simulate_bbm: horizon must be >= 0");
    if (particle_cap < 1) throw parameter_error("simulate_bbm: particle_cap must be >= 1");

    BbmTree tree;
    tree.dim = dim;
    tree.horizon = horizon;

    const std::vector<double> origin(static_cast<std::size_t>(dim), 0.0);
    const std::int64_t root = tree.add_node(-1, 0.0, origin);

    if (horizon == 0.0) {
        tree.leaf_ids_.push_back(root);
        return tree;
    }

    // Branch events ordered by (time, id); ties by id keep the processing
    // order deterministic for a given stream.
    using Event = std::pair<double, std::int64_t>;
    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> events;

    // Draw a node's lifetime and final state; returns true if it branches.
    auto settle = [&](std::int64_t id) -> bool {
        const auto i = static_cast<std::size_t>(id);
        const double birth = tree.birth_time_[i];
        const double lifetime = rng.exponential(1.0);
        const bool branches = birth + lifetime < horizon;
        const double end = branches ? birth + lifetime : horizon;
        tree.final_time_[i] = end;
        const double sd = std::sqrt(end - birth);
        for (int j = 0; j < dim; ++j)
            tree.final_pos_[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)] +=
                sd * rng.normal();
        if (branches)
            events.emplace(end, id);
        else
            tree.leaf_ids_.push_back(id);
        return branches;
    };

    settle(root);
    while (!events.empty()) {
        const auto [split, id] = events.top();
        events.pop();
        if (static_cast<std::int64_t>(tree.node_count()) + 2 > particle_cap)
            throw capacity_error("particle cap " + std::to_string(particle_cap) +
                                     " exceeded at time " + std::to_string(split),
                                 split);
        for (int c = 0; c < 2; ++c) settle(tree.add_node(id, split, tree.final_position(id)));
    }

    std::sort(tree.leaf_ids_.begin(), tree.leaf_ids_.end());
    return tree;
}

ExtremalRecord max_norm_particle(const BbmTree& tree) {
    if (tree.leaf_count() == 0) throw parameter_error("max_norm_particle: tree has no leaves");
    std::int64_t best = -1;
    double best_norm = -1.0;
    for (std::int64_t id : tree.leaf_ids()) {
        const double n = tree.leaf_norm(id);
        if (n > best_norm || (n == best_norm && (best < 0 || id < best))) {
            best_norm = n;
            best = id;
        }
    }
    ExtremalRecord rec;
    rec.particle_id = best;
    rec.max_norm = best_norm;
    rec.recentered = best_norm - centering_m(tree.horizon, tree.dim);
    if (best_norm > 0.0) {
        auto pos = tree.final_position(best);
        rec.direction.assign(pos.begin(), pos.end());
        for (double& x : rec.direction) x /= best_norm;
        rec.direction_defined = true;
    }
    return rec;
}

double split_time(const BbmTree& tree, std::int64_t u, std::int64_t v) {
    if (u < 0 || static_cast<std::size_t>(u) >= tree.node_count() || v < 0 ||
        static_cast<std::size_t>(v) >= tree.node_count())
        throw parameter_error("split_time: unknown particle id");
    if (u == v) return tree.horizon;
    while (u != v) {
        if (tree.birth_time(u) >= tree.birth_time(v)) {
            u = tree.parent(u);
            if (u < 0) throw parameter_error("split_time: disconnected genealogy");
        } else {
            v = tree.parent(v);
            if (v < 0) throw parameter_error("split_time: disconnected genealogy");
        }
    }
    return tree.final_time(u);
}

std::vector<ExtremalRecord> clan_leaders(const BbmTree& tree, double ell) {
    if (!(ell > 0.0) || ell > tree.horizon)
        throw parameter_error("clan_leaders: need 0 < ell <= horizon");
    const double tau = tree.horizon - ell;

    // Ancestor alive at tau -> best descendant leaf (ties: smallest leaf id).
    std::map<std::int64_t, std::pair<double, std::int64_t>> best;
    for (std::int64_t leaf : tree.leaf_ids()) {
        std::int64_t a = leaf;
        while (tree.birth_time(a) > tau) a = tree.parent(a);
        const double n = tree.leaf_norm(leaf);
        auto it = best.find(a);
        if (it == best.end() || n > it->second.first ||
            (n == it->second.first && leaf < it->second.second))
            best[a] = {n, leaf};
    }

    std::vector<ExtremalRecord> out;
    out.reserve(best.size());
    const double m = centering_m(tree.horizon, tree.dim);
    for (const auto& [ancestor, entry] : best) {
        (void)ancestor;
        ExtremalRecord rec;
        rec.particle_id = entry.second;
        rec.max_norm = entry.first;
        rec.recentered = entry.first - m;
        if (entry.first > 0.0) {
            auto pos = tree.final_position(entry.second);
            rec.direction.assign(pos.begin(), pos.end());
            for (double& x : rec.direction) x /= entry.first;
            rec.direction_defined = true;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

double sample_max_norm(int dim, double horizon, RngStream rng, std::int64_t particle_cap) {
    if (dim < 1) throw parameter_error("sample_max_norm: dim must be >= 1");
    if (horizon < 0.0) throw parameter_error("sample_max_norm: horizon must be >= 0");
    if (horizon == 0.0) return 0.0;

    // Depth-first over (birth time, position); no genealogy is stored.
    std::vector<double> birth_stack{0.0};
    std::vector<double> pos_stack(static_cast<std::size_t>(dim), 0.0);
    std::vector<double> pos(static_cast<std::size_t>(dim));
    std::int64_t nodes = 0;
    double best_sq = 0.0;

    while (!birth_stack.empty()) {
        const double birth = birth_stack.back();
        birth_stack.pop_back();
        for (int j = dim; j-- > 0;) {
            pos[static_cast<std::size_t>(j)] = pos_stack.back();
            pos_stack.pop_back();
        }
        if (++nodes > particle_cap)
            throw capacity_error("particle cap exceeded at time " + std::to_string(birth),
                                 birth);
        const double lifetime = rng.exponential(1.0);
        if (birth + lifetime >= horizon) {
            const double sd = std::sqrt(horizon - birth);
            double sq = 0.0;
            for (int j = 0; j < dim; ++j) {
                const double x = pos[static_cast<std::size_t>(j)] + sd * rng.normal();
                sq += x * x;
            }
            best_sq = std::max(best_sq, sq);
        } else {
            const double sd = std::sqrt(lifetime);
            for (int j = 0; j < dim; ++j) pos[static_cast<std::size_t>(j)] += sd * rng.normal();
            for (int c = 0; c < 2; ++c) {
                birth_stack.push_back(birth + lifetime);
                pos_stack.insert(pos_stack.end(), pos.begin(), pos.end());
            }
        }
    }
    return std::sqrt(best_sq);
}

double sample_max_1d(double horizon, RngStream rng, std::int64_t particle_cap) {
    if (horizon < 0.0) throw parameter_error("sample_max_1d: horizon must be >= 0");
    if (horizon == 0.0) return 0.0;

    std::vector<double> birth_stack{0.0};
    std::vector<double> pos_stack{0.0};
    std::int64_t nodes = 0;
    double best = -std::numeric_limits<double>::infinity();

    while (!birth_stack.empty()) {
        const double birth = birth_stack.back();
        const double x = pos_stack.back();
        birth_stack.pop_back();
        pos_stack.pop_back();
        if (++nodes > particle_cap)
            throw capacity_error("particle cap exceeded at time " + std::to_string(birth),
                                 birth);
        const double lifetime = rng.exponential(1.0);
        if (birth + lifetime >= horizon) {
            best = std::max(best, x + std::sqrt(horizon - birth) * rng.normal());
        } else {
            const double cx = x + std::sqrt(lifetime) * rng.normal();
            for (int c = 0; c < 2; ++c) {
                birth_stack.push_back(birth + lifetime);
                pos_stack.push_back(cx);
            }
        }
    }
    return best;
}

namespace {

// P(terminal max of a subtree rooted at displacement gap z over remaining
// time r reaches 0) is at most exp(r - z^2 / (2r)) by the expectation
// identity for particle sums and a Gaussian tail bound.
inline bool subtree_negligible(double r, double z, double delta) {
    if (z <= 0.0) return false;
    if (r <= 0.0) return true;
    return r - z * z / (2.0 * r) < std::log(delta);
}

}  // namespace

bool bbm_max_exceeds(double horizon, double threshold, RngStream rng, double prune_delta) {
    if (horizon < 0.0) throw parameter_error("bbm_max_exceeds: horizon must be >= 0");
    if (horizon == 0.0) return 0.0 >= threshold;

    std::vector<double> birth_stack{0.0};
    std::vector<double> pos_stack{0.0};

    while (!birth_stack.empty()) {
        const double birth = birth_stack.back();
        const double x = pos_stack.back();
        birth_stack.pop_back();
        pos_stack.pop_back();

        const double lifetime = rng.exponential(1.0);
        if (birth + lifetime >= horizon) {
            const double xt = x + std::sqrt(horizon - birth) * rng.normal();
            if (xt >= threshold) return true;
        } else {
            const double child_birth = birth + lifetime;
            const double cx = x + std::sqrt(lifetime) * rng.normal();
            if (subtree_negligible(horizon - child_birth, threshold - cx, prune_delta))
                continue;
            for (int c = 0; c < 2; ++c) {
                birth_stack.push_back(child_birth);
                pos_stack.push_back(cx);
            }
        }
    }
    return false;
}

}  // namespace bbmfront
