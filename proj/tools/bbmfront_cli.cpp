// bbmfront: Monte Carlo laboratory for the outer envelope of branching
// Brownian motion. Subcommands simulate particle systems, extract extremal
// clusters and fronts, sample the limiting cluster and front profile, and run
// the statistical verification suites. Every run is deterministic given
// (config, seed) and writes a manifest with artifact checksums.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbmfront/bbm.hpp"
#include "bbmfront/cluster.hpp"
#include "bbmfront/csvio.hpp"
#include "bbmfront/errors.hpp"
#include "bbmfront/front.hpp"
#include "bbmfront/parallel.hpp"
#include "bbmfront/rho.hpp"
#include "bbmfront/stats.hpp"
#include "bbmfront/verify.hpp"

namespace fs = std::filesystem;
using namespace bbmfront;

namespace {

struct CommonOpts {
    int dim = 2;
    std::size_t replicas = 1;
    std::uint64_t seed = 1;
    std::int64_t particle_cap = kDefaultParticleCap;
    int threads = 0;
    std::string out_dir;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o, int min_dim) {
    cmd->add_option("--dim", o.dim, "spatial dimension")->check(CLI::Range(min_dim, 16));
    cmd->add_option("--replicas", o.replicas, "ensemble size")->check(CLI::Range(1, 100000000));
    cmd->add_option("--seed", o.seed, "root seed");
    cmd->add_option("--particle-cap", o.particle_cap, "hard cap on nodes per run")
        ->check(CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(1) << 40));
    cmd->add_option("--threads", o.threads, "worker threads (0: hardware)");
    cmd->add_option("--out", o.out_dir, "output directory (default $BBMFRONT_OUT or .)");
    cmd->add_option("--format", o.format, "artifact format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

fs::path resolve_out_dir(const CommonOpts& o) {
    std::string dir = o.out_dir;
    if (dir.empty()) {
        const char* env = std::getenv("BBMFRONT_OUT");
        dir = env && *env ? env : ".";
    }
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw io_error("cannot create output directory " + p.string());
    return p;
}

ArtifactFormat parse_format(const std::string& f) {
    return f == "json" ? ArtifactFormat::json : ArtifactFormat::csv;
}

std::string artifact_ext(const std::string& f) { return f == "json" ? ".json" : ".csv"; }

class RunOutput {
public:
    RunOutput(const CommonOpts& o, std::string command) : dir_(resolve_out_dir(o)) {
        config_.emplace_back("command", std::move(command));
        config_.emplace_back("dim", std::to_string(o.dim));
        config_.emplace_back("replicas", std::to_string(o.replicas));
        config_.emplace_back("seed", std::to_string(o.seed));
        config_.emplace_back("particle_cap", std::to_string(o.particle_cap));
        config_.emplace_back("format", o.format);
    }

    void config(const std::string& key, const std::string& value) {
        config_.emplace_back(key, value);
    }
    void config(const std::string& key, double value) {
        config_.emplace_back(key, format_double(value));
    }

    fs::path dir() const { return dir_; }

    void emit(const Table& table, const std::string& name, ArtifactFormat format) {
        const fs::path p = dir_ / name;
        write_table(table, p, format);
        record(p);
    }

    void record(const fs::path& p) {
        ManifestArtifact a;
        a.name = p.filename().string();
        a.bytes = fs::file_size(p);
        a.checksum = fnv1a64_file(p);
        artifacts_.push_back(std::move(a));
    }

    void finish() { write_manifest(dir_ / "manifest.json", config_, artifacts_); }

private:
    fs::path dir_;
    std::vector<std::pair<std::string, std::string>> config_;
    std::vector<ManifestArtifact> artifacts_;
};

std::string replica_name(const std::string& stem, std::size_t replica, std::size_t total,
                         const std::string& ext) {
    if (total == 1) return stem + ext;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "_r%03zu", replica);
    return stem + buf + ext;
}

int run_bbm(const CommonOpts& o, double horizon) {
    RunOutput out(o, "bbm");
    out.config("t", horizon);
    const ArtifactFormat fmt = parse_format(o.format);

    std::vector<BbmTree> trees(o.replicas);
    RngStream root(o.seed);
    parallel_for(o.replicas, o.threads, [&](std::size_t r) {
        trees[r] = simulate_bbm(o.dim, horizon, root.derive(r), o.particle_cap);
    });
    Table table = tree_table(trees[0], 0);
    for (std::size_t r = 1; r < o.replicas; ++r) append_tree_rows(table, trees[r], static_cast<std::int64_t>(r));
    out.emit(table, std::string("tree") + artifact_ext(o.format), fmt);
    out.finish();
    return 0;
}

int run_front(const CommonOpts& o, double horizon, double epsilon, double slab_width,
              double s_max, std::size_t s_steps, int theta_steps, const std::string& cone) {
    RunOutput out(o, "front");
    out.config("t", horizon);
    out.config("epsilon", epsilon);
    out.config("slab_width", slab_width);
    out.config("s_max", s_max);
    out.config("s_steps", std::to_string(s_steps));
    out.config("theta_steps", std::to_string(theta_steps));
    out.config("cone_mode", cone);
    const ArtifactFormat fmt = parse_format(o.format);
    const ConeMode mode = cone == "absolute" ? ConeMode::absolute_dot : ConeMode::signed_dot;

    std::vector<double> s_grid(s_steps + 1);
    for (std::size_t i = 0; i <= s_steps; ++i)
        s_grid[i] = s_max * static_cast<double>(i) / static_cast<double>(s_steps);
    const std::vector<double> thetas = make_theta_set(o.dim, theta_steps);

    std::vector<FrontSurface> surfaces(o.replicas);
    RngStream root(o.seed);
    parallel_for(o.replicas, o.threads, [&](std::size_t r) {
        const BbmTree tree = simulate_bbm(o.dim, horizon, root.derive(r), o.particle_cap);
        surfaces[r] = front_of_bbm(tree, epsilon, slab_width, s_grid, thetas, mode);
    });
    for (std::size_t r = 0; r < o.replicas; ++r)
        out.emit(front_surface_table(surfaces[r]),
                 replica_name("front", r, o.replicas, artifact_ext(o.format)), fmt);
    out.finish();
    return 0;
}

int run_landscape(const CommonOpts& o, double horizon, double ell) {
    RunOutput out(o, "landscape");
    out.config("t", horizon);
    out.config("ell", ell);
    const ArtifactFormat fmt = parse_format(o.format);

    std::vector<std::vector<LandscapeEntry>> entries(o.replicas);
    RngStream root(o.seed);
    parallel_for(o.replicas, o.threads, [&](std::size_t r) {
        const BbmTree tree = simulate_bbm(o.dim, horizon, root.derive(r), o.particle_cap);
        entries[r] = extremal_landscape(tree, ell);
    });
    for (std::size_t r = 0; r < o.replicas; ++r) {
        out.emit(landscape_table(entries[r]),
                 replica_name("landscape", r, o.replicas, artifact_ext(o.format)), fmt);
        out.emit(landscape_cluster_table(entries[r]),
                 replica_name("clusters", r, o.replicas, artifact_ext(o.format)), fmt);
    }
    out.finish();
    return 0;
}

GrTable obtain_gr_table(const std::string& path, std::size_t gr_replicas,
                        const CommonOpts& o, RunOutput& out) {
    if (!path.empty() && fs::exists(path)) {
        out.config("gr_table", path + " (loaded)");
        return load_gr_table_csv(path);
    }
    std::vector<double> r_grid;
    for (double r = 0.25; r <= 12.0 + 1e-9; r += 0.25) r_grid.push_back(r);
    std::vector<double> x_grid;
    for (double x = -30.0; x <= 12.0 + 1e-9; x += 1.0) x_grid.push_back(x);
    RngStream rng = RngStream(o.seed).derive(9001);
    GrTable table = build_gr_table(r_grid, x_grid, gr_replicas, rng, o.particle_cap);
    const fs::path dest = path.empty() ? out.dir() / "grtable.csv" : fs::path(path);
    write_table(gr_table_table(table), dest, ArtifactFormat::csv);
    out.record(dest);
    out.config("gr_table", dest.string() + " (built)");
    return table;
}

// Scaled-front mode of the cluster command: spine functional and windowed
// front at scale L, one surface file per replica plus a shared X_L table.
int run_cluster_front(const CommonOpts& o, double L, double epsilon, double s_max,
                      std::size_t s_steps) {
    RunOutput out(o, "cluster");
    out.config("front_L", L);
    out.config("epsilon", epsilon);
    out.config("s_max", s_max);
    out.config("s_steps", std::to_string(s_steps));
    const ArtifactFormat fmt = parse_format(o.format);

    std::vector<double> s_grid(s_steps + 1);
    for (std::size_t i = 0; i <= s_steps; ++i)
        s_grid[i] = s_max * static_cast<double>(i) / static_cast<double>(s_steps);

    std::vector<FrontReplica> reps(o.replicas);
    RngStream root(o.seed);
    parallel_for(o.replicas, o.threads, [&](std::size_t r) {
        reps[r] = sample_front_replica(L, s_grid, epsilon, o.dim, root.derive(r));
    });

    Table xl;
    xl.header = {"replica", "s", "value", "argmax_sigma"};
    for (std::size_t r = 0; r < o.replicas; ++r)
        for (std::size_t i = 0; i < s_grid.size(); ++i)
            xl.add_row({std::to_string(r), format_double(s_grid[i]),
                        format_double(reps[r].xl.values[i]),
                        format_double(reps[r].xl.argmax_sigma[i])});
    out.emit(xl, std::string("xl") + artifact_ext(o.format), fmt);
    for (std::size_t r = 0; r < o.replicas; ++r)
        out.emit(front_surface_table(reps[r].front),
                 replica_name("front", r, o.replicas, artifact_ext(o.format)), fmt);
    out.finish();
    return 0;
}

int run_cluster(const CommonOpts& o, double horizon, const std::string& spine_mode,
                const std::string& intensity_mode, std::int64_t max_rejects,
                const std::string& gr_path, std::size_t gr_replicas, double proposal_b_max,
                std::size_t grid_steps) {
    RunOutput out(o, "cluster");
    out.config("horizon", horizon);
    out.config("spine_mode", spine_mode);
    out.config("intensity_mode", intensity_mode);
    out.config("max_rejects", std::to_string(max_rejects));
    out.config("proposal_b_max", proposal_b_max);
    const ArtifactFormat fmt = parse_format(o.format);

    const SpineMode smode =
        spine_mode == "tilted" ? SpineMode::tilted : SpineMode::approximate;
    const IntensityMode imode =
        intensity_mode == "tilted" ? IntensityMode::tilted : IntensityMode::rate2;

    GrTable table;
    const bool need_gr = smode == SpineMode::tilted || imode == IntensityMode::tilted;
    if (need_gr) table = obtain_gr_table(gr_path, gr_replicas, o, out);
    const GrTable* gr = need_gr ? &table : nullptr;

    struct ReplicaResult {
        PointCloud cluster;
        BranchingTimes times;
        double b = 0.0, log_weight = 0.0, weight = 1.0, tail = 0.0;
    };
    std::vector<ReplicaResult> results(o.replicas);
    RngStream root(o.seed);
    const TimeGrid grid =
        horizon > 0.0 ? TimeGrid::uniform(horizon, grid_steps) : TimeGrid::single();

    parallel_for(o.replicas, o.threads, [&](std::size_t r) {
        RngStream rng = root.derive(r);
        RngStream spine_rng = rng.derive(0);
        RngStream times_rng = rng.derive(1);
        RngStream refine_rng = rng.derive(2);
        RngStream cloud_rng = rng.derive(3);

        SpinePath spine =
            SpinePath::sample(smode, grid, o.dim, spine_rng, gr, proposal_b_max);
        BranchingTimes times =
            sample_branching_times(spine, horizon, times_rng, imode, gr);
        spine.refine_at(times.times, refine_rng);

        std::vector<CloudSample> clouds;
        clouds.reserve(times.times.size());
        for (std::size_t i = 0; i < times.times.size(); ++i) {
            const double tau = times.times[i];
            clouds.push_back(sample_conditioned_cloud(tau, spine.a_at(tau), spine.y_at(tau),
                                                      o.dim, cloud_rng.derive(i), max_rejects,
                                                      o.particle_cap));
        }
        ReplicaResult res;
        res.cluster = assemble_cluster(spine, times, clouds);
        res.times = std::move(times);
        res.b = spine.b;
        res.log_weight = spine.log_weight;
        res.weight = spine.weight;
        res.tail = spine.weight_tail_bound;
        results[r] = std::move(res);
    });

    Table table_out = cluster_table(results[0].cluster, results[0].times, 0);
    for (std::size_t r = 1; r < o.replicas; ++r)
        append_cluster_rows(table_out, results[r].cluster, results[r].times,
                            static_cast<std::int64_t>(r));
    out.emit(table_out, std::string("cluster") + artifact_ext(o.format), fmt);

    if (smode == SpineMode::tilted) {
        Table weights;
        weights.header = {"replica", "b", "log_weight", "weight", "weight_tail_bound"};
        for (std::size_t r = 0; r < o.replicas; ++r)
            weights.add_row({std::to_string(r), format_double(results[r].b),
                             format_double(results[r].log_weight),
                             format_double(results[r].weight),
                             format_double(results[r].tail)});
        out.emit(weights, std::string("weights") + artifact_ext(o.format), fmt);
    }
    out.finish();
    return 0;
}

int run_rho(const CommonOpts& o, double s_max, std::size_t s_steps, double sigma_min,
            int sigma_ppd, double sigma_horizon, bool surface, int theta_steps) {
    RunOutput out(o, "rho");
    out.config("s_max", s_max);
    out.config("s_steps", std::to_string(s_steps));
    out.config("sigma_min", sigma_min);
    out.config("sigma_ppd", std::to_string(sigma_ppd));
    const ArtifactFormat fmt = parse_format(o.format);

    std::vector<double> s_grid(s_steps + 1);
    for (std::size_t i = 0; i <= s_steps; ++i)
        s_grid[i] = s_max * static_cast<double>(i) / static_cast<double>(s_steps);

    SigmaGridSpec spec;
    spec.sigma_min = sigma_min;
    spec.points_per_decade = sigma_ppd;
    // Initial horizon; the sampler extends it adaptively either way.
    const double horizon0 =
        sigma_horizon > 0.0
            ? sigma_horizon
            : 0.5 * (spec.escape_factor * s_max / 1.6) * (spec.escape_factor * s_max / 1.6);
    out.config("sigma_horizon", horizon0);

    std::vector<RhoSample> samples(o.replicas);
    RngStream root(o.seed);
    parallel_for(o.replicas, o.threads, [&](std::size_t r) {
        RngStream rng = root.derive(r);
        samples[r] = sample_rho(s_grid, horizon0, spec, rng);
    });

    Table table = rho_table_header(s_grid.size());
    for (std::size_t r = 0; r < o.replicas; ++r)
        append_rho_rows(table, samples[r], static_cast<std::int64_t>(r));
    out.emit(table, std::string("rho") + artifact_ext(o.format), fmt);

    if (surface) {
        const std::vector<double> thetas = make_theta_set(o.dim, theta_steps);
        for (std::size_t r = 0; r < o.replicas; ++r)
            out.emit(front_surface_table(revolve_surface(samples[r], thetas, o.dim)),
                     replica_name("surface", r, o.replicas, artifact_ext(o.format)), fmt);
    }
    out.finish();
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& suite, bool quick,
               std::size_t replicas_override) {
    RunOutput out(o, "verify");
    out.config("suite", suite);
    out.config("quick", quick ? "true" : "false");
    if (replicas_override > 0) out.config("replicas_override", std::to_string(replicas_override));

    VerifyOptions vopt;
    vopt.seed = o.seed;
    vopt.threads = o.threads;
    vopt.quick = quick;
    vopt.replicas_override = replicas_override;
    const std::vector<CheckResult> results = run_verify_suite(suite, vopt);

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        nlohmann::ordered_json obj;
        obj["check_id"] = r.check_id;
        obj["statistic"] = r.statistic;
        obj["threshold"] = r.threshold;
        obj["pass"] = r.pass;
        obj["n"] = r.n;
        obj["seed"] = r.seed;
        obj["note"] = r.note;
        arr.push_back(std::move(obj));
        std::printf("[%s] %-24s statistic=%.6g threshold=%.6g n=%zu\n",
                    r.pass ? "PASS" : "FAIL", r.check_id.c_str(), r.statistic, r.threshold,
                    r.n);
        all_pass = all_pass && r.pass;
    }
    const fs::path report = out.dir() / "report.json";
    {
        std::ofstream f(report, std::ios::binary);
        if (!f) throw io_error("cannot open " + report.string());
        f << arr.dump(1) << '\n';
    }
    out.record(report);
    out.finish();
    std::printf("%s (%zu checks)\n", all_pass ? "all checks passed" : "some checks FAILED",
                results.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo laboratory for branching Brownian motion fronts"};
    app.require_subcommand(1);

    CommonOpts bbm_o, front_o, land_o, cluster_o, rho_o, verify_o;

    auto* bbm_cmd = app.add_subcommand("bbm", "simulate particle trees and export genealogy");
    double bbm_t = 5.0;
    add_common(bbm_cmd, bbm_o, 1);
    bbm_cmd->add_option("--t", bbm_t, "time horizon")->check(CLI::NonNegativeNumber);

    auto* front_cmd = app.add_subcommand("front", "extremal cluster front of simulated trees");
    double front_t = 8.5, front_eps = 0.1, front_slab = 1.0, front_smax = 8.0;
    std::size_t front_ssteps = 32;
    int front_tsteps = 16;
    std::string front_cone = "signed";
    add_common(front_cmd, front_o, 2);
    front_cmd->add_option("--t", front_t)->check(CLI::PositiveNumber);
    front_cmd->add_option("--epsilon", front_eps, "cone parameter in (0,1)");
    front_cmd->add_option("--slab-width", front_slab, "first-coordinate window width");
    front_cmd->add_option("--s-max", front_smax)->check(CLI::PositiveNumber);
    front_cmd->add_option("--s-steps", front_ssteps)->check(CLI::Range(1, 100000));
    front_cmd->add_option("--theta-steps", front_tsteps);
    front_cmd->add_option("--cone-mode", front_cone)->check(CLI::IsMember({"signed", "absolute"}));

    auto* land_cmd = app.add_subcommand("landscape", "per-clan-leader extremal snapshots");
    double land_t = 10.0, land_ell = 3.0;
    add_common(land_cmd, land_o, 2);
    land_cmd->add_option("--t", land_t)->check(CLI::PositiveNumber);
    land_cmd->add_option("--ell", land_ell, "clan depth (0 < ell < t)");

    auto* cluster_cmd = app.add_subcommand("cluster", "limiting extremal cluster samples");
    double cluster_h = 10.0, cluster_bmax = 8.0;
    std::string cluster_spine = "approximate", cluster_intensity = "rate2", cluster_grpath;
    std::int64_t cluster_rejects = 10000;
    std::size_t cluster_grrep = 400, cluster_gsteps = 160;
    double cluster_front_L = 0.0, cluster_eps = 0.1, cluster_smax = 1.0;
    std::size_t cluster_ssteps = 32;
    add_common(cluster_cmd, cluster_o, 2);
    cluster_cmd->add_option("--horizon", cluster_h)->check(CLI::NonNegativeNumber);
    cluster_cmd->add_option("--spine-mode", cluster_spine)
        ->check(CLI::IsMember({"approximate", "tilted"}));
    cluster_cmd->add_option("--intensity-mode", cluster_intensity)
        ->check(CLI::IsMember({"rate2", "tilted"}));
    cluster_cmd->add_option("--max-rejects", cluster_rejects)->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--gr-table", cluster_grpath,
                            "G table CSV path (loaded if present, else built and saved)");
    cluster_cmd->add_option("--gr-replicas", cluster_grrep)->check(CLI::Range(100, 100000000));
    cluster_cmd->add_option("--proposal-b-max", cluster_bmax)->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--grid-steps", cluster_gsteps)->check(CLI::Range(8, 1000000));
    cluster_cmd->add_option("--front-L", cluster_front_L,
                            "emit the scaled front and spine functional at this scale "
                            "instead of cluster samples");
    cluster_cmd->add_option("--epsilon", cluster_eps, "cone parameter (front mode)");
    cluster_cmd->add_option("--s-max", cluster_smax)->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--s-steps", cluster_ssteps)->check(CLI::Range(1, 100000));

    auto* rho_cmd = app.add_subcommand("rho", "limit front profile samples");
    double rho_smax = 4.0, rho_sigmin = 1e-4, rho_sighor = 0.0;
    std::size_t rho_ssteps = 64;
    int rho_ppd = 24, rho_tsteps = 16;
    bool rho_surface = false;
    add_common(rho_cmd, rho_o, 2);
    rho_cmd->add_option("--s-max", rho_smax)->check(CLI::PositiveNumber);
    rho_cmd->add_option("--s-steps", rho_ssteps)->check(CLI::Range(1, 100000));
    rho_cmd->add_option("--sigma-min", rho_sigmin)->check(CLI::PositiveNumber);
    rho_cmd->add_option("--sigma-ppd", rho_ppd)->check(CLI::Range(2, 1000));
    rho_cmd->add_option("--sigma-horizon", rho_sighor,
                        "initial sigma horizon (0: sized from s-max; extended adaptively)");
    rho_cmd->add_flag("--surface", rho_surface, "also export the revolved surface");
    rho_cmd->add_option("--theta-steps", rho_tsteps);

    auto* verify_cmd = app.add_subcommand("verify", "statistical verification suites");
    std::string verify_suite = "all";
    bool verify_quick = false;
    add_common(verify_cmd, verify_o, 1);
    verify_cmd->add_option("--suite", verify_suite)->check(CLI::IsMember(verify_suite_names()));
    verify_cmd->add_flag("--quick", verify_quick, "reduced replica counts (smoke run)");

    try {
        app.parse(argc, argv);
        if (bbm_cmd->parsed()) return run_bbm(bbm_o, bbm_t);
        if (front_cmd->parsed()) {
            if (!(front_eps > 0.0 && front_eps < 1.0))
                throw parameter_error("epsilon must lie in (0,1)");
            if (!(front_slab > 0.0)) throw parameter_error("slab-width must be positive");
            return run_front(front_o, front_t, front_eps, front_slab, front_smax, front_ssteps,
                             front_tsteps, front_cone);
        }
        if (land_cmd->parsed()) {
            if (!(land_ell > 0.0 && land_ell < land_t))
                throw parameter_error("ell must satisfy 0 < ell < t");
            return run_landscape(land_o, land_t, land_ell);
        }
        if (cluster_cmd->parsed()) {
            if (cluster_front_L > 0.0) {
                if (!(cluster_eps > 0.0 && cluster_eps < 1.0))
                    throw parameter_error("epsilon must lie in (0,1)");
                return run_cluster_front(cluster_o, cluster_front_L, cluster_eps, cluster_smax,
                                         cluster_ssteps);
            }
            return run_cluster(cluster_o, cluster_h, cluster_spine, cluster_intensity,
                               cluster_rejects, cluster_grpath, cluster_grrep, cluster_bmax,
                               cluster_gsteps);
        }
        if (rho_cmd->parsed())
            return run_rho(rho_o, rho_smax, rho_ssteps, rho_sigmin, rho_ppd, rho_sighor,
                           rho_surface, rho_tsteps);
        if (verify_cmd->parsed())
            return run_verify(verify_o, verify_suite, verify_quick,
                              verify_cmd->count("--replicas") ? verify_o.replicas : 0);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const capacity_error& e) {
        std::cerr << R"({"error":"capacity","message":")" << e.what() << "\"}\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << R"({"error":"budget","message":")" << e.what() << "\"}\n";
        return 4;
    } catch (const io_error& e) {
        std::cerr << R"({"error":"io","message":")" << e.what() << "\"}\n";
        return 5;
    } catch (const error& e) {
        std::cerr << R"({"error":"usage","message":")" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << R"({"error":"internal","message":")" << e.what() << "\"}\n";
        return 1;
    }
}
