// Acceptance suite: one line per quantitative criterion, nonzero exit if any
// fails. Criteria and tolerances are frozen here and in the verify module;
// the seed printed with each line reproduces the run.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bbmfront/verify.hpp"

namespace fs = std::filesystem;
using namespace bbmfront;

namespace {

#ifndef BBMFRONT_CLI_PATH
#define BBMFRONT_CLI_PATH "./bbmfront"
#endif

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Re-running a command with an identical config and seed must reproduce the
// artifacts byte for byte.
CheckResult check_cli_determinism(std::uint64_t seed) {
    CheckResult res;
    res.check_id = "determinism_artifacts";
    res.threshold = 1.0;
    res.seed = seed;
    res.n = 3;

    const fs::path base = fs::temp_directory_path() / "bbmfront_acceptance_det";
    std::error_code ec;
    fs::remove_all(base, ec);
    fs::create_directories(base);

    const std::vector<std::pair<std::string, std::string>> runs = {
        {"rho --s-max 4 --s-steps 16 --replicas 8 --seed 1", "rho.csv"},
        {"bbm --dim 2 --t 3 --replicas 3 --seed 2", "tree.csv"},
        {"front --dim 2 --t 4 --s-max 4 --s-steps 8 --replicas 2 --seed 3", "front_r001.csv"},
    };
    bool all_equal = true;
    std::size_t done = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const fs::path a = base / ("a" + std::to_string(i));
        const fs::path b = base / ("b" + std::to_string(i));
        for (const fs::path& dir : {a, b}) {
            const std::string cmd = std::string(BBMFRONT_CLI_PATH) + " " + runs[i].first +
                                    " --out " + dir.string() + " > /dev/null 2>&1";
            if (std::system(cmd.c_str()) != 0) {
                res.note = "command failed: " + runs[i].first;
                res.statistic = 0.0;
                res.pass = false;
                return res;
            }
        }
        const std::string fa = slurp(a / runs[i].second);
        all_equal = all_equal && !fa.empty() && fa == slurp(b / runs[i].second);
        ++done;
    }
    res.statistic = all_equal ? 1.0 : 0.0;
    res.pass = all_equal && done == runs.size();
    res.note = "three commands re-run with identical config and seed";
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            opt.threads = std::atoi(argv[++i]);
    }

    struct Criterion {
        const char* label;
        std::vector<CheckResult> results;
    };
    std::vector<Criterion> criteria;
    criteria.push_back({"01 profile self-similarity", check_rho_scaling(opt)});
    criteria.push_back({"02 squared-profile convexity", check_rho_convexity(opt)});
    criteria.push_back({"03 growth exponent 3/2", check_exponent(opt)});
    criteria.push_back({"04 front/spine-functional coupling", check_coupling(opt)});
    criteria.push_back({"05 max-norm centering", check_centering(opt)});
    criteria.push_back({"06 tail shape ratio", check_mallein(opt)});
    criteria.push_back({"07 crude tail bound", check_crude_tail(opt)});
    criteria.push_back({"08 occupancy front band", check_gartner(opt)});
    criteria.push_back({"09 conditioning triviality", check_conditioning(opt)});
    criteria.push_back({"10 exact oracle equivalences", check_oracles(opt)});
    criteria.push_back({"11 artifact determinism", {check_cli_determinism(opt.seed)}});

    std::size_t criteria_pass = 0, checks_pass = 0, checks_total = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        for (const auto& r : c.results) {
            std::printf("[%s] %-28s %-24s statistic=%-12.6g threshold=%-12.6g n=%zu seed=%llu\n",
                        r.pass ? "PASS" : "FAIL", c.label, r.check_id.c_str(), r.statistic,
                        r.threshold, r.n, static_cast<unsigned long long>(r.seed));
            ok = ok && r.pass;
            checks_pass += r.pass;
            ++checks_total;
        }
        criteria_pass += ok;
    }
    std::printf("acceptance: %zu/%zu criteria passed (%zu/%zu checks)\n", criteria_pass,
                criteria.size(), checks_pass, checks_total);
    return criteria_pass == criteria.size() ? 0 : 1;
}
