#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

#ifndef BBMFRONT_CLI_PATH
#define BBMFRONT_CLI_PATH "./bbmfront"
#endif

int run_cli(const std::string& args, const fs::path& stderr_file = {}) {
    std::string cmd = std::string(BBMFRONT_CLI_PATH) + " " + args + " > /dev/null";
    cmd += stderr_file.empty() ? " 2> /dev/null" : " 2> " + stderr_file.string();
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("bbmfront_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("cli: identical config and seed give byte-identical artifacts") {
    const fs::path a = fresh_dir("det_a");
    const fs::path b = fresh_dir("det_b");
    const std::string common = "rho --s-max 2 --s-steps 8 --replicas 4 --seed 11 --out ";
    REQUIRE(run_cli(common + a.string()) == 0);
    REQUIRE(run_cli(common + b.string()) == 0);
    CHECK(slurp(a / "rho.csv") == slurp(b / "rho.csv"));
    CHECK(!slurp(a / "rho.csv").empty());
    CHECK(fs::exists(a / "manifest.json"));
}

TEST_CASE("cli: degenerate horizon emits a one-row tree at the origin") {
    const fs::path dir = fresh_dir("bbm0");
    REQUIRE(run_cli("bbm --dim 2 --t 0 --seed 1 --out " + dir.string()) == 0);
    const std::string csv = slurp(dir / "tree.csv");
    CHECK(csv == "replica,id,parent_id,birth_time,final_time,x1,x2\n0,0,-1,0,0,0,0\n");
}

TEST_CASE("cli: usage errors name the offending field and exit 2") {
    const fs::path dir = fresh_dir("usage");
    const fs::path err = dir / "stderr.txt";
    CHECK(run_cli("front --epsilon 1.5 --t 2 --out " + dir.string(), err) == 2);
    CHECK(slurp(err).find("epsilon") != std::string::npos);

    CHECK(run_cli("front --dim 1 --t 2 --out " + dir.string(), err) == 2);
    CHECK(slurp(err).find("dim") != std::string::npos);

    CHECK(run_cli("landscape --t 5 --ell 9 --out " + dir.string(), err) == 2);
    CHECK(slurp(err).find("ell") != std::string::npos);
}

TEST_CASE("cli: capacity violations exit with the capacity code") {
    const fs::path dir = fresh_dir("cap");
    const fs::path err = dir / "stderr.txt";
    CHECK(run_cli("bbm --dim 1 --t 40 --particle-cap 100 --seed 3 --out " + dir.string(),
                  err) == 3);
    CHECK(slurp(err).find("capacity") != std::string::npos);
}

TEST_CASE("cli: verify oracle suite reports passing checks") {
    const fs::path dir = fresh_dir("verify");
    REQUIRE(run_cli("verify --suite oracles --seed 5 --out " + dir.string()) == 0);
    const std::string report = slurp(dir / "report.json");
    CHECK(report.find("oracle_front") != std::string::npos);
    CHECK(report.find("oracle_genealogy") != std::string::npos);
    CHECK(report.find("oracle_legendre") != std::string::npos);
    CHECK(report.find("\"pass\": false") == std::string::npos);
}

TEST_CASE("cli: front artifacts follow the surface schema") {
    const fs::path dir = fresh_dir("front");
    REQUIRE(run_cli("front --dim 2 --t 4 --s-max 4 --s-steps 8 --seed 9 --out " +
                    dir.string()) == 0);
    const std::string csv = slurp(dir / "front.csv");
    CHECK(csv.rfind("s,theta_index,theta_1,height\n", 0) == 0);
}

TEST_CASE("cli: json format mirrors the csv columns") {
    const fs::path dir = fresh_dir("json");
    REQUIRE(run_cli("bbm --dim 2 --t 0 --seed 1 --format json --out " + dir.string()) == 0);
    const std::string json = slurp(dir / "tree.json");
    CHECK(json.find("\"parent_id\": \"-1\"") != std::string::npos);
    CHECK(json.find("\"x2\": \"0\"") != std::string::npos);
}

TEST_CASE("cli: scaled-front mode emits the functional and surface files") {
    const fs::path dir = fresh_dir("cfront");
    REQUIRE(run_cli("cluster --front-L 8 --dim 2 --s-max 1 --s-steps 8 --replicas 2 --seed 4 "
                    "--out " + dir.string()) == 0);
    CHECK(slurp(dir / "xl.csv").rfind("replica,s,value,argmax_sigma\n", 0) == 0);
    CHECK(fs::exists(dir / "front_r000.csv"));
    CHECK(fs::exists(dir / "front_r001.csv"));
}

TEST_CASE("cli: default output directory comes from the environment") {
    const fs::path dir = fresh_dir("envout");
    setenv("BBMFRONT_OUT", dir.string().c_str(), 1);
    REQUIRE(run_cli("bbm --dim 1 --t 0 --seed 1") == 0);
    unsetenv("BBMFRONT_OUT");
    CHECK(fs::exists(dir / "tree.csv"));
}
