#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "heatplate/cli.hpp"

using namespace heatplate;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "heatplate");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const char* base = std::getenv("HEATPLATE_TEST_TMP");
    fs::path dir = fs::path(base ? base : fs::temp_directory_path().string()) / name;
    fs::remove_all(dir);
    fs::create_directories(dir.parent_path());
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("version") {
    const auto r = run_cli({"version"});
    CHECK(r.status == 0);
    CHECK(r.out == std::string("heatplate ") + kVersion + "\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).status == kExitUsage);
    CHECK(run_cli({"frobnicate"}).status == kExitUsage);
    CHECK(run_cli({"run", "--bogus"}).status == kExitUsage);
    CHECK(run_cli({"run", "--scenario", "3", "--out", "x"}).status == kExitUsage);
    CHECK(run_cli({"check", "--scenario", "1", "--config", "a.json"}).status == kExitUsage);
    CHECK(run_cli({"check", "--grid", "100by40"}).status == kExitUsage);
    CHECK(run_cli({"check", "--config", "/nonexistent/cfg.json"}).status == kExitUsage);
    CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("check prints the stability advisory") {
    const auto r = run_cli({"check", "--scenario", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("dt=0.001") != std::string::npos);
    CHECK(r.out.find("stability_limit=0.0027") != std::string::npos);
    CHECK(r.out.find("within limit") != std::string::npos);

    const auto big = run_cli({"check", "--scenario", "1", "--dt", "0.05"});
    CHECK(big.status == 0);
    CHECK(big.out.find("EXCEEDS") != std::string::npos);
}

TEST_CASE("config file with an invalid value") {
    const fs::path dir = scratch("badcfg");
    fs::create_directories(dir);
    std::ofstream(dir / "cfg.json") << R"({"grid":{"J":1}})";
    const auto r = run_cli({"check", "--config", (dir / "cfg.json").string()});
    CHECK(r.status == kExitUsage);
    CHECK(r.err.find("grid.J") != std::string::npos);
}

TEST_CASE("run writes the output set") {
    const fs::path dir = scratch("small_run");
    const fs::path cfg_dir = scratch("small_cfg");
    fs::create_directories(cfg_dir);
    std::ofstream(cfg_dir / "cfg.json")
        << R"({"grid":{"J":20,"K":8},"time":{"t_final":0.5,"snapshot_stride":100,"signal_stride":10}})";
    const auto r = run_cli({"run", "--config", (cfg_dir / "cfg.json").string(), "--out",
                            dir.string(), "--render"});
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("summary: ", 0) == 0);
    CHECK(r.out.find("dominant_mode=") != std::string::npos);
    for (const char* f : {"final_field.csv", "signals.csv", "heatmap.pgm", "config.json",
                          "snapshot_0000.csv", "snapshot_0005.csv"})
        CHECK(fs::exists(dir / f));
    CHECK(!fs::exists(dir / "snapshot_0006.csv"));
    CHECK(fs::file_size(dir / "heatmap.pgm") == std::string("P5\n20 8\n255\n").size() + 160);

    // 51 logged instants plus the header
    const auto signals = slurp(dir / "signals.csv");
    CHECK(std::count(signals.begin(), signals.end(), '\n') == 52);
}

TEST_CASE("grid and time overrides") {
    const fs::path dir = scratch("override_run");
    const auto r = run_cli({"run", "--scenario", "2", "--grid", "10x4", "--t-final", "0.01",
                            "--out", dir.string()});
    REQUIRE(r.status == 0);
    const auto field = slurp(dir / "final_field.csv");
    CHECK(std::count(field.begin(), field.end(), '\n') == 41);
    CHECK(!fs::exists(dir / "heatmap.pgm"));
}

TEST_CASE("divergence exits with 1 and reports the step") {
    const fs::path dir = scratch("diverge");
    const auto r = run_cli({"run", "--scenario", "1", "--dt", "0.05", "--out", dir.string()});
    CHECK(r.status == kExitDiverged);
    CHECK(r.err.find("diverged at step") != std::string::npos);
    CHECK(r.err.find("warning: dt=0.05") != std::string::npos);
}
