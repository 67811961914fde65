#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_rng.hpp"
#include "zhvdp/analysis.hpp"
#include "zhvdp/errors.hpp"
#include "zhvdp/io.hpp"

using namespace zhvdp;
using zhvdp_test::TestRng;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "zhvdp_io_test";
    fs::create_directories(dir);
    return dir;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& file) {
    std::ifstream in(file);
    REQUIRE(in.good());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("g17 formatting round-trips doubles exactly") {
    TestRng rng(81);
    for (int it = 0; it < 500; ++it) {
        double v = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-30, 30));
        if (it % 17 == 0) v = 1.0 / 3.0;
        if (it % 23 == 0) v = -0.0;
        const std::string s = format_g17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("bundled configs load and round-trip") {
    const fs::path cfgdir(ZHVDP_CONFIG_DIR);
    const RunConfig rc = load_run_config(cfgdir / "caseI.json");
    CHECK(rc.oscillator.epsilon == 0.3);
    CHECK(rc.oscillator.a == 0.1);
    CHECK(rc.oscillator.g11 == -0.4);
    CHECK(rc.histories.size() == 4);

    const fs::path tmp = temp_dir() / "roundtrip.json";
    std::ofstream(tmp) << run_config_to_json(rc);
    const RunConfig rc2 = load_run_config(tmp);
    CHECK(rc2.oscillator.g12 == rc.oscillator.g12);
    CHECK(rc2.mu1 == rc.mu1);
    CHECK(rc2.t_end == rc.t_end);
    CHECK(rc2.histories.size() == rc.histories.size());

    for (const char* name : {"caseII.json", "caseIII.json", "pm1.json", "pm2.json", "pm3.json",
                             "pm4.json", "pm5.json", "pm6.json"}) {
        CHECK_NOTHROW(load_run_config(cfgdir / name));
    }
}

TEST_CASE("config validation errors") {
    const fs::path dir = temp_dir();
    const auto write_and_load = [&](const std::string& body) {
        const fs::path f = dir / "bad.json";
        std::ofstream(f) << body;
        return load_run_config(f);
    };
    CHECK_THROWS_AS(write_and_load("{}"), config_error);
    CHECK_THROWS_AS(write_and_load("{\"oscillator\": {\"a\": 0.1}}"), config_error);
    CHECK_THROWS_AS(write_and_load("{\"oscillator\": {\"epsilon\": \"x\", \"a\": 0.1}}"),
                    config_error);
    CHECK_THROWS_AS(
        write_and_load("{\"oscillator\": {\"epsilon\": 0.3, \"a\": 0.1}, \"format\": \"xml\"}"),
        config_error);
    CHECK_THROWS_AS(
        write_and_load(
            "{\"oscillator\": {\"epsilon\": 0.3, \"a\": 0.1}, \"histories\": [[1.0]]}"),
        config_error);
    CHECK_THROWS_AS(write_and_load("not json at all"), config_error);
    CHECK_THROWS_AS(load_run_config(dir / "does_not_exist.json"), config_error);
}

TEST_CASE("trajectory and projected CSV schemas round-trip") {
    const fs::path dir = temp_dir();
    Trajectory traj;
    traj.step = 0.5;
    traj.delay = 1.0;
    traj.stepsPerDelay = 2;
    traj.states = {{1.0 / 3.0, -2.0e-17}, {0.1, 0.2}, {-7.25, 1e300}, {0.0, -0.0}, {3.5, 4.5}};
    write_trajectory_csv(dir / "traj.csv", traj, 1);
    const auto rows = read_csv(dir / "traj.csv");
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"t", "x", "xdot"});
    CHECK(std::strtod(rows[1][1].c_str(), nullptr) == 1.0 / 3.0);
    CHECK(std::strtod(rows[3][2].c_str(), nullptr) == 1e300);

    ProjectedPath p;
    p.omega0 = 1.4;
    p.t = {0.0, 0.1};
    p.r = {0.3, 1.0 / 7.0};
    p.z = {-0.1, 0.2};
    p.xi = {0.0, 1.5};
    p.x1_re = {0.25, -0.5};
    p.x1_im = {0.0, 1e-20};
    p.x3 = {-0.1, 0.2};
    write_projected_csv(dir / "proj.csv", p);
    const auto prows = read_csv(dir / "proj.csv");
    REQUIRE(prows.size() == 3);
    CHECK(prows[0] == std::vector<std::string>{"t", "r", "z", "xi", "r_smooth", "z_smooth",
                                               "x1_re", "x1_im", "x3"});
    CHECK(std::strtod(prows[2][1].c_str(), nullptr) == 1.0 / 7.0);
    // without smoothing the smooth columns mirror the raw ones
    CHECK(prows[1][4] == prows[1][1]);
}

TEST_CASE("analysis kv document is deterministic and 17-digit") {
    OscillatorConfig c;
    c.epsilon = 0.3;
    c.a = 0.1;
    c.b = 1.0;
    c.tau = 2.06;
    c.g11 = -0.4;
    c.g12 = 0.2;
    c.g22 = 0.4;
    const auto kv1 = report_kv(run_analysis(c));
    const auto kv2 = report_kv(run_analysis(c));
    REQUIRE(kv1.size() == kv2.size());
    for (std::size_t i = 0; i < kv1.size(); ++i) {
        CHECK(kv1[i].first == kv2[i].first);
        CHECK(kv1[i].second == kv2[i].second);
    }
    bool found = false;
    for (const auto& [k, v] : kv1) {
        if (k == "unfolding.A") {
            CHECK(std::strtod(v.c_str(), nullptr) ==
                  doctest::Approx(-1.2850525585716512).epsilon(1e-15));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("analysis gate on the linear position coefficient") {
    OscillatorConfig c;
    c.epsilon = 0.3;
    c.a = 0.1;
    c.b = 0.9;
    c.tau = 2.06;
    try {
        run_analysis(c);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()) == "criticality requires b = 1");
    }
}

TEST_CASE("manifest records the run and its determinism hash") {
    const fs::path dir = temp_dir();
    RunConfig rc;
    rc.oscillator.epsilon = 0.3;
    rc.oscillator.a = 0.1;
    rc.oscillator.tau = 2.06;
    rc.oscillator.g11 = -0.4;
    rc.histories = {{0.1, 0.0}};
    SimulationOutcome oc;
    oc.history_index = 0;
    oc.hash = 0xdeadbeefULL;
    oc.trajectory_file = "traj_0.csv";
    oc.projected_file = "proj_0.csv";
    write_manifest(dir / "manifest.json", rc, {oc});
    std::ifstream in(dir / "manifest.json");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    CHECK(text.find("00000000deadbeef") != std::string::npos);
    CHECK(text.find("traj_0.csv") != std::string::npos);
    CHECK(text.find("\"epsilon\": 0.3") != std::string::npos);
}
