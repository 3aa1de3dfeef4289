#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "firefly/analysis.hpp"
#include "firefly/dynamics.hpp"
#include "firefly/graph.hpp"
#include "firefly/graph_io.hpp"
#include "firefly/serialize.hpp"
#include "firefly/stochastic.hpp"
#include "json.hpp"

using namespace firefly;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(FIREFLY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

std::filesystem::path scratch_dir() {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "firefly_cli_scratch";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("configuration literals") {
    const Configuration x = parse_config_literal("2,5", 6);
    CHECK(x.period == 6);
    CHECK(x.states == std::vector<int>{2, 5});
    CHECK(parse_config_literal("0,0,0", 3).states == std::vector<int>{0, 0, 0});
    CHECK_THROWS(parse_config_literal("", 6));
    CHECK_THROWS(parse_config_literal("2,,5", 6));
    CHECK_THROWS(parse_config_literal("2,a", 6));
    // range and length checking is the validator's job, not the parser's
    const Graph p2 = make_path(2);
    CHECK_THROWS(validate(p2, parse_config_literal("9,0", 6)));
    CHECK_THROWS(validate(p2, parse_config_literal("-1,0", 6)));
    CHECK_THROWS(validate(p2, parse_config_literal("1,2,3", 6)));
}

TEST_CASE("trace serialization") {
    const Graph p2 = make_path(2);
    const Orbit orbit = compute_orbit(p2, Configuration{6, {2, 5}});
    const json trace = trace_json(p2, orbit);
    CHECK(trace["graph"]["vertices"] == 2);
    CHECK(trace["graph"]["edges"] == json::array({{0, 1}}));
    CHECK(trace["n"] == 6);
    CHECK(trace["b"] == 2);
    CHECK(trace["truncated"] == false);
    CHECK(trace["transient"] == 13);
    CHECK(trace["period"] == 6);
    CHECK(trace["sync_time"] == 13);
    CHECK(trace["steps"].size() == static_cast<std::size_t>(orbit.length()));
    CHECK(trace["steps"][0] == json::array({2, 5}));
    CHECK(trace["pulls"][0] == json::array({0, 0, 1}));
    CHECK(trace["blinks"]["0"][0] == 0);

    const Orbit rotating = compute_orbit(make_complete(3), Configuration{5, {0, 2, 4}});
    const json rotating_trace = trace_json(make_complete(3), rotating);
    CHECK(rotating_trace["sync_time"].is_null());

    // identical computations must serialize to identical bytes
    const Orbit again = compute_orbit(p2, Configuration{6, {2, 5}});
    CHECK(trace_json(p2, orbit).dump(2) == trace_json(p2, again).dump(2));
}

TEST_CASE("csv and dot exports") {
    const Graph p2 = make_path(2);
    const Orbit orbit = compute_orbit(p2, Configuration{6, {2, 5}});
    const std::string csv = orbit_csv(orbit);
    CHECK(csv.rfind("t,state_0,state_1\n0,2,5\n", 0) == 0);
    const auto lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == static_cast<std::size_t>(orbit.length()) + 1);

    const std::string dot = dot_frame(p2, Configuration{6, {2, 5}});
    CHECK(dot.find("graph {") != std::string::npos);
    CHECK(dot.find("0 [label=\"0:2\"]") != std::string::npos);
    CHECK(dot.find("1 [label=\"1:5\"]") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("report serializers carry their verdict fields") {
    const json sync = sync_report_json(is_n_synchronizing(make_path(2), 3));
    CHECK(sync["synchronizing"] == true);
    CHECK(sync["configs_checked"] == 9);
    CHECK(sync["witness"].is_null());

    const Graph p2 = make_path(2);
    const json chain = chain_json(build_and_analyze_chain(p2, 3, uniform_edge_noise(p2, 0.5)));
    CHECK(chain["state_count"] == 7);
    CHECK(chain["sync_unique_absorbing"] == true);
    CHECK(chain["expected_steps"].size() == 6);

    const json ensemble = ensemble_json(
        mc_ensemble(p2, Configuration{3, {0, 1}}, uniform_edge_noise(p2, 0.5), 10, 7, 1000));
    CHECK(ensemble["runs"] == 10);
    CHECK(ensemble["base_seed"] == 7);
    CHECK(ensemble["cap"] == 1000);
}

TEST_CASE("cli: simulate") {
    const auto dir = scratch_dir();
    const std::string trace_path = (dir / "trace.json").string();
    const std::string csv_path = (dir / "orbit.csv").string();
    const std::string frames_prefix = (dir / "frames" / "step").string();
    const CliResult r = run_cli("simulate --family path:2 --n 6 --config 2,5 --trace " +
                                trace_path + " --csv " + csv_path + " --dot-frames " +
                                frames_prefix);
    REQUIRE(r.exit_code == 0);
    const json trace = json::parse(r.output);
    CHECK(trace["sync_time"] == 13);
    CHECK(trace["transient"] == 13);
    CHECK(trace["period"] == 6);
    CHECK(slurp(trace_path) == r.output);
    CHECK(slurp(csv_path).rfind("t,state_0,state_1\n0,2,5\n", 0) == 0);
    const std::string first_frame = slurp(dir / "frames" / "step_00000.dot");
    CHECK(first_frame.find("0 [label=\"0:2\"]") != std::string::npos);

    const CliResult again = run_cli("simulate --family path:2 --n 6 --config 2,5");
    const CliResult once_more = run_cli("simulate --family path:2 --n 6 --config 2,5");
    CHECK(again.exit_code == 0);
    CHECK(again.output == once_more.output);
}

TEST_CASE("cli: exit codes split pass, verdict failure, and usage error") {
    CHECK(run_cli("check-sync --family path:3 --n 4").exit_code == 0);
    CHECK(run_cli("check-sync --family star:4 --n 4").exit_code == 2);
    CHECK(run_cli("simulate --family path:2").exit_code == 1);           // missing flags
    CHECK(run_cli("frobnicate").exit_code == 1);                         // unknown subcommand
    CHECK(run_cli("simulate --family path:2 --n 6 --config 2,a").exit_code == 1);
    CHECK(run_cli("simulate --family path:2 --n 6 --config 9,0").exit_code == 1);
    CHECK(run_cli("simulate --family blob:3 --n 6 --config 2,5").exit_code == 1);
}

TEST_CASE("cli: sweep verdicts") {
    const CliResult sync = run_cli("check-sync --family star:4 --n 4");
    const json report = json::parse(sync.output);
    CHECK(report["synchronizing"] == false);
    CHECK_FALSE(report["witness"].is_null());
    CHECK(report["configs_checked"] == 1024);  // the 4-leaf star has five vertices

    const CliResult bounds = run_cli("path-bounds --n 3 --m 3");
    CHECK(bounds.exit_code == 0);
    CHECK(json::parse(bounds.output)["within_upper_bound"] == true);
}

TEST_CASE("cli: verify-tree emits csv") {
    const CliResult r = run_cli("verify-tree --n 4 --max-vertices 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("tree,n,max_degree,verdict,max_sync_time", 0) == 0);
    CHECK(r.output.find("synchronizing") != std::string::npos);
    const CliResult as_json = run_cli("verify-tree --n 4 --max-vertices 5 --json");
    CHECK(as_json.exit_code == 0);
    CHECK(json::parse(as_json.output)["pass"] == true);
}

TEST_CASE("cli: theorem spot checks") {
    const CliResult blink = run_cli("verify-blinking --family path:3 --n 4");
    CHECK(blink.exit_code == 0);
    CHECK(json::parse(blink.output)["equivalence_holds"] == true);

    const CliResult degree = run_cli("verify-degree --family star:2 --n 3 --vertex 0");
    CHECK(degree.exit_code == 0);
    CHECK(json::parse(degree.output)["pass"] == true);

    const CliResult quot = run_cli("quotient --family star:2 --n 6 --config 5,2,2");
    CHECK(quot.exit_code == 0);
    const json quotient = json::parse(quot.output);
    CHECK(quotient["path_config"] == json::array({2, 5}));
    CHECK(quotient["class_of"] == json::array({1, 0, 0}));

    const CliResult branch = run_cli("branch-width --family path:4 --n 6 --config 3,3,0,5");
    CHECK(branch.exit_code == 0);
    CHECK(json::parse(branch.output)["all_pass"] == true);

    const CliResult irr = run_cli("irreducible --family complete:3 --n 5 --config 0,2,4");
    CHECK(irr.exit_code == 0);
    CHECK(json::parse(irr.output)["irreducible"] == true);

    const CliResult cls = run_cli("classify --family path:2 --n 6 --config 2,5 --center 0");
    CHECK(cls.exit_code == 0);
    CHECK(json::parse(cls.output)["center_ever_blinks"] == true);

    const CliResult diag = run_cli("diagnose-relative --family path:2 --n 6");
    CHECK(diag.exit_code == 0);
    const json diagnosis = json::parse(diag.output);
    CHECK(diagnosis["derived_matches_absolute"] == true);
    CHECK(diagnosis["configs_checked"] == 36);
}

TEST_CASE("cli: randomized variant") {
    const std::string mc_args =
        "mc --family complete:3 --n 5 --config 0,2,4 --p 0.5 --runs 64 --seed 7 --cap 100000";
    const CliResult serial = run_cli(mc_args);
    CHECK(serial.exit_code == 0);
    const json ensemble = json::parse(serial.output);
    CHECK(ensemble["runs"] == 64);
    CHECK(ensemble["absorbed"] == 64);
    CHECK(run_cli(mc_args).output == serial.output);
    CHECK(run_cli(mc_args + " --jobs 3").output == serial.output);

    const CliResult chain = run_cli("chain --family path:2 --n 3 --p 0.5");
    CHECK(chain.exit_code == 0);
    const json chain_report = json::parse(chain.output);
    CHECK(chain_report["state_count"] == 7);
    CHECK(chain_report["reaches_sync_from_all"] == true);
}

TEST_CASE("cli: generation is seed-deterministic") {
    const CliResult a = run_cli("gen --vertices 5 --seed 3");
    const CliResult b = run_cli("gen --vertices 5 --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.rfind("n 5", 0) == 0);
    const CliResult dot = run_cli("gen --vertices 4 --seed 1 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph {") != std::string::npos);
}

TEST_CASE("cli: bundled scenarios") {
    const CliResult k3 = run_cli("paper-examples k3-three-states --q 2");
    CHECK(k3.exit_code == 0);
    const json k3_report = json::parse(k3.output);
    CHECK(k3_report["synchronized"] == false);
    CHECK(k3_report["cycle_length"] == 6);

    const CliResult fig8 = run_cli("paper-examples fig8-path");
    CHECK(fig8.exit_code == 0);
    const json fig8_report = json::parse(fig8.output);
    CHECK(fig8_report["synchronized"] == true);
    CHECK(fig8_report["predicted_x2"] == 120);

    const CliResult hub = run_cli("counterexample high-degree-tree");
    CHECK(hub.exit_code == 0);
    const json hub_report = json::parse(hub.output);
    CHECK(hub_report["synchronized"] == false);
    CHECK(hub_report["hub_blinks"] == false);

    const CliResult star = run_cli("paper-examples n7-star");
    CHECK(star.exit_code == 0);
    const json star_report = json::parse(star.output);
    CHECK(star_report["verified"] == true);
    CHECK(star_report["configs_checked"] == 16807);
}
