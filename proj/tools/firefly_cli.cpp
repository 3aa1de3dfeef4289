#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "firefly/analysis.hpp"
#include "firefly/dynamics.hpp"
#include "firefly/generate.hpp"
#include "firefly/graph.hpp"
#include "firefly/graph_io.hpp"
#include "firefly/rng.hpp"
#include "firefly/serialize.hpp"
#include "firefly/stochastic.hpp"
#include "json.hpp"

namespace {

using firefly::Configuration;
using firefly::Graph;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
    const std::filesystem::path target(path);
    if (target.has_parent_path()) {
        std::filesystem::create_directories(target.parent_path());
    }
    std::ofstream out(target);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

firefly::NoiseModel make_noise(const Graph& g, const std::string& mode, double p) {
    if (mode == "edge") return firefly::uniform_edge_noise(g, p);
    if (mode == "vertex") return firefly::uniform_vertex_noise(g, p);
    throw std::invalid_argument("unknown noise mode: " + mode);
}

std::optional<long long> cap_from_budget(long long budget) {
    if (budget <= 0) return std::nullopt;
    return budget;
}

struct SimulateOpts {
    std::string graph_arg;
    int period = 0;
    std::string config;
    long long budget = 0;  // 0 = automatic cap
    std::string trace_path;
    std::string csv_path;
    std::string dot_prefix;
};

int run_simulate(const SimulateOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const Configuration x0 = firefly::parse_config_literal(o.config, o.period);
    firefly::validate(g, x0);
    const firefly::Orbit orbit = firefly::compute_orbit(g, x0, cap_from_budget(o.budget));
    const json trace = firefly::trace_json(g, orbit);
    if (!o.trace_path.empty()) write_text_file(o.trace_path, trace.dump(2) + "\n");
    if (!o.csv_path.empty()) write_text_file(o.csv_path, firefly::orbit_csv(orbit));
    if (!o.dot_prefix.empty()) {
        for (std::size_t t = 0; t < orbit.trajectory.size(); ++t) {
            char suffix[32];
            std::snprintf(suffix, sizeof suffix, "_%05zu.dot", t);
            write_text_file(o.dot_prefix + suffix, firefly::dot_frame(g, orbit.trajectory[t]));
        }
    }
    emit(trace);
    return kExitPass;
}

struct CheckSyncOpts {
    std::string graph_arg;
    int period = 0;
    std::uint64_t budget = 10'000'000;
    int jobs = 1;
};

int run_check_sync(const CheckSyncOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const firefly::SyncReport report =
        firefly::is_n_synchronizing(g, o.period, o.budget, o.jobs, nullptr, o.graph_arg);
    emit(firefly::sync_report_json(report));
    return report.synchronizing ? kExitPass : kExitFail;
}

struct PathBoundsOpts {
    int period = 0;
    int vertex_count = 0;
    std::uint64_t budget = 10'000'000;
    int jobs = 1;
};

int run_path_bounds(const PathBoundsOpts& o) {
    const firefly::PathBoundsReport report =
        firefly::max_sync_time_path(o.period, o.vertex_count, o.budget, o.jobs);
    emit(firefly::path_bounds_json(report));
    const bool pass = report.within_upper_bound && !report.non_sync_witness.has_value();
    return pass ? kExitPass : kExitFail;
}

struct VerifyTreeOpts {
    int period = 0;
    int max_vertices = 0;
    std::uint64_t budget = 10'000'000;
    int jobs = 1;
    bool as_json = false;
};

int run_verify_tree(const VerifyTreeOpts& o) {
    const firefly::TreeTheoremReport report =
        firefly::verify_tree_theorem(o.period, o.max_vertices, o.budget, o.jobs);
    if (o.as_json) {
        emit(firefly::tree_theorem_json(report));
    } else {
        std::cout << firefly::tree_theorem_csv(report);
    }
    return report.pass ? kExitPass : kExitFail;
}

struct VerifyBlinkingOpts {
    std::string graph_arg;
    int period = 0;
    std::uint64_t budget = 10'000'000;
    int jobs = 1;
};

int run_verify_blinking(const VerifyBlinkingOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const firefly::BlinkingTheoremReport report =
        firefly::verify_blinking_theorem(g, o.period, o.budget, o.jobs, nullptr, o.graph_arg);
    emit(firefly::blinking_theorem_json(report));
    return report.equivalence_holds ? kExitPass : kExitFail;
}

struct VerifyDegreeOpts {
    std::string graph_arg;
    int period = 0;
    int vertex = 0;
    std::uint64_t budget = 10'000'000;
    int jobs = 1;
    std::uint64_t samples = 0;  // 0 = exhaustive
    std::uint64_t seed = 0;
};

int run_verify_degree(const VerifyDegreeOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const firefly::DegreeLemmaReport report =
        o.samples == 0
            ? firefly::verify_degree_lemma(g, o.period, o.vertex, o.budget, o.jobs, nullptr,
                                           o.graph_arg)
            : firefly::verify_degree_lemma_sampled(g, o.period, o.vertex, o.samples, o.seed,
                                                   nullptr, o.graph_arg);
    emit(firefly::degree_lemma_json(report));
    return report.pass ? kExitPass : kExitFail;
}

struct ClassifyOpts {
    std::string graph_arg;
    int period = 0;
    std::string config;
    int center = 0;
    long long budget = 0;
};

int run_classify(const ClassifyOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const Configuration x0 = firefly::parse_config_literal(o.config, o.period);
    firefly::validate(g, x0);
    const firefly::ReturnMapReport report =
        firefly::return_map(g, x0, o.center, cap_from_budget(o.budget));
    emit(firefly::return_map_json(report));
    return kExitPass;
}

struct IrreducibleOpts {
    std::string graph_arg;
    int period = 0;
    std::string config;
    long long budget = 0;
};

int run_irreducible(const IrreducibleOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const Configuration x0 = firefly::parse_config_literal(o.config, o.period);
    firefly::validate(g, x0);
    const firefly::IrreducibilityReport report =
        firefly::is_irreducible(g, x0, cap_from_budget(o.budget));
    emit(firefly::irreducibility_json(report));
    return kExitPass;
}

struct QuotientOpts {
    std::string graph_arg;
    int period = 0;
    std::string config;
};

int run_quotient(const QuotientOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const Configuration x0 = firefly::parse_config_literal(o.config, o.period);
    firefly::validate(g, x0);
    const firefly::QuotientReport report = firefly::two_state_quotient(g, x0);
    emit(firefly::quotient_json(report));
    return report.class_adjacency_ok ? kExitPass : kExitFail;
}

struct BranchWidthOpts {
    std::string graph_arg;
    int period = 0;
    std::string config;
    int branch_index = 0;
    long long budget = 0;
};

int run_branch_width(const BranchWidthOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const Configuration x0 = firefly::parse_config_literal(o.config, o.period);
    firefly::validate(g, x0);
    const std::vector<firefly::Star> stars = firefly::find_stars_and_branches(g);
    if (o.branch_index < 0 || o.branch_index >= static_cast<int>(stars.size())) {
        throw std::invalid_argument("graph has " + std::to_string(stars.size()) +
                                    " stars; --branch out of range");
    }
    const firefly::BranchWidthReport report =
        firefly::verify_branch_width(g, stars[o.branch_index], x0, cap_from_budget(o.budget));
    emit(firefly::branch_width_json(report));
    return report.all_pass ? kExitPass : kExitFail;
}

struct McOpts {
    std::string graph_arg;
    int period = 0;
    std::string config;
    double p = 0.5;
    std::string mode = "edge";
    std::uint64_t runs = 10'000;
    std::uint64_t seed = 0;
    long long cap = 100'000;
    int jobs = 1;
};

int run_mc(const McOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const Configuration x0 = firefly::parse_config_literal(o.config, o.period);
    firefly::validate(g, x0);
    const firefly::EnsembleReport report = firefly::mc_ensemble(
        g, x0, make_noise(g, o.mode, o.p), o.runs, o.seed, o.cap, o.jobs);
    emit(firefly::ensemble_json(report));
    return kExitPass;
}

struct ChainOpts {
    std::string graph_arg;
    int period = 0;
    double p = 0.5;
    std::string mode = "edge";
    std::uint64_t state_gate = 20'000;
    std::uint64_t mask_gate = 1'048'576;
};

int run_chain(const ChainOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    const firefly::ChainReport report = firefly::build_and_analyze_chain(
        g, o.period, make_noise(g, o.mode, o.p), o.state_gate, o.mask_gate);
    emit(firefly::chain_json(report));
    const bool pass = report.sync_unique_absorbing && report.reaches_sync_from_all &&
                      report.solved && report.solver_residual < 1e-9;
    return pass ? kExitPass : kExitFail;
}

struct GenOpts {
    int vertex_count = 0;
    double extra_edge_prob = 0.0;
    std::uint64_t seed = 0;
    std::string format = "edgelist";
};

int run_gen(const GenOpts& o) {
    firefly::SplitMix64 rng(o.seed);
    const Graph g = firefly::random_connected_graph(rng, o.vertex_count, o.extra_edge_prob);
    if (o.format == "edgelist") {
        std::cout << firefly::to_edge_list(g);
    } else if (o.format == "json") {
        std::cout << firefly::graph_to_json(g) << "\n";
    } else if (o.format == "dot") {
        std::cout << firefly::to_dot(g);
    } else {
        throw std::invalid_argument("unknown format: " + o.format);
    }
    return kExitPass;
}

struct HighDegreeTreeOpts {
    std::string graph_arg = "star:6";
    int period = 6;
    long long budget = 0;
};

int run_high_degree_tree(const HighDegreeTreeOpts& o) {
    const Graph tree = firefly::load_graph_argument(o.graph_arg);
    const firefly::CounterexampleInstance instance =
        firefly::high_degree_tree_counterexample(tree, o.period);
    int hub = -1;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (tree.degree(v) >= o.period) {
            hub = v;
            break;
        }
    }
    const firefly::Orbit orbit =
        firefly::compute_orbit(instance.graph, instance.config, cap_from_budget(o.budget));
    const bool synchronized = orbit.sync_time.has_value();
    const bool hub_blinks = firefly::blinks_infinitely(orbit, hub);
    json payload;
    payload["scenario"] = instance.kind;
    payload["graph"] = firefly::graph_json(instance.graph);
    payload["n"] = o.period;
    payload["config"] = instance.config.states;
    payload["hub"] = hub;
    payload["synchronized"] = synchronized;
    payload["hub_blinks"] = hub_blinks;
    payload["cycle_length"] = orbit.cycle_length;
    emit(payload);
    return (!synchronized && !hub_blinks) ? kExitPass : kExitFail;
}

struct K3Opts {
    int q = 2;
};

int run_k3_three_states(const K3Opts& o) {
    const firefly::CounterexampleInstance instance = firefly::k3_three_state_counterexample(o.q);
    const firefly::Orbit orbit = firefly::compute_orbit(instance.graph, instance.config);
    const bool synchronized = orbit.sync_time.has_value();
    json payload;
    payload["scenario"] = instance.kind;
    payload["graph"] = firefly::graph_json(instance.graph);
    payload["n"] = instance.config.period;
    payload["q"] = o.q;
    payload["config"] = instance.config.states;
    payload["synchronized"] = synchronized;
    payload["transient"] = orbit.transient_length;
    payload["cycle_length"] = orbit.cycle_length;
    emit(payload);
    return synchronized ? kExitFail : kExitPass;
}

struct Fig8Opts {
    int period = 6;
    int vertex_count = 8;
    long long budget = 0;
};

int run_fig8_path(const Fig8Opts& o) {
    const Graph g = firefly::make_path(o.vertex_count);
    Configuration x0{o.period, std::vector<int>(o.vertex_count, o.period - 1)};
    x0.states[0] = firefly::blinking_state(o.period);
    const firefly::Orbit orbit = firefly::compute_orbit(g, x0, cap_from_budget(o.budget));
    const bool synchronized = orbit.sync_time.has_value();
    // closed-form estimate period*(period/2 - 1 + m), doubled to stay integral
    const long long predicted_x2 =
        static_cast<long long>(o.period) * (o.period - 2 + 2LL * o.vertex_count);
    json payload;
    payload["scenario"] = "fig8-path";
    payload["graph"] = firefly::graph_json(g);
    payload["n"] = o.period;
    payload["config"] = x0.states;
    payload["synchronized"] = synchronized;
    payload["sync_time"] = synchronized ? json(*orbit.sync_time) : json(nullptr);
    payload["predicted_x2"] = predicted_x2;
    payload["measured_x2"] = synchronized ? json(2 * *orbit.sync_time) : json(nullptr);
    payload["matches_prediction"] =
        synchronized && 2 * *orbit.sync_time == predicted_x2;
    emit(payload);
    return synchronized ? kExitPass : kExitFail;
}

struct N7StarOpts {
    int leaf_count = 4;
    int period = 7;
    int jobs = 1;
};

int run_n7_star(const N7StarOpts& o) {
    const firefly::StarSearchResult search =
        firefly::star_all_blinking_search(o.leaf_count, o.period, o.jobs);
    bool verified = false;
    json witness = nullptr;
    if (search.witness) {
        const firefly::Orbit orbit = firefly::compute_orbit(search.graph, *search.witness);
        bool all_blink = true;
        for (int v = 0; v < search.graph.vertex_count(); ++v) {
            all_blink = all_blink && firefly::blinks_infinitely(orbit, v);
        }
        verified = all_blink && !orbit.sync_time.has_value();
        witness = search.witness->states;
    }
    json payload;
    payload["scenario"] = "n7-star";
    payload["graph"] = firefly::graph_json(search.graph);
    payload["n"] = search.period;
    payload["configs_checked"] = search.configs_checked;
    payload["witness"] = witness;
    payload["witness_source"] = search.witness ? json("search") : json(nullptr);
    payload["verified"] = verified;
    emit(payload);
    return (search.witness && verified) ? kExitPass : kExitFail;
}

struct DiagnoseRelativeOpts {
    std::string graph_arg;
    int period = 0;
    std::string config;  // empty = exhaustive over all configurations
    long long steps = 64;
};

struct DivergenceTally {
    bool derived_matches_absolute = true;
    long long literal_divergences = 0;
    std::optional<long long> first_divergence_time;
    std::optional<std::vector<int>> first_divergence_state;
};

void tally_one(const Graph& g, const Configuration& x0, long long steps, DivergenceTally& tally) {
    Configuration x = x0;
    firefly::RelativeConfiguration derived = firefly::to_relative(x0, 0);
    firefly::RelativeConfiguration literal = derived;
    for (long long t = 0; t < steps; ++t) {
        x = firefly::step(g, x).next;
        derived = firefly::step_relative(g, derived);
        literal = firefly::step_relative_literal(g, literal);
        if (firefly::to_relative(x, t + 1).states != derived.states) {
            tally.derived_matches_absolute = false;
        }
        if (derived.states != literal.states) {
            ++tally.literal_divergences;
            if (!tally.first_divergence_time) {
                tally.first_divergence_time = t + 1;
                tally.first_divergence_state = x0.states;
            }
            break;  // frames disagree from here on; count configs, not steps
        }
    }
}

int run_diagnose_relative(const DiagnoseRelativeOpts& o) {
    const Graph g = firefly::load_graph_argument(o.graph_arg);
    DivergenceTally tally;
    std::uint64_t configs = 0;
    if (!o.config.empty()) {
        const Configuration x0 = firefly::parse_config_literal(o.config, o.period);
        firefly::validate(g, x0);
        tally_one(g, x0, o.steps, tally);
        configs = 1;
    } else {
        std::uint64_t total = 1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            total *= static_cast<std::uint64_t>(o.period);
            if (total > 50'000) throw std::invalid_argument("state space too large; pass --config");
        }
        for (std::uint64_t index = 0; index < total; ++index) {
            Configuration x0{o.period, std::vector<int>(g.vertex_count(), 0)};
            std::uint64_t rest = index;
            for (int v = g.vertex_count() - 1; v >= 0; --v) {
                x0.states[v] = static_cast<int>(rest % o.period);
                rest /= o.period;
            }
            tally_one(g, x0, o.steps, tally);
        }
        configs = total;
    }
    json payload;
    payload["graph"] = firefly::graph_json(g);
    payload["n"] = o.period;
    payload["steps_per_config"] = o.steps;
    payload["configs_checked"] = configs;
    payload["derived_matches_absolute"] = tally.derived_matches_absolute;
    payload["configs_where_literal_diverges"] = tally.literal_divergences;
    payload["first_divergence_time"] =
        tally.first_divergence_time ? json(*tally.first_divergence_time) : json(nullptr);
    payload["first_divergence_config"] =
        tally.first_divergence_state ? json(*tally.first_divergence_state) : json(nullptr);
    emit(payload);
    return tally.derived_matches_absolute ? kExitPass : kExitFail;
}

void add_graph_period(CLI::App* cmd, std::string& graph_arg, int& period) {
    cmd->add_option("--family,--graph", graph_arg,
                    "graph: family spec (path:5, cycle:4, star:3, complete:4, tree:0-1,1-2) "
                    "or a file in edge-list or JSON form")
        ->required();
    cmd->add_option("--n", period, "number of oscillator states (>= 3)")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-state pulse-coupled oscillator networks: exact orbits, "
                 "synchronization sweeps, and the randomized variant"};
    app.require_subcommand(1);
    int verdict = kExitPass;

    auto sim = std::make_shared<SimulateOpts>();
    CLI::App* sim_cmd = app.add_subcommand("simulate", "run one orbit and export its trace");
    add_graph_period(sim_cmd, sim->graph_arg, sim->period);
    sim_cmd->add_option("--config", sim->config, "comma-separated initial states")->required();
    sim_cmd->add_option("--budget", sim->budget, "step cap (0 = automatic)");
    sim_cmd->add_option("--trace", sim->trace_path, "write the JSON trace to this file");
    sim_cmd->add_option("--csv", sim->csv_path, "write the orbit as CSV to this file");
    sim_cmd->add_option("--dot-frames", sim->dot_prefix,
                        "write one DOT file per step under this path prefix");
    sim_cmd->callback([&verdict, sim] { verdict = run_simulate(*sim); });

    auto sync = std::make_shared<CheckSyncOpts>();
    CLI::App* sync_cmd =
        app.add_subcommand("check-sync", "sweep every configuration for synchronization");
    add_graph_period(sync_cmd, sync->graph_arg, sync->period);
    sync_cmd->add_option("--budget", sync->budget, "maximum configurations to sweep");
    sync_cmd->add_option("--jobs", sync->jobs, "worker threads");
    sync_cmd->callback([&verdict, sync] { verdict = run_check_sync(*sync); });

    auto bounds = std::make_shared<PathBoundsOpts>();
    CLI::App* bounds_cmd = app.add_subcommand(
        "path-bounds", "worst-case synchronization time on a path vs the closed-form bounds");
    bounds_cmd->add_option("--n", bounds->period, "number of states")->required();
    bounds_cmd->add_option("--m", bounds->vertex_count, "path length in vertices")->required();
    bounds_cmd->add_option("--budget", bounds->budget, "maximum configurations to sweep");
    bounds_cmd->add_option("--jobs", bounds->jobs, "worker threads");
    bounds_cmd->callback([&verdict, bounds] { verdict = run_path_bounds(*bounds); });

    auto vtree = std::make_shared<VerifyTreeOpts>();
    CLI::App* vtree_cmd = app.add_subcommand(
        "verify-tree", "degree criterion across all non-isomorphic trees (CSV by default)");
    vtree_cmd->add_option("--n", vtree->period, "number of states")->required();
    vtree_cmd->add_option("--max-vertices", vtree->max_vertices, "largest tree size")->required();
    vtree_cmd->add_option("--budget", vtree->budget, "per-tree sweep budget");
    vtree_cmd->add_option("--jobs", vtree->jobs, "worker threads");
    vtree_cmd->add_flag("--json", vtree->as_json, "emit JSON instead of CSV");
    vtree_cmd->callback([&verdict, vtree] { verdict = run_verify_tree(*vtree); });

    auto vblink = std::make_shared<VerifyBlinkingOpts>();
    CLI::App* vblink_cmd = app.add_subcommand(
        "verify-blinking", "on a tree: synchronization iff every vertex keeps blinking");
    add_graph_period(vblink_cmd, vblink->graph_arg, vblink->period);
    vblink_cmd->add_option("--budget", vblink->budget, "maximum configurations to sweep");
    vblink_cmd->add_option("--jobs", vblink->jobs, "worker threads");
    vblink_cmd->callback([&verdict, vblink] { verdict = run_verify_blinking(*vblink); });

    auto vdeg = std::make_shared<VerifyDegreeOpts>();
    CLI::App* vdeg_cmd = app.add_subcommand(
        "verify-degree", "a vertex of degree below the state count keeps blinking");
    add_graph_period(vdeg_cmd, vdeg->graph_arg, vdeg->period);
    vdeg_cmd->add_option("--vertex", vdeg->vertex, "vertex to watch")->required();
    vdeg_cmd->add_option("--budget", vdeg->budget, "maximum configurations to sweep");
    vdeg_cmd->add_option("--jobs", vdeg->jobs, "worker threads");
    vdeg_cmd->add_option("--samples", vdeg->samples,
                         "sample this many random configurations instead of sweeping");
    vdeg_cmd->add_option("--seed", vdeg->seed, "base seed for sampling");
    vdeg_cmd->callback([&verdict, vdeg] { verdict = run_verify_degree(*vdeg); });

    auto cls = std::make_shared<ClassifyOpts>();
    CLI::App* cls_cmd = app.add_subcommand(
        "classify", "local snapshots at a vertex's blink times, tagged recurrent/transient");
    add_graph_period(cls_cmd, cls->graph_arg, cls->period);
    cls_cmd->add_option("--config", cls->config, "comma-separated initial states")->required();
    cls_cmd->add_option("--center", cls->center, "vertex whose blinks anchor the snapshots")
        ->required();
    cls_cmd->add_option("--budget", cls->budget, "step cap (0 = automatic)");
    cls_cmd->callback([&verdict, cls] { verdict = run_classify(*cls); });

    auto irr = std::make_shared<IrreducibleOpts>();
    CLI::App* irr_cmd = app.add_subcommand(
        "irreducible", "does any proper connected subgraph eventually carry the dynamics?");
    add_graph_period(irr_cmd, irr->graph_arg, irr->period);
    irr_cmd->add_option("--config", irr->config, "comma-separated initial states")->required();
    irr_cmd->add_option("--budget", irr->budget, "step cap (0 = automatic)");
    irr_cmd->callback([&verdict, irr] { verdict = run_irreducible(*irr); });

    auto quot = std::make_shared<QuotientOpts>();
    CLI::App* quot_cmd = app.add_subcommand(
        "quotient", "collapse a two-state configuration onto its layer path");
    add_graph_period(quot_cmd, quot->graph_arg, quot->period);
    quot_cmd->add_option("--config", quot->config, "comma-separated initial states")->required();
    quot_cmd->callback([&verdict, quot] { verdict = run_quotient(*quot); });

    auto bw = std::make_shared<BranchWidthOpts>();
    CLI::App* bw_cmd = app.add_subcommand(
        "branch-width", "track a narrow branch until its leaves stop mattering");
    add_graph_period(bw_cmd, bw->graph_arg, bw->period);
    bw_cmd->add_option("--config", bw->config, "comma-separated initial states")->required();
    bw_cmd->add_option("--branch", bw->branch_index, "index into the graph's star list");
    bw_cmd->add_option("--budget", bw->budget, "step cap (0 = automatic)");
    bw_cmd->callback([&verdict, bw] { verdict = run_branch_width(*bw); });

    CLI::App* ce_cmd = app.add_subcommand("counterexample", "build and run a breaking instance");
    ce_cmd->require_subcommand(1);
    auto hdt = std::make_shared<HighDegreeTreeOpts>();
    CLI::App* hdt_cmd = ce_cmd->add_subcommand(
        "high-degree-tree", "tree whose hub degree reaches the state count: no sync");
    hdt_cmd->add_option("--family,--graph", hdt->graph_arg, "tree to use (default star:6)");
    hdt_cmd->add_option("--n", hdt->period, "number of states");
    hdt_cmd->add_option("--budget", hdt->budget, "step cap (0 = automatic)");
    hdt_cmd->callback([&verdict, hdt] { verdict = run_high_degree_tree(*hdt); });
    auto k3 = std::make_shared<K3Opts>();
    CLI::App* k3_cmd = ce_cmd->add_subcommand(
        "k3-three-states", "triangle with three spread states under period 2q+1: no sync");
    k3_cmd->add_option("--q", k3->q, "spread parameter (>= 2)");
    k3_cmd->callback([&verdict, k3] { verdict = run_k3_three_states(*k3); });

    auto mc = std::make_shared<McOpts>();
    CLI::App* mc_cmd =
        app.add_subcommand("mc", "Monte Carlo ensemble of the randomized dynamic");
    add_graph_period(mc_cmd, mc->graph_arg, mc->period);
    mc_cmd->add_option("--config", mc->config, "comma-separated initial states")->required();
    mc_cmd->add_option("--p", mc->p, "presence probability, strictly inside (0,1)");
    mc_cmd->add_option("--mode", mc->mode, "noise layer: edge or vertex")
        ->check(CLI::IsMember({"edge", "vertex"}));
    mc_cmd->add_option("--runs", mc->runs, "number of independent runs");
    mc_cmd->add_option("--seed", mc->seed, "base seed");
    mc_cmd->add_option("--cap", mc->cap, "per-run step cap");
    mc_cmd->add_option("--jobs", mc->jobs, "worker threads");
    mc_cmd->callback([&verdict, mc] { verdict = run_mc(*mc); });

    auto chain = std::make_shared<ChainOpts>();
    CLI::App* chain_cmd = app.add_subcommand(
        "chain", "exact absorbing-chain analysis of the randomized dynamic");
    add_graph_period(chain_cmd, chain->graph_arg, chain->period);
    chain_cmd->add_option("--p", chain->p, "presence probability, strictly inside (0,1)");
    chain_cmd->add_option("--mode", chain->mode, "noise layer: edge or vertex")
        ->check(CLI::IsMember({"edge", "vertex"}));
    chain_cmd->add_option("--state-gate", chain->state_gate, "refuse more states than this");
    chain_cmd->add_option("--mask-gate", chain->mask_gate, "refuse more masks than this");
    chain_cmd->callback([&verdict, chain] { verdict = run_chain(*chain); });

    auto gen = std::make_shared<GenOpts>();
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded random connected graph");
    gen_cmd->add_option("--vertices", gen->vertex_count, "vertex count")->required();
    gen_cmd->add_option("--extra-edge-prob", gen->extra_edge_prob,
                        "probability of each non-tree edge");
    gen_cmd->add_option("--seed", gen->seed, "generator seed");
    gen_cmd->add_option("--format", gen->format, "edgelist, json, or dot")
        ->check(CLI::IsMember({"edgelist", "json", "dot"}));
    gen_cmd->callback([&verdict, gen] { verdict = run_gen(*gen); });

    CLI::App* px_cmd = app.add_subcommand("paper-examples", "bundled demonstration scenarios");
    px_cmd->require_subcommand(1);
    auto fig8 = std::make_shared<Fig8Opts>();
    CLI::App* fig8_cmd = px_cmd->add_subcommand(
        "fig8-path", "blink-led path family with a closed-form time estimate");
    fig8_cmd->add_option("--n", fig8->period, "number of states");
    fig8_cmd->add_option("--m", fig8->vertex_count, "path length in vertices");
    fig8_cmd->add_option("--budget", fig8->budget, "step cap (0 = automatic)");
    fig8_cmd->callback([&verdict, fig8] { verdict = run_fig8_path(*fig8); });
    auto px_k3 = std::make_shared<K3Opts>();
    CLI::App* px_k3_cmd = px_cmd->add_subcommand(
        "k3-three-states", "triangle with three spread states: rotates forever");
    px_k3_cmd->add_option("--q", px_k3->q, "spread parameter (>= 2)");
    px_k3_cmd->callback([&verdict, px_k3] { verdict = run_k3_three_states(*px_k3); });
    auto n7 = std::make_shared<N7StarOpts>();
    CLI::App* n7_cmd = px_cmd->add_subcommand(
        "n7-star", "hunt the star for an all-blinking configuration that never syncs");
    n7_cmd->add_option("--leaves", n7->leaf_count, "leaf count of the star");
    n7_cmd->add_option("--n", n7->period, "number of states");
    n7_cmd->add_option("--jobs", n7->jobs, "worker threads");
    n7_cmd->callback([&verdict, n7] { verdict = run_n7_star(*n7); });
    auto px_hdt = std::make_shared<HighDegreeTreeOpts>();
    CLI::App* px_hdt_cmd = px_cmd->add_subcommand(
        "high-degree-tree", "hub-heavy tree that silences its hub forever");
    px_hdt_cmd->add_option("--family,--graph", px_hdt->graph_arg, "tree to use");
    px_hdt_cmd->add_option("--n", px_hdt->period, "number of states");
    px_hdt_cmd->add_option("--budget", px_hdt->budget, "step cap (0 = automatic)");
    px_hdt_cmd->callback([&verdict, px_hdt] { verdict = run_high_degree_tree(*px_hdt); });

    auto diag = std::make_shared<DiagnoseRelativeOpts>();
    CLI::App* diag_cmd = app.add_subcommand(
        "diagnose-relative",
        "compare the two readings of the co-rotating pull window step by step");
    add_graph_period(diag_cmd, diag->graph_arg, diag->period);
    diag_cmd->add_option("--config", diag->config,
                         "comma-separated initial states (omit to sweep small state spaces)");
    diag_cmd->add_option("--steps", diag->steps, "steps to follow per configuration");
    diag_cmd->callback([&verdict, diag] { verdict = run_diagnose_relative(*diag); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return verdict;
}
