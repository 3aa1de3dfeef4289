#include "firefly/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace firefly {

namespace {

nlohmann::ordered_json states_json(const Configuration& x) {
    return nlohmann::ordered_json(x.states);
}

nlohmann::ordered_json optional_states(const std::optional<Configuration>& x) {
    if (!x.has_value()) return nullptr;
    return states_json(*x);
}

nlohmann::ordered_json claim_json(const ClaimResult& claim) {
    nlohmann::ordered_json out;
    out["pass"] = claim.pass;
    out["counterexample_time"] =
        claim.counterexample_time.has_value()
            ? nlohmann::ordered_json(*claim.counterexample_time)
            : nlohmann::ordered_json(nullptr);
    return out;
}

}  // namespace

nlohmann::ordered_json graph_json(const Graph& g) {
    nlohmann::ordered_json out;
    out["vertices"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    out["edges"] = std::move(edges);
    return out;
}

nlohmann::ordered_json trace_json(const Graph& g, const Orbit& orbit) {
    nlohmann::ordered_json out;
    out["graph"] = graph_json(g);
    out["n"] = orbit.initial.period;
    out["b"] = blinking_state(orbit.initial.period);
    auto steps = nlohmann::ordered_json::array();
    for (const Configuration& x : orbit.trajectory) steps.push_back(states_json(x));
    out["steps"] = std::move(steps);
    out["truncated"] = orbit.truncated;
    out["transient"] = orbit.transient_length;
    out["period"] = orbit.cycle_length;
    out["sync_time"] = orbit.sync_time.has_value()
                           ? nlohmann::ordered_json(*orbit.sync_time)
                           : nlohmann::ordered_json(nullptr);
    auto pulls = nlohmann::ordered_json::array();
    for (const PullEvent& e : orbit.pull_events) pulls.push_back({e.time, e.puller, e.held});
    out["pulls"] = std::move(pulls);
    auto blinks = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < orbit.blink_times.size(); ++v) {
        blinks[std::to_string(v)] = orbit.blink_times[v];
    }
    out["blinks"] = std::move(blinks);
    return out;
}

std::string orbit_csv(const Orbit& orbit) {
    std::ostringstream out;
    const std::size_t vertex_count = orbit.initial.states.size();
    out << "t";
    for (std::size_t v = 0; v < vertex_count; ++v) out << ",state_" << v;
    out << "\n";
    for (std::size_t t = 0; t < orbit.trajectory.size(); ++t) {
        out << t;
        for (int s : orbit.trajectory[t].states) out << "," << s;
        out << "\n";
    }
    return out.str();
}

std::string dot_frame(const Graph& g, const Configuration& x) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << v << ":"
            << x.states[static_cast<std::size_t>(v)] << "\"];\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json sync_report_json(const SyncReport& report) {
    nlohmann::ordered_json out;
    out["graph_id"] = report.graph_id;
    out["n"] = report.period;
    out["synchronizing"] = report.synchronizing;
    out["witness"] = optional_states(report.witness);
    out["configs_checked"] = report.configs_checked;
    out["max_sync_time"] = report.max_sync_time.has_value()
                               ? nlohmann::ordered_json(*report.max_sync_time)
                               : nlohmann::ordered_json(nullptr);
    out["slowest"] = optional_states(report.slowest);
    return out;
}

nlohmann::ordered_json path_bounds_json(const PathBoundsReport& report) {
    nlohmann::ordered_json out;
    out["n"] = report.period;
    out["m"] = report.vertex_count;
    out["non_sync_witness"] = optional_states(report.non_sync_witness);
    out["max_sync_time"] = report.max_sync_time;
    out["slowest"] = report.slowest.states;
    out["lower_bound"] = static_cast<double>(report.lower_bound_x2) / 2.0;
    out["upper_bound"] = static_cast<double>(report.upper_bound_x2) / 2.0;
    out["within_upper_bound"] = report.within_upper_bound;
    return out;
}

nlohmann::ordered_json tree_theorem_json(const TreeTheoremReport& report) {
    nlohmann::ordered_json out;
    out["n"] = report.period;
    out["max_vertices"] = report.max_vertices;
    out["pass"] = report.pass;
    auto rows = nlohmann::ordered_json::array();
    for (const TreeTheoremRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["tree"] = row.tree_code;
        r["vertices"] = row.vertex_count;
        r["max_degree"] = row.max_degree;
        r["synchronizing"] = row.synchronizing;
        r["max_sync_time"] = row.max_sync_time.has_value()
                                 ? nlohmann::ordered_json(*row.max_sync_time)
                                 : nlohmann::ordered_json(nullptr);
        r["matches_prediction"] = row.matches_prediction;
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out;
}

std::string tree_theorem_csv(const TreeTheoremReport& report) {
    std::ostringstream out;
    out << "tree,n,max_degree,verdict,max_sync_time\n";
    for (const TreeTheoremRow& row : report.rows) {
        out << row.tree_code << "," << report.period << "," << row.max_degree << ","
            << (row.synchronizing ? "synchronizing" : "not_synchronizing") << ",";
        if (row.max_sync_time.has_value()) out << *row.max_sync_time;
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json blinking_theorem_json(const BlinkingTheoremReport& report) {
    nlohmann::ordered_json out;
    out["graph_id"] = report.graph_id;
    out["n"] = report.period;
    out["configs_checked"] = report.configs_checked;
    out["equivalence_holds"] = report.equivalence_holds;
    out["all_blink_no_sync"] = optional_states(report.all_blink_no_sync);
    out["sync_missing_blink"] = optional_states(report.sync_missing_blink);
    return out;
}

nlohmann::ordered_json degree_lemma_json(const DegreeLemmaReport& report) {
    nlohmann::ordered_json out;
    out["graph_id"] = report.graph_id;
    out["n"] = report.period;
    out["vertex"] = report.vertex;
    out["exhaustive"] = report.exhaustive;
    out["configs_checked"] = report.configs_checked;
    out["pass"] = report.pass;
    out["violation"] = optional_states(report.violation);
    return out;
}

nlohmann::ordered_json return_map_json(const ReturnMapReport& report) {
    nlohmann::ordered_json out;
    out["center"] = report.center;
    out["center_ever_blinks"] = report.center_ever_blinks;
    auto snapshots = nlohmann::ordered_json::array();
    for (const LocalSnapshot& snap : report.snapshots) {
        nlohmann::ordered_json s;
        s["time"] = snap.time;
        s["neighborhood"] = snap.neighborhood;
        s["relative_states"] = snap.relative_states;
        s["standard_states"] = snap.standard_states;
        s["in_cycle"] = snap.in_cycle;
        s["opposite_leaf"] = snap.opposite_leaf;
        s["duplicate_leaf_states"] = snap.duplicate_leaf_states;
        s["single_leaf_state"] = snap.single_leaf_state;
        s["small_star_width"] = snap.small_star_width;
        snapshots.push_back(std::move(s));
    }
    out["snapshots"] = std::move(snapshots);
    auto classes = nlohmann::ordered_json::array();
    for (const auto& [standard, recurrent] : report.recurrent_by_standard) {
        nlohmann::ordered_json c;
        c["standard_states"] = standard;
        c["classification"] = recurrent ? "recurrent" : "transient";
        classes.push_back(std::move(c));
    }
    out["classification"] = std::move(classes);
    return out;
}

nlohmann::ordered_json irreducibility_json(const IrreducibilityReport& report) {
    nlohmann::ordered_json out;
    out["irreducible"] = report.irreducible;
    out["reducing_subgraph"] = report.reducing_subgraph.has_value()
                                   ? nlohmann::ordered_json(*report.reducing_subgraph)
                                   : nlohmann::ordered_json(nullptr);
    out["restriction_start"] = report.restriction_start.has_value()
                                   ? nlohmann::ordered_json(*report.restriction_start)
                                   : nlohmann::ordered_json(nullptr);
    out["subgraphs_checked"] = report.subgraphs_checked;
    return out;
}

nlohmann::ordered_json quotient_json(const QuotientReport& report) {
    nlohmann::ordered_json out;
    out["path"] = graph_json(report.path);
    out["class_of"] = report.class_of;
    out["path_config"] = report.path_config.states;
    out["low_state"] = report.low_state;
    out["high_state"] = report.high_state;
    out["class_adjacency_ok"] = report.class_adjacency_ok;
    return out;
}

nlohmann::ordered_json branch_width_json(const BranchWidthReport& report) {
    nlohmann::ordered_json out;
    out["n"] = report.period;
    out["center"] = report.branch.center;
    out["leaves"] = report.branch.leaves;
    out["root"] = report.branch.root.has_value() ? nlohmann::ordered_json(*report.branch.root)
                                                 : nlohmann::ordered_json(nullptr);
    out["initial_branch_width"] = report.initial_branch_width;
    out["alignment_time"] = report.alignment_time.has_value()
                                ? nlohmann::ordered_json(*report.alignment_time)
                                : nlohmann::ordered_json(nullptr);
    out["alignment_reached"] = claim_json(report.alignment_reached);
    out["stays_aligned"] = claim_json(report.stays_aligned);
    out["width_bounded"] = claim_json(report.width_bounded);
    out["leaves_droppable"] = claim_json(report.leaves_droppable);
    out["restriction_start"] = report.restriction_start.has_value()
                                   ? nlohmann::ordered_json(*report.restriction_start)
                                   : nlohmann::ordered_json(nullptr);
    out["single_leaf_bound"] = claim_json(report.single_leaf_bound);
    out["all_pass"] = report.all_pass;
    return out;
}

nlohmann::ordered_json ensemble_json(const EnsembleReport& report) {
    nlohmann::ordered_json out;
    out["runs"] = report.runs;
    out["absorbed"] = report.absorbed;
    out["mean_steps"] = report.mean_steps;
    out["max_steps"] = report.max_steps;
    out["base_seed"] = report.base_seed;
    out["cap"] = report.cap;
    return out;
}

nlohmann::ordered_json chain_json(const ChainReport& report) {
    nlohmann::ordered_json out;
    out["n"] = report.period;
    out["state_count"] = report.state_count;
    out["sync_unique_absorbing"] = report.sync_unique_absorbing;
    out["reaches_sync_from_all"] = report.reaches_sync_from_all;
    out["max_row_sum_error"] = report.max_row_sum_error;
    out["solved"] = report.solved;
    out["solver_residual"] = report.solver_residual;
    auto expected = nlohmann::ordered_json::object();
    if (report.solved) {
        for (std::size_t i = 0; i < report.non_sync_states.size(); ++i) {
            expected[std::to_string(report.non_sync_states[i])] = report.expected_steps[i];
        }
    }
    out["expected_steps"] = std::move(expected);
    return out;
}

Configuration parse_config_literal(const std::string& text, int period) {
    Configuration x;
    x.period = period;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("trailing characters");
            x.states.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad configuration literal entry '" + item + "'");
        }
    }
    if (x.states.empty()) throw std::invalid_argument("empty configuration literal");
    return x;
}

}  // namespace firefly
