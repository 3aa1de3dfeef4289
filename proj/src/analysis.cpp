#include "firefly/analysis.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

#include "firefly/parallel.hpp"
#include "firefly/rng.hpp"

namespace firefly {

namespace {

std::uint64_t gated_pow(int base, int exponent, std::uint64_t budget, const char* what) {
    std::uint64_t total = 1;
    for (int i = 0; i < exponent; ++i) {
        if (total > budget / static_cast<std::uint64_t>(base)) {
            throw std::invalid_argument(std::string(what) +
                                        ": enumeration budget exceeded; shrink the instance");
        }
        total *= static_cast<std::uint64_t>(base);
    }
    if (total > budget) {
        throw std::invalid_argument(std::string(what) +
                                    ": enumeration budget exceeded; shrink the instance");
    }
    return total;
}

Configuration config_from_index(std::uint64_t index, int period, int vertex_count) {
    Configuration x;
    x.period = period;
    x.states.assign(static_cast<std::size_t>(vertex_count), 0);
    for (int v = vertex_count - 1; v >= 0; --v) {
        x.states[static_cast<std::size_t>(v)] = static_cast<int>(index % period);
        index /= static_cast<std::uint64_t>(period);
    }
    return x;
}

bool all_vertices_blink_in_cycle(const Orbit& orbit, int vertex_count) {
    for (int v = 0; v < vertex_count; ++v) {
        if (!blinks_infinitely(orbit, v)) return false;
    }
    return true;
}

}  // namespace

SyncReport is_n_synchronizing(const Graph& g, int period, std::uint64_t budget, int jobs,
                              PullAudit* audit, const std::string& graph_id) {
    if (period < 3) throw std::invalid_argument("period must be >= 3");
    if (!is_connected(g)) throw std::invalid_argument("sync sweep requires a connected graph");
    const int vertex_count = g.vertex_count();
    const std::uint64_t total = gated_pow(period, vertex_count, budget, "sync sweep");

    struct Partial {
        std::optional<std::uint64_t> witness_index;
        std::optional<long long> max_sync;
        std::optional<std::uint64_t> slowest_index;
    };
    std::vector<Partial> partials(static_cast<std::size_t>(std::max(1, jobs)));

    parallel_chunks(total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        Partial local;
        for (std::uint64_t index = begin; index < end; ++index) {
            const Configuration x = config_from_index(index, period, vertex_count);
            const Orbit orbit = compute_orbit(g, x);
            if (audit != nullptr) audit->record(orbit);
            if (orbit.sync_time.has_value()) {
                if (!local.max_sync.has_value() || *orbit.sync_time > *local.max_sync) {
                    local.max_sync = *orbit.sync_time;
                    local.slowest_index = index;
                }
            } else if (!local.witness_index.has_value()) {
                local.witness_index = index;
            }
        }
        partials[static_cast<std::size_t>(chunk)] = local;
    });

    SyncReport report;
    report.graph_id = graph_id;
    report.period = period;
    report.configs_checked = total;
    std::optional<std::uint64_t> witness_index;
    std::optional<long long> max_sync;
    std::optional<std::uint64_t> slowest_index;
    for (const Partial& p : partials) {
        if (p.witness_index.has_value() &&
            (!witness_index.has_value() || *p.witness_index < *witness_index)) {
            witness_index = p.witness_index;
        }
        if (p.max_sync.has_value() && (!max_sync.has_value() || *p.max_sync > *max_sync)) {
            max_sync = p.max_sync;
            slowest_index = p.slowest_index;
        }
    }
    report.synchronizing = !witness_index.has_value();
    if (witness_index.has_value()) {
        report.witness = config_from_index(*witness_index, period, vertex_count);
    } else if (max_sync.has_value()) {
        report.max_sync_time = max_sync;
        report.slowest = config_from_index(*slowest_index, period, vertex_count);
    }
    return report;
}

PathBoundsReport max_sync_time_path(int period, int vertex_count, std::uint64_t budget,
                                    int jobs, PullAudit* audit) {
    if (vertex_count < 1) throw std::invalid_argument("path needs >= 1 vertex");
    const Graph path = make_path(vertex_count);
    const SyncReport sweep = is_n_synchronizing(path, period, budget, jobs, audit,
                                                "path:" + std::to_string(vertex_count));
    PathBoundsReport report;
    report.period = period;
    report.vertex_count = vertex_count;
    const long long n = period;
    const long long m = vertex_count;
    report.lower_bound_x2 = n * (n - 2 + 2 * m);
    report.upper_bound_x2 = (m - 1) * (n * n + 4 * n - 4);
    if (!sweep.synchronizing) {
        report.non_sync_witness = sweep.witness;
        return report;
    }
    report.max_sync_time = *sweep.max_sync_time;
    report.slowest = *sweep.slowest;
    report.within_upper_bound = 2 * report.max_sync_time <= report.upper_bound_x2;
    return report;
}

TreeTheoremReport verify_tree_theorem(int period, int max_vertices, std::uint64_t budget,
                                      int jobs, PullAudit* audit) {
    if (max_vertices < 1) throw std::invalid_argument("need max_vertices >= 1");
    TreeTheoremReport report;
    report.period = period;
    report.max_vertices = max_vertices;
    report.pass = true;
    for (int size = 1; size <= max_vertices; ++size) {
        for (const CatalogTree& entry : nonisomorphic_trees(size)) {
            const SyncReport sweep =
                is_n_synchronizing(entry.tree, period, budget, jobs, audit, entry.code);
            TreeTheoremRow row;
            row.tree_code = entry.code;
            row.vertex_count = size;
            row.max_degree = structural_queries(entry.tree).max_degree;
            row.synchronizing = sweep.synchronizing;
            row.max_sync_time = sweep.max_sync_time;
            row.matches_prediction = sweep.synchronizing == (row.max_degree < period);
            report.pass = report.pass && row.matches_prediction;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

BlinkingTheoremReport verify_blinking_theorem(const Graph& tree, int period,
                                              std::uint64_t budget, int jobs,
                                              PullAudit* audit, const std::string& graph_id) {
    if (!structural_queries(tree).is_tree) {
        throw std::invalid_argument("blinking-theorem sweep requires a tree");
    }
    const int vertex_count = tree.vertex_count();
    const std::uint64_t total = gated_pow(period, vertex_count, budget, "blinking sweep");

    struct Partial {
        std::optional<std::uint64_t> blink_no_sync;
        std::optional<std::uint64_t> sync_no_blink;
    };
    std::vector<Partial> partials(static_cast<std::size_t>(std::max(1, jobs)));

    parallel_chunks(total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        Partial local;
        for (std::uint64_t index = begin; index < end; ++index) {
            const Configuration x = config_from_index(index, period, vertex_count);
            const Orbit orbit = compute_orbit(tree, x);
            if (audit != nullptr) audit->record(orbit);
            const bool synced = orbit.sync_time.has_value();
            const bool all_blink = all_vertices_blink_in_cycle(orbit, vertex_count);
            if (all_blink && !synced && !local.blink_no_sync.has_value()) {
                local.blink_no_sync = index;
            }
            if (synced && !all_blink && !local.sync_no_blink.has_value()) {
                local.sync_no_blink = index;
            }
        }
        partials[static_cast<std::size_t>(chunk)] = local;
    });

    BlinkingTheoremReport report;
    report.graph_id = graph_id;
    report.period = period;
    report.configs_checked = total;
    std::optional<std::uint64_t> blink_no_sync;
    std::optional<std::uint64_t> sync_no_blink;
    for (const Partial& p : partials) {
        if (p.blink_no_sync.has_value() &&
            (!blink_no_sync.has_value() || *p.blink_no_sync < *blink_no_sync)) {
            blink_no_sync = p.blink_no_sync;
        }
        if (p.sync_no_blink.has_value() &&
            (!sync_no_blink.has_value() || *p.sync_no_blink < *sync_no_blink)) {
            sync_no_blink = p.sync_no_blink;
        }
    }
    if (blink_no_sync.has_value()) {
        report.all_blink_no_sync = config_from_index(*blink_no_sync, period, vertex_count);
    }
    if (sync_no_blink.has_value()) {
        report.sync_missing_blink = config_from_index(*sync_no_blink, period, vertex_count);
    }
    report.equivalence_holds = !blink_no_sync.has_value() && !sync_no_blink.has_value();
    return report;
}

namespace {

DegreeLemmaReport degree_lemma_common(const Graph& g, int period, int vertex,
                                      const std::string& graph_id) {
    if (period < 3) throw std::invalid_argument("period must be >= 3");
    if (vertex < 0 || vertex >= g.vertex_count()) {
        throw std::invalid_argument("vertex out of range");
    }
    if (g.degree(vertex) >= period) {
        throw std::invalid_argument("vertex degree must be below the period");
    }
    DegreeLemmaReport report;
    report.graph_id = graph_id;
    report.period = period;
    report.vertex = vertex;
    return report;
}

}  // namespace

DegreeLemmaReport verify_degree_lemma(const Graph& g, int period, int vertex,
                                      std::uint64_t budget, int jobs, PullAudit* audit,
                                      const std::string& graph_id) {
    DegreeLemmaReport report = degree_lemma_common(g, period, vertex, graph_id);
    const int vertex_count = g.vertex_count();
    const std::uint64_t total = gated_pow(period, vertex_count, budget, "degree-lemma sweep");
    report.exhaustive = true;
    report.configs_checked = total;

    std::vector<std::optional<std::uint64_t>> partials(
        static_cast<std::size_t>(std::max(1, jobs)));
    parallel_chunks(total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        std::optional<std::uint64_t> local;
        for (std::uint64_t index = begin; index < end; ++index) {
            const Configuration x = config_from_index(index, period, vertex_count);
            const Orbit orbit = compute_orbit(g, x);
            if (audit != nullptr) audit->record(orbit);
            if (!blinks_infinitely(orbit, vertex) && !local.has_value()) local = index;
        }
        partials[static_cast<std::size_t>(chunk)] = local;
    });

    std::optional<std::uint64_t> violation;
    for (const auto& p : partials) {
        if (p.has_value() && (!violation.has_value() || *p < *violation)) violation = p;
    }
    report.pass = !violation.has_value();
    if (violation.has_value()) {
        report.violation = config_from_index(*violation, period, vertex_count);
    }
    return report;
}

DegreeLemmaReport verify_degree_lemma_sampled(const Graph& g, int period, int vertex,
                                              std::uint64_t samples, std::uint64_t seed,
                                              PullAudit* audit, const std::string& graph_id) {
    DegreeLemmaReport report = degree_lemma_common(g, period, vertex, graph_id);
    report.exhaustive = false;
    report.configs_checked = samples;
    report.pass = true;
    for (std::uint64_t i = 0; i < samples; ++i) {
        SplitMix64 rng(derive_seed(seed, i));
        Configuration x;
        x.period = period;
        x.states.reserve(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            x.states.push_back(static_cast<int>(rng.next_below(
                static_cast<std::uint64_t>(period))));
        }
        const Orbit orbit = compute_orbit(g, x);
        if (audit != nullptr) audit->record(orbit);
        if (!blinks_infinitely(orbit, vertex)) {
            report.pass = false;
            report.violation = x;
            break;
        }
    }
    return report;
}

ReturnMapReport return_map(const Graph& g, const Configuration& x0, int center,
                           std::optional<long long> cap) {
    if (center < 0 || center >= g.vertex_count()) {
        throw std::invalid_argument("center out of range");
    }
    const Orbit orbit = compute_orbit(g, x0, cap);
    if (orbit.truncated) throw std::invalid_argument("orbit truncated; raise the cap");

    const int period = x0.period;
    const int blink = blinking_state(period);
    std::vector<int> leaves;
    for (int u : g.neighbors(center)) {
        if (g.degree(u) == 1) leaves.push_back(u);
    }

    ReturnMapReport report;
    report.center = center;
    std::vector<int> neighborhood;
    neighborhood.push_back(center);
    for (int u : g.neighbors(center)) neighborhood.push_back(u);

    std::vector<int> star_vertices = leaves;
    star_vertices.push_back(center);

    for (long long t : orbit.blink_times[static_cast<std::size_t>(center)]) {
        const Configuration& here = orbit.trajectory[static_cast<std::size_t>(t)];
        LocalSnapshot snap;
        snap.center = center;
        snap.neighborhood = neighborhood;
        snap.time = t;
        snap.in_cycle = t >= orbit.transient_length;
        for (int u : neighborhood) {
            const int state = here.states[static_cast<std::size_t>(u)];
            snap.relative_states.push_back(
                static_cast<int>(((state - t) % period + period) % period));
            snap.standard_states.push_back(state);
        }
        for (int u : leaves) {
            if (displacement(here, u, center) == period / 2) snap.opposite_leaf = true;
        }
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            for (std::size_t j = i + 1; j < leaves.size(); ++j) {
                if (here.states[static_cast<std::size_t>(leaves[i])] ==
                    here.states[static_cast<std::size_t>(leaves[j])]) {
                    snap.duplicate_leaf_states = true;
                }
            }
        }
        if (!leaves.empty()) {
            snap.single_leaf_state = true;
            for (int u : leaves) {
                if (here.states[static_cast<std::size_t>(u)] !=
                    here.states[static_cast<std::size_t>(leaves.front())]) {
                    snap.single_leaf_state = false;
                }
            }
            const int star_width = width(here, star_vertices);
            snap.small_star_width = 2 * star_width < period - 2;
        }
        auto [it, inserted] = report.recurrent_by_standard.try_emplace(snap.standard_states,
                                                                       snap.in_cycle);
        if (!inserted && snap.in_cycle) it->second = true;
        report.snapshots.push_back(std::move(snap));
    }
    report.center_ever_blinks = !report.snapshots.empty();
    // The center's state at any of its blink times is the blinking state by
    // construction; keep the invariant explicit.
    for (const LocalSnapshot& snap : report.snapshots) {
        if (snap.standard_states.front() != blink) {
            throw std::logic_error("blink snapshot does not show the blinking state");
        }
    }
    return report;
}

IrreducibilityReport is_irreducible(const Graph& g, const Configuration& x0,
                                    std::optional<long long> cap) {
    return is_irreducible(g, compute_orbit(g, x0, cap));
}

IrreducibilityReport is_irreducible(const Graph& g, const Orbit& orbit) {
    const int vertex_count = g.vertex_count();
    if (vertex_count < 2) throw std::invalid_argument("need >= 2 vertices");
    if (vertex_count > 20) {
        throw std::invalid_argument("subgraph enumeration budget exceeded (2^|V| scale)");
    }
    IrreducibilityReport report;
    const std::uint64_t full = (std::uint64_t{1} << vertex_count) - 1;
    for (std::uint64_t mask = 3; mask < full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<int> subset;
        for (int v = 0; v < vertex_count; ++v) {
            if ((mask >> v) & 1u) subset.push_back(v);
        }
        if (!is_connected_subset(g, subset)) continue;
        ++report.subgraphs_checked;
        const SubgraphWindow window = make_window(g, subset);
        const RestrictionReport restriction =
            restricts_on(g, orbit, window, RestrictionMode::eventually);
        if (restriction.holds) {
            report.irreducible = false;
            report.reducing_subgraph = subset;
            report.restriction_start = restriction.start_time;
            return report;
        }
    }
    report.irreducible = true;
    return report;
}

QuotientReport two_state_quotient(const Graph& g, const Configuration& x0) {
    validate(g, x0);
    if (!is_connected(g)) throw std::invalid_argument("quotient requires a connected graph");
    std::vector<int> distinct = x0.states;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != 2) {
        throw std::invalid_argument("quotient requires exactly two distinct states");
    }
    const int low = distinct[0];
    const int high = distinct[1];
    const int vertex_count = g.vertex_count();

    // Peel each class into layers by distance from the opposite class.
    std::vector<int> layer(static_cast<std::size_t>(vertex_count), -1);
    const auto peel = [&](int own_state) {
        std::queue<int> frontier;
        for (int v = 0; v < vertex_count; ++v) {
            if (x0.states[static_cast<std::size_t>(v)] != own_state) continue;
            for (int u : g.neighbors(v)) {
                if (x0.states[static_cast<std::size_t>(u)] != own_state) {
                    layer[static_cast<std::size_t>(v)] = 0;
                    frontier.push(v);
                    break;
                }
            }
        }
        int depth = 0;
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            for (int u : g.neighbors(v)) {
                if (x0.states[static_cast<std::size_t>(u)] == own_state &&
                    layer[static_cast<std::size_t>(u)] == -1) {
                    layer[static_cast<std::size_t>(u)] =
                        layer[static_cast<std::size_t>(v)] + 1;
                    frontier.push(u);
                }
            }
            depth = std::max(depth, layer[static_cast<std::size_t>(v)]);
        }
        return depth + 1;  // number of layers
    };
    const int low_layers = peel(low);
    const int high_layers = peel(high);
    for (int v = 0; v < vertex_count; ++v) {
        if (layer[static_cast<std::size_t>(v)] == -1) {
            throw std::logic_error("vertex missed by layer peeling on a connected graph");
        }
    }

    QuotientReport report;
    report.low_state = low;
    report.high_state = high;
    report.class_of.assign(static_cast<std::size_t>(vertex_count), -1);
    for (int v = 0; v < vertex_count; ++v) {
        const int l = layer[static_cast<std::size_t>(v)];
        report.class_of[static_cast<std::size_t>(v)] =
            x0.states[static_cast<std::size_t>(v)] == low ? low_layers - 1 - l
                                                          : low_layers + l;
    }
    report.path = make_path(low_layers + high_layers);
    report.path_config.period = x0.period;
    for (int i = 0; i < low_layers + high_layers; ++i) {
        report.path_config.states.push_back(i < low_layers ? low : high);
    }
    report.class_adjacency_ok = true;
    for (const auto& [u, v] : g.edges()) {
        const int du = report.class_of[static_cast<std::size_t>(u)];
        const int dv = report.class_of[static_cast<std::size_t>(v)];
        if (du - dv > 1 || dv - du > 1) report.class_adjacency_ok = false;
    }
    return report;
}

BranchWidthReport verify_branch_width(const Graph& g, const Star& branch,
                                      const Configuration& x0,
                                      std::optional<long long> cap, PullAudit* audit) {
    if (!branch.is_branch()) throw std::invalid_argument("star has no root; not a branch");
    validate(g, x0);
    const int period = x0.period;

    std::vector<int> branch_vertices = branch.leaves;
    branch_vertices.push_back(branch.center);
    std::sort(branch_vertices.begin(), branch_vertices.end());
    const int initial_width = width(x0, branch_vertices);
    if (2 * initial_width >= period - 2) {
        throw std::invalid_argument("branch width must start below period/2 - 1");
    }

    const Orbit orbit = compute_orbit(g, x0, cap);
    if (orbit.truncated) throw std::invalid_argument("orbit truncated; raise the cap");
    if (audit != nullptr) audit->record(orbit);
    const long long total = orbit.length();

    BranchWidthReport report;
    report.period = period;
    report.branch = branch;
    report.initial_branch_width = initial_width;

    // A blink holds exactly the vertices ahead of the blinker by at most a
    // half turn, so a center trailing every leaf cannot be held by one.
    const auto center_trails_all = [&](long long t) {
        const Configuration& here = orbit.trajectory[static_cast<std::size_t>(t)];
        for (int leaf : branch.leaves) {
            if (2 * displacement(here, branch.center, leaf) >= period) return false;
        }
        return true;
    };

    std::optional<long long> alignment;
    for (long long t = 0; t < total; ++t) {
        if (center_trails_all(t)) {
            alignment = t;
            break;
        }
    }
    report.alignment_time = alignment;

    if (alignment.has_value()) {
        const long long deadline = static_cast<long long>(period) * (initial_width + 1);
        const int width_then =
            width(orbit.trajectory[static_cast<std::size_t>(*alignment)], branch_vertices);
        report.alignment_reached.pass = *alignment <= deadline && width_then <= initial_width;
        if (!report.alignment_reached.pass) report.alignment_reached.counterexample_time = alignment;
    }

    if (alignment.has_value()) {
        report.stays_aligned.pass = true;
        for (long long t = *alignment; t < total; ++t) {
            if (!center_trails_all(t)) {
                report.stays_aligned.pass = false;
                report.stays_aligned.counterexample_time = t;
                break;
            }
        }
    }

    report.width_bounded.pass = true;
    for (long long t = 0; t < total; ++t) {
        const int w = width(orbit.trajectory[static_cast<std::size_t>(t)], branch_vertices);
        if (w > initial_width + 1) {
            report.width_bounded.pass = false;
            report.width_bounded.counterexample_time = t;
            break;
        }
    }

    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (std::find(branch.leaves.begin(), branch.leaves.end(), v) == branch.leaves.end()) {
            keep.push_back(v);
        }
    }
    const SubgraphWindow window = make_window(g, keep);
    const RestrictionReport restriction =
        restricts_on(g, orbit, window, RestrictionMode::eventually);
    if (restriction.holds) report.restriction_start = restriction.start_time;
    if (alignment.has_value() && restriction.holds) {
        report.leaves_droppable.pass = *restriction.start_time <= *alignment;
        if (!report.leaves_droppable.pass) {
            report.leaves_droppable.counterexample_time = restriction.start_time;
        }
    }

    if (branch.k() == 1) {
        const long long bound_x2 =
            static_cast<long long>(period) * period + 4 * static_cast<long long>(period) - 4;
        report.single_leaf_bound.pass =
            restriction.holds && 2 * *restriction.start_time <= bound_x2;
        if (!report.single_leaf_bound.pass && restriction.holds) {
            report.single_leaf_bound.counterexample_time = restriction.start_time;
        }
    } else {
        report.single_leaf_bound.pass = true;
    }

    report.all_pass = report.alignment_reached.pass && report.stays_aligned.pass &&
                      report.width_bounded.pass && report.leaves_droppable.pass &&
                      report.single_leaf_bound.pass;
    return report;
}

CounterexampleInstance high_degree_tree_counterexample(const Graph& tree, int period) {
    if (period < 3) throw std::invalid_argument("period must be >= 3");
    if (!structural_queries(tree).is_tree) throw std::invalid_argument("input must be a tree");
    int hub = -1;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (tree.degree(v) >= period) {
            hub = v;
            break;
        }
    }
    if (hub == -1) {
        throw std::invalid_argument("tree has no vertex of degree >= period");
    }
    const DeletionResult removal = delete_vertices(tree, {hub});
    const std::vector<int> labels = component_labels(removal.graph);

    CounterexampleInstance instance;
    instance.kind = "high_degree_tree";
    instance.graph = tree;
    instance.config.period = period;
    instance.config.states.assign(static_cast<std::size_t>(tree.vertex_count()), 0);
    instance.config.states[static_cast<std::size_t>(hub)] = period / 2 + 1;
    for (int v = 0; v < removal.graph.vertex_count(); ++v) {
        const int component_index = labels[static_cast<std::size_t>(v)] + 1;  // 1-based
        instance.config.states[static_cast<std::size_t>(
            removal.new_to_old[static_cast<std::size_t>(v)])] = component_index % period;
    }
    return instance;
}

CounterexampleInstance k3_three_state_counterexample(int q) {
    if (q < 2) throw std::invalid_argument("need q >= 2");
    CounterexampleInstance instance;
    instance.kind = "k3_three_states";
    instance.graph = make_complete(3);
    instance.config.period = 2 * q + 1;
    instance.config.states = {0, q, 2 * q};
    return instance;
}

StarSearchResult star_all_blinking_search(int leaf_count, int period, int jobs,
                                          PullAudit* audit) {
    StarSearchResult result;
    result.graph = make_star(leaf_count);
    result.period = period;
    const int vertex_count = result.graph.vertex_count();
    const std::uint64_t total =
        gated_pow(period, vertex_count, 100'000'000ull, "star witness search");
    result.configs_checked = total;

    std::vector<std::optional<std::uint64_t>> partials(
        static_cast<std::size_t>(std::max(1, jobs)));
    parallel_chunks(total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        std::optional<std::uint64_t> local;
        for (std::uint64_t index = begin; index < end; ++index) {
            const Configuration x = config_from_index(index, period, vertex_count);
            const Orbit orbit = compute_orbit(result.graph, x);
            if (audit != nullptr) audit->record(orbit);
            if (!orbit.sync_time.has_value() &&
                all_vertices_blink_in_cycle(orbit, vertex_count) && !local.has_value()) {
                local = index;
            }
        }
        partials[static_cast<std::size_t>(chunk)] = local;
    });

    std::optional<std::uint64_t> witness;
    for (const auto& p : partials) {
        if (p.has_value() && (!witness.has_value() || *p < *witness)) witness = p;
    }
    if (witness.has_value()) {
        result.witness = config_from_index(*witness, period, vertex_count);
    }
    return result;
}

}  // namespace firefly
