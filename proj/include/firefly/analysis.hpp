#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "firefly/dynamics.hpp"
#include "firefly/graph.hpp"
#include "firefly/tree_enum.hpp"

namespace firefly {

/// Verdict of an exhaustive sweep over every configuration of a graph.
struct SyncReport {
    std::string graph_id;
    int period = 0;
    bool synchronizing = false;
    std::optional<Configuration> witness;  // lexicographically least non-syncing config
    std::uint64_t configs_checked = 0;
    std::optional<long long> max_sync_time;  // present iff synchronizing
    std::optional<Configuration> slowest;    // lex-least argmax of sync time
};

/// Sweeps all period^|V| configurations (no early exit, radix order with
/// vertex 0 most significant) and reports whether every one synchronizes.
SyncReport is_n_synchronizing(const Graph& g, int period,
                              std::uint64_t budget = 10'000'000, int jobs = 1,
                              PullAudit* audit = nullptr, const std::string& graph_id = "");

/// Worst-case synchronization time over every configuration of a path,
/// reported next to the closed-form bounds.  Bounds carry half-integers, so
/// they are stored doubled to stay exact.
struct PathBoundsReport {
    int period = 0;
    int vertex_count = 0;
    std::optional<Configuration> non_sync_witness;  // set only if the sweep falsifies sync
    long long max_sync_time = 0;
    Configuration slowest;
    long long lower_bound_x2 = 0;  // 2 * period * (period/2 - 1 + vertex_count)
    long long upper_bound_x2 = 0;  // 2 * (vertex_count-1) * (period^2/2 + 2*period - 2)
    bool within_upper_bound = false;
};

PathBoundsReport max_sync_time_path(int period, int vertex_count,
                                    std::uint64_t budget = 10'000'000, int jobs = 1,
                                    PullAudit* audit = nullptr);

/// Degree criterion sweep over all isomorphism classes of trees.
struct TreeTheoremRow {
    std::string tree_code;
    int vertex_count = 0;
    int max_degree = 0;
    bool synchronizing = false;
    std::optional<long long> max_sync_time;
    bool matches_prediction = false;  // synchronizing == (max_degree < period)
};

struct TreeTheoremReport {
    int period = 0;
    int max_vertices = 0;
    std::vector<TreeTheoremRow> rows;
    bool pass = false;
};

TreeTheoremReport verify_tree_theorem(int period, int max_vertices,
                                      std::uint64_t budget = 10'000'000, int jobs = 1,
                                      PullAudit* audit = nullptr);

/// Checks, over every configuration of a tree, that synchronization happens
/// exactly when every vertex keeps blinking on the limit cycle.
struct BlinkingTheoremReport {
    std::string graph_id;
    int period = 0;
    std::uint64_t configs_checked = 0;
    bool equivalence_holds = false;
    std::optional<Configuration> all_blink_no_sync;   // lex-least violation
    std::optional<Configuration> sync_missing_blink;  // lex-least converse violation
};

BlinkingTheoremReport verify_blinking_theorem(const Graph& tree, int period,
                                              std::uint64_t budget = 10'000'000, int jobs = 1,
                                              PullAudit* audit = nullptr,
                                              const std::string& graph_id = "");

/// Checks that a vertex of degree below the period keeps blinking in every
/// (or every sampled) orbit.
struct DegreeLemmaReport {
    std::string graph_id;
    int period = 0;
    int vertex = -1;
    bool exhaustive = false;
    std::uint64_t configs_checked = 0;
    bool pass = false;
    std::optional<Configuration> violation;
};

DegreeLemmaReport verify_degree_lemma(const Graph& g, int period, int vertex,
                                      std::uint64_t budget = 10'000'000, int jobs = 1,
                                      PullAudit* audit = nullptr,
                                      const std::string& graph_id = "");

DegreeLemmaReport verify_degree_lemma_sampled(const Graph& g, int period, int vertex,
                                              std::uint64_t samples, std::uint64_t seed,
                                              PullAudit* audit = nullptr,
                                              const std::string& graph_id = "");

/// Relative states around a vertex at one of its blink times, plus the
/// structural flags the transience criteria look at.  `standard_states`
/// renders the snapshot with the center at the blinking state, which makes
/// snapshots taken at different times comparable.
struct LocalSnapshot {
    int center = -1;
    std::vector<int> neighborhood;     // center first, then neighbors ascending
    std::vector<int> relative_states;  // co-rotating frame values at the blink
    std::vector<int> standard_states;  // same snapshot, center pinned at blinking state
    long long time = 0;
    bool in_cycle = false;
    bool opposite_leaf = false;        // some leaf sits exactly half a turn behind
    bool duplicate_leaf_states = false;
    bool single_leaf_state = false;    // all leaves share one state (requires >= 1 leaf)
    bool small_star_width = false;     // width over center+leaves < period/2 - 1
};

struct ReturnMapReport {
    int center = -1;
    bool center_ever_blinks = false;
    std::vector<LocalSnapshot> snapshots;
    // keyed by standard_states; true = the snapshot recurs on the limit cycle
    std::map<std::vector<int>, bool> recurrent_by_standard;
};

ReturnMapReport return_map(const Graph& g, const Configuration& x0, int center,
                           std::optional<long long> cap = std::nullopt);

/// Does any connected induced proper subgraph (>= 2 vertices) eventually
/// carry the dynamics on its own?  If so the configuration is reducible.
struct IrreducibilityReport {
    bool irreducible = false;
    std::optional<std::vector<int>> reducing_subgraph;  // first one found, mask order
    std::optional<long long> restriction_start;
    std::uint64_t subgraphs_checked = 0;
};

IrreducibilityReport is_irreducible(const Graph& g, const Configuration& x0,
                                    std::optional<long long> cap = std::nullopt);

IrreducibilityReport is_irreducible(const Graph& g, const Orbit& orbit);

/// Collapse of a two-state configuration onto a path: vertices sharing a
/// state split into distance layers from the opposite class, and layers
/// become path vertices.
struct QuotientReport {
    Graph path;
    std::vector<int> class_of;  // ambient vertex -> path index
    Configuration path_config;
    int low_state = 0;   // the smaller of the two states (its layers sit left)
    int high_state = 0;
    bool class_adjacency_ok = false;  // no ambient edge skips a layer
};

QuotientReport two_state_quotient(const Graph& g, const Configuration& x0);

/// Outcome of one claim of the branch-alignment analysis, with the earliest
/// counterexample time when it fails.
struct ClaimResult {
    bool pass = false;
    std::optional<long long> counterexample_time;
};

/// Tracks a small-width branch until its center trails every leaf, with each
/// leaf inside the half-circle ahead of the center, then checks that the
/// alignment is permanent, the width stays bounded, and the leaves stop
/// mattering to the rest of the graph.  A blink only holds vertices ahead of
/// the blinker, so a trailing center is never held by a leaf.
struct BranchWidthReport {
    int period = 0;
    Star branch;
    int initial_branch_width = 0;
    std::optional<long long> alignment_time;  // first time center trails all leaves
    ClaimResult alignment_reached;   // in time period*(width+1), width not increased
    ClaimResult stays_aligned;       // center trails all leaves ever after
    ClaimResult width_bounded;       // branch width never exceeds initial+1
    ClaimResult leaves_droppable;    // dynamics restrict on graph-minus-leaves from alignment on
    std::optional<long long> restriction_start;
    ClaimResult single_leaf_bound;   // for 1-branches: restriction start within the closed form
    bool all_pass = false;
};

BranchWidthReport verify_branch_width(const Graph& g, const Star& branch,
                                      const Configuration& x0,
                                      std::optional<long long> cap = std::nullopt,
                                      PullAudit* audit = nullptr);

/// A named (graph, configuration) pair built to break a claimed behavior.
struct CounterexampleInstance {
    std::string kind;
    Graph graph;
    Configuration config;
};

/// Tree with a hub of degree >= period: hub parked past the half turn, each
/// hub-free component painted with a single state by component index.
CounterexampleInstance high_degree_tree_counterexample(const Graph& tree, int period);

/// Triangle with states {0, q, 2q} under period 2q+1.
CounterexampleInstance k3_three_state_counterexample(int q);

/// Exhaustive hunt for a star configuration where every vertex keeps blinking
/// on the limit cycle yet the network never synchronizes.
struct StarSearchResult {
    Graph graph;
    int period = 0;
    std::uint64_t configs_checked = 0;
    std::optional<Configuration> witness;  // lexicographically least
};

StarSearchResult star_all_blinking_search(int leaf_count = 4, int period = 7, int jobs = 1,
                                          PullAudit* audit = nullptr);

}  // namespace firefly
