#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace firefly {

/// Finite simple undirected graph over dense 0-indexed vertices.
/// Immutable after construction; all surgery returns new graphs, so instances
/// are freely shareable across concurrent sweeps.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Normalized edge list: u < v, sorted lexicographically, no duplicates.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

Graph make_path(int m);
Graph make_cycle(int m);
Graph make_star(int k);  // K_{1,k}, center 0, leaves 1..k
Graph make_complete(int m);

/// Builds a tree from an explicit edge list; rejects cycles and disconnection.
Graph make_tree(const std::vector<std::pair<int, int>>& edge_list);

/// Parses a family spec like "path:5", "cycle:4", "star:3", "complete:3",
/// or "tree:0-1,1-2,1-3".
Graph parse_family(const std::string& spec);

struct StructureReport {
    bool is_connected = false;
    bool is_tree = false;
    int max_degree = 0;
};

StructureReport structural_queries(const Graph& g);

bool is_connected(const Graph& g);

/// Connected-component labels, 0-based, in order of first appearance.
std::vector<int> component_labels(const Graph& g);

/// A maximal star: a center together with all of its degree-1 neighbors.
/// `root` is set exactly when the center has a single non-leaf neighbor,
/// which makes the star a branch.
struct Star {
    int center = -1;
    std::vector<int> leaves;  // sorted, nonempty
    std::optional<int> root;

    int k() const { return static_cast<int>(leaves.size()); }
    bool is_branch() const { return root.has_value(); }
};

std::vector<Star> find_stars_and_branches(const Graph& g);

struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;
};

/// Induced subgraph on V minus `remove`, with a stable index remapping.
DeletionResult delete_vertices(const Graph& g, const std::vector<int>& remove);

/// Whether the induced subgraph on `subset` is connected (false for empty).
bool is_connected_subset(const Graph& g, const std::vector<int>& subset);

}  // namespace firefly
