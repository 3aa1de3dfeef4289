#pragma once

#include <string>
#include <vector>

#include "firefly/graph.hpp"

namespace firefly {

/// Root-independent canonical form: parenthesized subtree codes, children
/// sorted, minimized over the choice of root.  Equal codes ⟺ isomorphic trees.
std::string canonical_tree_code(const Graph& tree);

struct CatalogTree {
    Graph tree;
    std::string code;
};

/// One representative per isomorphism class of trees on `vertex_count`
/// vertices, ordered by canonical code.  Built by decoding every Pruefer
/// sequence and deduplicating, which is exhaustive by construction.
std::vector<CatalogTree> nonisomorphic_trees(int vertex_count);

/// Decodes a Pruefer sequence over {0,…,m−1} (length m−2) into its tree.
Graph tree_from_pruefer(const std::vector<int>& sequence, int vertex_count);

/// Every labeled graph on `vertex_count` vertices (edge-subset enumeration),
/// optionally filtered to connected ones.  Meant for tiny vertex counts.
std::vector<Graph> all_labeled_graphs(int vertex_count, bool connected_only);

}  // namespace firefly
