#include "firefly/tree_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace firefly {

namespace {

std::string rooted_code(const Graph& tree, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int u : tree.neighbors(v)) {
        if (u != parent) child_codes.push_back(rooted_code(tree, u, v));
    }
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

}  // namespace

std::string canonical_tree_code(const Graph& tree) {
    if (!structural_queries(tree).is_tree) {
        throw std::invalid_argument("canonical code requires a tree");
    }
    std::string best;
    for (int root = 0; root < tree.vertex_count(); ++root) {
        std::string code = rooted_code(tree, root, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

Graph tree_from_pruefer(const std::vector<int>& sequence, int vertex_count) {
    if (vertex_count < 2) throw std::invalid_argument("need >= 2 vertices");
    if (static_cast<int>(sequence.size()) != vertex_count - 2) {
        throw std::invalid_argument("sequence length must be vertex_count - 2");
    }
    std::vector<int> remaining_degree(static_cast<std::size_t>(vertex_count), 1);
    for (int v : sequence) {
        if (v < 0 || v >= vertex_count) throw std::invalid_argument("sequence entry out of range");
        ++remaining_degree[static_cast<std::size_t>(v)];
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(static_cast<std::size_t>(vertex_count), false);
    for (int code_entry : sequence) {
        for (int leaf = 0; leaf < vertex_count; ++leaf) {
            if (!used[static_cast<std::size_t>(leaf)] &&
                remaining_degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.emplace_back(leaf, code_entry);
                used[static_cast<std::size_t>(leaf)] = true;
                --remaining_degree[static_cast<std::size_t>(code_entry)];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int v = 0; v < vertex_count; ++v) {
        if (!used[static_cast<std::size_t>(v)] &&
            remaining_degree[static_cast<std::size_t>(v)] == 1) {
            last.push_back(v);
        }
    }
    if (last.size() != 2) throw std::logic_error("pruefer decode invariant broken");
    edges.emplace_back(last[0], last[1]);
    return Graph(vertex_count, std::move(edges));
}

std::vector<Graph> all_labeled_graphs(int vertex_count, bool connected_only) {
    if (vertex_count < 1) throw std::invalid_argument("need >= 1 vertex");
    if (vertex_count > 6) throw std::invalid_argument("labeled enumeration capped at 6 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> graphs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1u) edges.push_back(pairs[i]);
        }
        Graph g(vertex_count, std::move(edges));
        if (!connected_only || is_connected(g)) graphs.push_back(std::move(g));
    }
    return graphs;
}

std::vector<CatalogTree> nonisomorphic_trees(int vertex_count) {
    if (vertex_count < 1) throw std::invalid_argument("need >= 1 vertex");
    std::map<std::string, Graph> by_code;
    if (vertex_count == 1) {
        by_code.emplace("()", Graph(1, {}));
    } else if (vertex_count == 2) {
        by_code.emplace(canonical_tree_code(Graph(2, {{0, 1}})), Graph(2, {{0, 1}}));
    } else {
        std::vector<int> sequence(static_cast<std::size_t>(vertex_count - 2), 0);
        for (;;) {
            Graph tree = tree_from_pruefer(sequence, vertex_count);
            by_code.emplace(canonical_tree_code(tree), tree);
            int pos = static_cast<int>(sequence.size()) - 1;
            while (pos >= 0 && sequence[static_cast<std::size_t>(pos)] == vertex_count - 1) {
                sequence[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++sequence[static_cast<std::size_t>(pos)];
        }
    }
    std::vector<CatalogTree> catalog;
    catalog.reserve(by_code.size());
    for (auto& [code, tree] : by_code) {
        catalog.push_back(CatalogTree{std::move(tree), code});
    }
    return catalog;
}

}  // namespace firefly
