#include "firefly/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace firefly {

namespace {

void check_vertex(int v, int count) {
    if (v < 0 || v >= count) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(count) + ")");
    }
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edge_list) {
        check_vertex(u, vertex_count_);
        check_vertex(v, vertex_count_);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adjacency_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v, vertex_count_);
    return adjacency_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, vertex_count_);
    check_vertex(v, vertex_count_);
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Graph make_path(int m) {
    if (m < 1) throw std::invalid_argument("path needs >= 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return Graph(m, std::move(edges));
}

Graph make_cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, m - 1);
    return Graph(m, std::move(edges));
}

Graph make_star(int k) {
    if (k < 1) throw std::invalid_argument("star needs >= 1 leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph(k + 1, std::move(edges));
}

Graph make_complete(int m) {
    if (m < 1) throw std::invalid_argument("complete graph needs >= 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return Graph(m, std::move(edges));
}

Graph make_tree(const std::vector<std::pair<int, int>>& edge_list) {
    int max_vertex = -1;
    for (const auto& [u, v] : edge_list) max_vertex = std::max({max_vertex, u, v});
    Graph g(max_vertex + 1, edge_list);
    const auto report = structural_queries(g);
    if (!report.is_tree) throw std::invalid_argument("edge list does not describe a tree");
    return g;
}

Graph parse_family(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("family spec needs the form name:arg, got '" + spec + "'");
    }
    const std::string name = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (name == "tree") {
        std::vector<std::pair<int, int>> edges;
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto dash = item.find('-');
            if (dash == std::string::npos) {
                throw std::invalid_argument("tree edge '" + item + "' needs the form u-v");
            }
            edges.emplace_back(std::stoi(item.substr(0, dash)),
                               std::stoi(item.substr(dash + 1)));
        }
        return make_tree(edges);
    }
    int count = 0;
    try {
        std::size_t used = 0;
        count = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad family argument '" + arg + "' in '" + spec + "'");
    }
    if (name == "path") return make_path(count);
    if (name == "cycle") return make_cycle(count);
    if (name == "star") return make_star(count);
    if (name == "complete") return make_complete(count);
    throw std::invalid_argument("unknown graph family '" + name + "'");
}

bool is_connected(const Graph& g) {
    const auto labels = component_labels(g);
    return labels.empty() || std::all_of(labels.begin(), labels.end(),
                                         [](int c) { return c == 0; });
}

std::vector<int> component_labels(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        std::queue<int> frontier;
        frontier.push(s);
        label[static_cast<std::size_t>(s)] = next;
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            for (int u : g.neighbors(v)) {
                if (label[static_cast<std::size_t>(u)] == -1) {
                    label[static_cast<std::size_t>(u)] = next;
                    frontier.push(u);
                }
            }
        }
        ++next;
    }
    return label;
}

StructureReport structural_queries(const Graph& g) {
    StructureReport report;
    report.is_connected = is_connected(g);
    report.is_tree =
        report.is_connected && g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        report.max_degree = std::max(report.max_degree, g.degree(v));
    }
    return report;
}

std::vector<Star> find_stars_and_branches(const Graph& g) {
    std::vector<Star> stars;
    for (int c = 0; c < g.vertex_count(); ++c) {
        Star star;
        star.center = c;
        std::vector<int> other;
        for (int u : g.neighbors(c)) {
            if (g.degree(u) == 1) {
                star.leaves.push_back(u);
            } else {
                other.push_back(u);
            }
        }
        if (star.leaves.empty()) continue;
        if (other.size() == 1) star.root = other.front();
        stars.push_back(std::move(star));
    }
    return stars;
}

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& remove) {
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : remove) {
        check_vertex(v, g.vertex_count());
        removed[static_cast<std::size_t>(v)] = true;
    }
    DeletionResult result;
    result.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        result.old_to_new[static_cast<std::size_t>(v)] =
            static_cast<int>(result.new_to_old.size());
        result.new_to_old.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        const int nu = result.old_to_new[static_cast<std::size_t>(u)];
        const int nv = result.old_to_new[static_cast<std::size_t>(v)];
        if (nu != -1 && nv != -1) edges.emplace_back(nu, nv);
    }
    result.graph = Graph(static_cast<int>(result.new_to_old.size()), std::move(edges));
    return result;
}

bool is_connected_subset(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) return false;
    std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : subset) {
        check_vertex(v, g.vertex_count());
        member[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::queue<int> frontier;
    frontier.push(subset.front());
    seen[static_cast<std::size_t>(subset.front())] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int u : g.neighbors(v)) {
            if (member[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                frontier.push(u);
            }
        }
    }
    int distinct = 0;
    for (std::size_t i = 0; i < member.size(); ++i) distinct += member[i];
    return reached == distinct;
}

}  // namespace firefly
