#include "firefly/generate.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "firefly/tree_enum.hpp"

namespace firefly {

Graph random_connected_graph(SplitMix64& rng, int vertex_count, double extra_edge_prob) {
    if (vertex_count < 1) throw std::invalid_argument("need >= 1 vertex");
    if (vertex_count == 1) return Graph(1, {});
    std::vector<std::pair<int, int>> edges;
    if (vertex_count == 2) {
        edges.emplace_back(0, 1);
    } else {
        std::vector<int> sequence(static_cast<std::size_t>(vertex_count - 2));
        for (int& entry : sequence) {
            entry = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(vertex_count)));
        }
        edges = tree_from_pruefer(sequence, vertex_count).edges();
    }
    Graph backbone(vertex_count, edges);
    for (int u = 0; u < vertex_count; ++u) {
        for (int v = u + 1; v < vertex_count; ++v) {
            if (!backbone.has_edge(u, v) && rng.next_double() < extra_edge_prob) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(vertex_count, std::move(edges));
}

Configuration random_configuration(SplitMix64& rng, const Graph& g, int period) {
    if (period < 3) throw std::invalid_argument("period must be >= 3");
    Configuration x;
    x.period = period;
    x.states.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        x.states.push_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(period))));
    }
    return x;
}

Configuration random_two_state_configuration(SplitMix64& rng, const Graph& g, int period) {
    if (period < 3) throw std::invalid_argument("period must be >= 3");
    if (g.vertex_count() < 2) throw std::invalid_argument("need >= 2 vertices for two states");
    const int first = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(period)));
    const int second =
        (first + 1 +
         static_cast<int>(rng.next_below(static_cast<std::uint64_t>(period - 1)))) %
        period;
    Configuration x;
    x.period = period;
    x.states.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        x.states.push_back(rng.next_u64() & 1u ? second : first);
    }
    // Both states must actually appear.
    bool has_first = false;
    bool has_second = false;
    for (int s : x.states) {
        has_first = has_first || s == first;
        has_second = has_second || s == second;
    }
    if (!has_first) x.states[0] = first;
    if (!has_second) x.states[0] = second;
    return x;
}

Configuration random_small_width_configuration(SplitMix64& rng, const Graph& g, int period) {
    if (period < 3) throw std::invalid_argument("period must be >= 3");
    const int arc_start = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(period)));
    const int arc_width = (period - 1) / 2;  // 2*arc_width < period
    Configuration x;
    x.period = period;
    x.states.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int offset =
            static_cast<int>(rng.next_below(static_cast<std::uint64_t>(arc_width + 1)));
        x.states.push_back((arc_start + offset) % period);
    }
    return x;
}

}  // namespace firefly
