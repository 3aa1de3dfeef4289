#pragma once

// Reference implementations written directly from the model definition, kept
// deliberately naive and independent of the library internals.  Tests compare
// library output against these, so any shared bug would have to be introduced
// twice.

#include <optional>
#include <vector>

#include "firefly/graph.hpp"

namespace oracle {

struct NaiveOrbit {
    std::vector<std::vector<int>> trajectory;  // X_0 .. X_{transient+cycle-1}
    long long transient = 0;
    long long cycle = 0;
    std::optional<long long> sync_time;
};

inline bool naive_constant(const std::vector<int>& states) {
    for (int s : states) {
        if (s != states.front()) return false;
    }
    return true;
}

// One synchronous update: a vertex keeps its state exactly when it is past
// the blinking state and hears at least one blinking neighbor; otherwise it
// advances one tick around the cycle.
inline std::vector<int> naive_step(const firefly::Graph& g, int period,
                                   const std::vector<int>& states) {
    const int blink = (period - 1) / 2;
    std::vector<int> next(states.size(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool held = false;
        if (states[v] > blink) {
            for (int u = 0; u < g.vertex_count(); ++u) {
                if (g.has_edge(u, v) && states[u] == blink) held = true;
            }
        }
        next[v] = held ? states[v] : (states[v] + 1) % period;
    }
    return next;
}

// Smallest arc of the state circle covering every chosen vertex, scanning all
// possible arc start points rather than only realized states.
inline int naive_width(int period, const std::vector<int>& states,
                       const std::vector<int>& subset) {
    int best = period;
    for (int start = 0; start < period; ++start) {
        int reach = 0;
        for (int v : subset) {
            const int gap = ((states[v] - start) % period + period) % period;
            if (gap > reach) reach = gap;
        }
        if (reach < best) best = reach;
    }
    return best;
}

inline int naive_width(int period, const std::vector<int>& states) {
    std::vector<int> all(states.size());
    for (int v = 0; v < static_cast<int>(states.size()); ++v) all[v] = v;
    return naive_width(period, states, all);
}

// Iterates naive_step until the first repeat, locating the repeat by linear
// scan over the whole history.
inline NaiveOrbit naive_orbit(const firefly::Graph& g, int period,
                              const std::vector<int>& start) {
    NaiveOrbit out;
    std::vector<int> current = start;
    for (;;) {
        for (long long t = 0; t < static_cast<long long>(out.trajectory.size()); ++t) {
            if (out.trajectory[t] == current) {
                out.transient = t;
                out.cycle = static_cast<long long>(out.trajectory.size()) - t;
                for (long long s = 0; s < static_cast<long long>(out.trajectory.size()); ++s) {
                    if (naive_constant(out.trajectory[s])) {
                        out.sync_time = s;
                        break;
                    }
                }
                return out;
            }
        }
        out.trajectory.push_back(current);
        current = naive_step(g, period, current);
    }
}

}  // namespace oracle
