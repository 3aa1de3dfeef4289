#include "firefly/dynamics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace firefly {

namespace {

int positive_mod(long long value, int modulus) {
    const long long r = value % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

void check_period(int period) {
    if (period < 3) throw std::invalid_argument("period must be >= 3");
}

void check_states(const Graph& g, int period, const std::vector<int>& states) {
    check_period(period);
    if (static_cast<int>(states.size()) != g.vertex_count()) {
        throw std::invalid_argument("configuration size does not match vertex count");
    }
    for (int s : states) {
        if (s < 0 || s >= period) {
            throw std::invalid_argument("state " + std::to_string(s) + " outside [0, " +
                                        std::to_string(period) + ")");
        }
    }
}

}  // namespace

bool is_constant(const Configuration& x) {
    return std::all_of(x.states.begin(), x.states.end(),
                       [&](int s) { return s == x.states.front(); }) ||
           x.states.empty();
}

void validate(const Graph& g, const Configuration& x) { check_states(g, x.period, x.states); }

void validate(const Graph& g, const RelativeConfiguration& y) {
    check_states(g, y.period, y.states);
    if (y.activator_state < 0 || y.activator_state >= y.period) {
        throw std::invalid_argument("activator state outside [0, period)");
    }
}

StepResult step(const Graph& g, const Configuration& x) {
    validate(g, x);
    const int n = x.period;
    const int blink = blinking_state(n);
    StepResult result;
    result.next.period = n;
    result.next.states.resize(x.states.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool held = false;
        if (x.states[static_cast<std::size_t>(v)] > blink) {
            for (int u : g.neighbors(v)) {
                if (x.states[static_cast<std::size_t>(u)] == blink) {
                    held = true;
                    result.pulls.emplace_back(u, v);
                }
            }
        }
        result.next.states[static_cast<std::size_t>(v)] =
            held ? x.states[static_cast<std::size_t>(v)]
                 : (x.states[static_cast<std::size_t>(v)] + 1) % n;
    }
    return result;
}

namespace {

RelativeConfiguration step_relative_windowed(const Graph& g, const RelativeConfiguration& y,
                                             int window_low) {
    validate(g, y);
    const int n = y.period;
    RelativeConfiguration result;
    result.period = n;
    result.activator_state = positive_mod(y.activator_state - 1, n);
    result.states.resize(y.states.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool pulled = false;
        for (int u : g.neighbors(v)) {
            if (y.states[static_cast<std::size_t>(u)] != y.activator_state) continue;
            const int gap = positive_mod(y.states[static_cast<std::size_t>(v)] -
                                             y.states[static_cast<std::size_t>(u)],
                                         n);
            if (gap >= window_low && 2 * gap <= n) {
                pulled = true;
                break;
            }
        }
        result.states[static_cast<std::size_t>(v)] =
            pulled ? positive_mod(y.states[static_cast<std::size_t>(v)] - 1, n)
                   : y.states[static_cast<std::size_t>(v)];
    }
    return result;
}

}  // namespace

RelativeConfiguration step_relative(const Graph& g, const RelativeConfiguration& y) {
    return step_relative_windowed(g, y, 1);
}

RelativeConfiguration step_relative_literal(const Graph& g, const RelativeConfiguration& y) {
    return step_relative_windowed(g, y, 0);
}

RelativeConfiguration to_relative(const Configuration& x, long long t) {
    check_period(x.period);
    RelativeConfiguration y;
    y.period = x.period;
    y.activator_state = positive_mod(blinking_state(x.period) - t, x.period);
    y.states.reserve(x.states.size());
    for (int s : x.states) y.states.push_back(positive_mod(s - t, x.period));
    return y;
}

Configuration from_relative(const RelativeConfiguration& y, long long t) {
    check_period(y.period);
    Configuration x;
    x.period = y.period;
    x.states.reserve(y.states.size());
    for (int s : y.states) x.states.push_back(positive_mod(s + t, y.period));
    return x;
}

int displacement(const Configuration& x, int u, int v) {
    check_period(x.period);
    return positive_mod(x.states.at(static_cast<std::size_t>(v)) -
                            x.states.at(static_cast<std::size_t>(u)),
                        x.period);
}

bool is_clockwise(const Configuration& x, int u, int v) {
    return 2 * displacement(x, u, v) < x.period;
}

bool is_opposite(const Configuration& x, int u, int v) {
    return 2 * displacement(x, u, v) == x.period;
}

int width(const Configuration& x) {
    std::vector<int> all(x.states.size());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
    return width(x, all);
}

int width(const Configuration& x, const std::vector<int>& subset) {
    check_period(x.period);
    if (subset.empty()) throw std::invalid_argument("width of empty vertex set");
    int best = x.period;  // strictly above any attainable value
    for (int v : subset) {
        int worst = 0;
        for (int u : subset) worst = std::max(worst, displacement(x, u, v));
        best = std::min(best, worst);
    }
    return best;
}

Orbit compute_orbit(const Graph& g, const Configuration& x0, std::optional<long long> cap) {
    validate(g, x0);
    const int n = x0.period;
    const int vertex_count = g.vertex_count();

    // bits needed per vertex state; total must fit the packing budget.
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    const bool packable = vertex_count * bits <= 64;
    const bool small_space = vertex_count * bits <= 40;

    long long step_cap = 0;
    if (cap.has_value()) {
        if (*cap < 0) throw std::invalid_argument("negative orbit cap");
        step_cap = *cap;
    } else if (small_space) {
        long long configs = 1;
        for (int v = 0; v < vertex_count; ++v) configs *= n;
        step_cap = configs + 1;
    } else {
        throw std::invalid_argument(
            "state space too large for the automatic cap; pass an explicit cap");
    }

    Orbit orbit;
    orbit.initial = x0;
    orbit.trajectory.push_back(x0);

    const auto pack = [&](const Configuration& x) {
        std::uint64_t key = 0;
        for (int s : x.states) key = (key << bits) | static_cast<std::uint64_t>(s);
        return key;
    };

    std::unordered_map<std::uint64_t, long long> seen_packed;
    std::map<std::vector<int>, long long> seen_raw;
    const auto lookup_or_insert = [&](const Configuration& x,
                                      long long time) -> std::optional<long long> {
        if (packable) {
            const auto [it, inserted] = seen_packed.try_emplace(pack(x), time);
            if (inserted) return std::nullopt;
            return it->second;
        }
        const auto [it, inserted] = seen_raw.try_emplace(x.states, time);
        if (inserted) return std::nullopt;
        return it->second;
    };

    lookup_or_insert(x0, 0);
    bool closed = false;
    for (long long t = 0; t < step_cap; ++t) {
        StepResult sr = step(g, orbit.trajectory.back());
        for (const auto& [puller, held] : sr.pulls) {
            orbit.pull_events.push_back(PullEvent{t, puller, held});
        }
        const auto previous = lookup_or_insert(sr.next, t + 1);
        if (previous.has_value()) {
            orbit.transient_length = *previous;
            orbit.cycle_length = t + 1 - *previous;
            closed = true;
            break;
        }
        orbit.trajectory.push_back(std::move(sr.next));
    }

    if (!closed) {
        orbit.truncated = true;
        orbit.transient_length = static_cast<long long>(orbit.trajectory.size());
        orbit.cycle_length = 0;
    }

    orbit.blink_times.assign(static_cast<std::size_t>(vertex_count), {});
    const int blink = blinking_state(n);
    for (long long t = 0; t < static_cast<long long>(orbit.trajectory.size()); ++t) {
        const auto& states = orbit.trajectory[static_cast<std::size_t>(t)].states;
        for (int v = 0; v < vertex_count; ++v) {
            if (states[static_cast<std::size_t>(v)] == blink) {
                orbit.blink_times[static_cast<std::size_t>(v)].push_back(t);
            }
        }
    }

    if (closed) {
        // Constancy is absorbing, so the first constant configuration (if any)
        // starts the all-constant tail that the limit cycle consists of.
        for (long long t = 0; t < static_cast<long long>(orbit.trajectory.size()); ++t) {
            if (is_constant(orbit.trajectory[static_cast<std::size_t>(t)])) {
                orbit.sync_time = t;
                break;
            }
        }
    }
    return orbit;
}

bool blinks_infinitely(const Orbit& orbit, int v) {
    if (orbit.truncated) throw std::invalid_argument("orbit truncated; raise the cap");
    if (v < 0 || v >= static_cast<int>(orbit.blink_times.size())) {
        throw std::invalid_argument("vertex out of range");
    }
    const long long cycle_start = orbit.transient_length;
    const auto& times = orbit.blink_times[static_cast<std::size_t>(v)];
    return std::any_of(times.begin(), times.end(),
                       [&](long long t) { return t >= cycle_start; });
}

SubgraphWindow make_window(const Graph& g, std::vector<int> vertices) {
    if (vertices.empty()) throw std::invalid_argument("empty subgraph window");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    SubgraphWindow window;
    window.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const int v = vertices[i];
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("window vertex out of range");
        }
        window.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        const int nu = window.old_to_new[static_cast<std::size_t>(u)];
        const int nv = window.old_to_new[static_cast<std::size_t>(v)];
        if (nu != -1 && nv != -1) edges.emplace_back(nu, nv);
    }
    window.induced = Graph(static_cast<int>(vertices.size()), std::move(edges));
    window.vertices = std::move(vertices);
    return window;
}

namespace {

Configuration restrict_config(const Configuration& x, const SubgraphWindow& window) {
    Configuration restricted;
    restricted.period = x.period;
    restricted.states.reserve(window.vertices.size());
    for (int v : window.vertices) {
        restricted.states.push_back(x.states[static_cast<std::size_t>(v)]);
    }
    return restricted;
}

}  // namespace

RestrictionReport restricts_on(const Graph& g, const Configuration& x0,
                               const SubgraphWindow& window, RestrictionMode mode,
                               std::optional<long long> cap) {
    return restricts_on(g, compute_orbit(g, x0, cap), window, mode);
}

RestrictionReport restricts_on(const Graph& g, const Orbit& orbit,
                               const SubgraphWindow& window, RestrictionMode mode) {
    if (orbit.truncated) throw std::invalid_argument("orbit truncated; raise the cap");

    const long long total = orbit.length();
    std::vector<char> holds_at(static_cast<std::size_t>(total), 0);
    for (long long t = 0; t < total; ++t) {
        const Configuration& here = orbit.trajectory[static_cast<std::size_t>(t)];
        const Configuration ambient_then_restrict = restrict_config(step(g, here).next, window);
        const Configuration restrict_then_induced =
            step(window.induced, restrict_config(here, window)).next;
        holds_at[static_cast<std::size_t>(t)] =
            ambient_then_restrict == restrict_then_induced ? 1 : 0;
    }

    RestrictionReport report;
    if (mode == RestrictionMode::from_start) {
        report.holds = std::all_of(holds_at.begin(), holds_at.end(), [](char h) { return h; });
        if (report.holds) report.start_time = 0;
        return report;
    }

    // A suffix exists only if the whole limit cycle complies (those times recur).
    for (long long t = orbit.transient_length; t < total; ++t) {
        if (!holds_at[static_cast<std::size_t>(t)]) return report;  // holds=false
    }
    long long start = orbit.transient_length;
    while (start > 0 && holds_at[static_cast<std::size_t>(start - 1)]) --start;
    report.holds = true;
    report.start_time = start;
    return report;
}

void PullAudit::record(const Orbit& orbit) {
    const int period = orbit.initial.period;
    for (const auto& event : orbit.pull_events) {
        const auto& at = orbit.trajectory[static_cast<std::size_t>(event.time)];
        const int gap = displacement(at, event.puller, event.held);
        checked.fetch_add(1, std::memory_order_relaxed);
        if (gap < 1 || 2 * gap > period) {
            violations.fetch_add(1, std::memory_order_relaxed);
        }
    }
}

}  // namespace firefly
