#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "firefly/graph.hpp"

namespace firefly {

/// Number of internal states each oscillator cycles through, plus the state
/// assignment itself.  `period` is the modulus; states live in {0,…,period−1}.
struct Configuration {
    int period = 0;
    std::vector<int> states;

    bool operator==(const Configuration&) const = default;
};

/// Phase each oscillator would need to blink "on schedule", together with the
/// moving reference state that marks which absolute state currently blinks.
struct RelativeConfiguration {
    int period = 0;
    int activator_state = 0;
    std::vector<int> states;

    bool operator==(const RelativeConfiguration&) const = default;
};

/// The distinguished state whose visit counts as a blink.
constexpr int blinking_state(int period) { return (period - 1) / 2; }

bool is_constant(const Configuration& x);

void validate(const Graph& g, const Configuration& x);
void validate(const Graph& g, const RelativeConfiguration& y);

/// One synchronous update.  `pulls` lists (puller, held) pairs: one entry per
/// blinking neighbor of each vertex that is held in place this step.
struct StepResult {
    Configuration next;
    std::vector<std::pair<int, int>> pulls;
};

StepResult step(const Graph& g, const Configuration& x);

/// Synchronous update in the co-rotating frame: the activator state drops by
/// one each step, and a vertex drops with it exactly when a blinking neighbor
/// trails it by at most half a revolution.
RelativeConfiguration step_relative(const Graph& g, const RelativeConfiguration& y);

/// Variant that admits displacement 0 into the pull window (the looser reading
/// of the update rule).  Kept only as a diagnostic target; it disagrees with
/// `step` on constant configurations and must not be used for analysis.
RelativeConfiguration step_relative_literal(const Graph& g, const RelativeConfiguration& y);

RelativeConfiguration to_relative(const Configuration& x, long long t);
Configuration from_relative(const RelativeConfiguration& y, long long t);

/// (x[v] − x[u]) mod period: how far v sits ahead of u going clockwise.
int displacement(const Configuration& x, int u, int v);
bool is_clockwise(const Configuration& x, int u, int v);   // displacement < period/2
bool is_opposite(const Configuration& x, int u, int v);    // displacement = period/2

/// Length of the shortest "arc" of states covering the chosen vertices:
/// min over v of max over u of displacement(u, v).
int width(const Configuration& x);
int width(const Configuration& x, const std::vector<int>& subset);

struct PullEvent {
    long long time = 0;
    int puller = -1;
    int held = -1;

    bool operator==(const PullEvent&) const = default;
};

/// Fully resolved orbit: trajectory up to the first repeat, split into
/// transient prefix and limit cycle, with blink and pull logs over that range.
struct Orbit {
    Configuration initial;
    bool truncated = false;
    long long transient_length = 0;
    long long cycle_length = 0;
    std::vector<Configuration> trajectory;  // X_0 … X_{transient+cycle-1}
    std::optional<long long> sync_time;
    std::vector<std::vector<long long>> blink_times;  // per vertex, times < transient+cycle
    std::vector<PullEvent> pull_events;

    long long length() const { return transient_length + cycle_length; }
};

/// Iterates `step` until the first repeated configuration.  Without an
/// explicit cap, state spaces up to 2^40 configurations get the always-safe
/// cap period^|V|+1; beyond that a cap is mandatory.  Hitting the cap yields
/// truncated=true with the prefix trajectory, never a silent wrap.
Orbit compute_orbit(const Graph& g, const Configuration& x0,
                    std::optional<long long> cap = std::nullopt);

/// True when v blinks somewhere on the limit cycle (and therefore at
/// arbitrarily late times).  Rejects truncated orbits.
bool blinks_infinitely(const Orbit& orbit, int v);

/// A vertex subset together with its induced subgraph and the index remap.
struct SubgraphWindow {
    std::vector<int> vertices;   // sorted ambient ids, nonempty
    Graph induced;               // relabeled 0..k-1 following `vertices`
    std::vector<int> old_to_new; // ambient -> induced, -1 outside
};

SubgraphWindow make_window(const Graph& g, std::vector<int> vertices);

enum class RestrictionMode { from_start, eventually };

struct RestrictionReport {
    bool holds = false;
    std::optional<long long> start_time;  // smallest time from which it holds
};

/// Does stepping in the ambient graph then restricting equal restricting then
/// stepping in the induced subgraph?  `from_start` demands it at every orbit
/// time; `eventually` finds the earliest suffix (the whole limit cycle must
/// comply for any suffix to exist).
RestrictionReport restricts_on(const Graph& g, const Configuration& x0,
                               const SubgraphWindow& window, RestrictionMode mode,
                               std::optional<long long> cap = std::nullopt);

/// Same check against an orbit that the caller already computed (must belong
/// to g).  Lets subgraph sweeps reuse one orbit across many windows.
RestrictionReport restricts_on(const Graph& g, const Orbit& orbit,
                               const SubgraphWindow& window, RestrictionMode mode);

/// Thread-safe tally of the inhibitory-coupling check: every pull must come
/// from a vertex at most half a revolution behind the held one (never ahead,
/// never level).  Shared across sweeps so one report covers everything.
struct PullAudit {
    std::atomic<std::uint64_t> checked{0};
    std::atomic<std::uint64_t> violations{0};

    void record(const Orbit& orbit);
};

}  // namespace firefly
