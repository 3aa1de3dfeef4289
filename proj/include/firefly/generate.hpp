#pragma once

#include "firefly/dynamics.hpp"
#include "firefly/graph.hpp"
#include "firefly/rng.hpp"

namespace firefly {

/// Random connected graph: a uniform random labeled tree backbone plus each
/// remaining vertex pair independently with `extra_edge_prob`.
Graph random_connected_graph(SplitMix64& rng, int vertex_count, double extra_edge_prob);

/// Uniform random configuration.
Configuration random_configuration(SplitMix64& rng, const Graph& g, int period);

/// Random configuration using exactly two distinct states (both present).
Configuration random_two_state_configuration(SplitMix64& rng, const Graph& g, int period);

/// Random configuration whose states sit inside one arc shorter than half the
/// period, so its width is strictly below period/2.
Configuration random_small_width_configuration(SplitMix64& rng, const Graph& g, int period);

}  // namespace firefly
