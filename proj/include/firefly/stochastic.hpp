#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "firefly/dynamics.hpp"
#include "firefly/graph.hpp"
#include "firefly/rng.hpp"

namespace firefly {

/// Which layer the per-step randomness lives in: edges dropping (a pulse may
/// fail to be received) or vertices going dark (a pulse may fail to be sent).
enum class NoiseMode { edge_reception, vertex_emission };

struct NoiseModel {
    NoiseMode mode = NoiseMode::edge_reception;
    // Presence probabilities, strictly inside (0,1): one per edge in the
    // graph's normalized edge order, or one per vertex.
    std::vector<double> probabilities;
};

NoiseModel uniform_edge_noise(const Graph& g, double p);
NoiseModel uniform_vertex_noise(const Graph& g, double p);
void validate(const Graph& g, const NoiseModel& noise);

/// Presence flags for one step: per edge or per vertex, 1 = present.
using Mask = std::vector<std::uint8_t>;

/// One randomized update under an explicit presence mask.  An absent edge
/// hides its endpoints from each other; an absent vertex still updates its
/// own state but is invisible as a blinker.
Configuration step_stochastic(const Graph& g, const Configuration& x, const NoiseModel& noise,
                              const Mask& mask);

/// Reusable sampler/stepper pair for hot Monte Carlo loops.
class MaskedStepper {
public:
    MaskedStepper(const Graph& g, NoiseModel noise);

    Configuration step(const Configuration& x, const Mask& mask) const;
    Mask sample_mask(SplitMix64& rng) const;
    const NoiseModel& noise() const { return noise_; }

private:
    const Graph* graph_;
    NoiseModel noise_;
    // per vertex: (neighbor, index of the joining edge)
    std::vector<std::vector<std::pair<int, int>>> incidence_;
};

struct AbsorptionResult {
    bool absorbed = false;
    std::optional<long long> steps_to_sync;
    std::uint64_t seed = 0;
    long long cap = 0;
};

/// Runs the randomized dynamic until the first constant configuration or the
/// step cap; fully reproducible from the seed.
AbsorptionResult mc_run(const Graph& g, const Configuration& x0, const NoiseModel& noise,
                        std::uint64_t seed, long long cap);

struct EnsembleReport {
    std::uint64_t runs = 0;
    std::uint64_t absorbed = 0;
    double mean_steps = 0.0;  // over absorbed runs
    long long max_steps = 0;  // over absorbed runs
    std::uint64_t base_seed = 0;
    long long cap = 0;
    std::vector<AbsorptionResult> results;  // by run index
};

/// Independent runs with per-run seeds derived from (base_seed, run index),
/// so any parallel schedule reproduces the serial statistics bit-for-bit.
EnsembleReport mc_ensemble(const Graph& g, const Configuration& x0, const NoiseModel& noise,
                           std::uint64_t runs, std::uint64_t base_seed, long long cap,
                           int jobs = 1);

/// Exact absorbing-chain analysis on a fully materialized state space: all
/// non-constant configurations plus one lumped "sync" macro-state.
struct ChainReport {
    int period = 0;
    std::uint64_t state_count = 0;              // non-constant states + sync
    std::vector<std::uint64_t> non_sync_states; // packed configs, ascending
    bool sync_unique_absorbing = false;
    bool reaches_sync_from_all = false;
    double max_row_sum_error = 0.0;
    bool solved = false;
    std::vector<double> expected_steps;  // per non-sync state, when solved
    double solver_residual = 0.0;        // infinity-norm of (I-Q)t - 1
};

/// Enumerates every presence mask to get exact transition probabilities,
/// certifies the absorbing structure, and solves for expected absorption
/// times by dense LU.  Gated to tiny instances by construction.
ChainReport build_and_analyze_chain(const Graph& g, int period, const NoiseModel& noise,
                                    std::uint64_t state_gate = 20'000,
                                    std::uint64_t mask_gate = 1'048'576);

/// Base-period packing of a configuration (vertex 0 most significant); the
/// key used by chain reports.
std::uint64_t pack_states(const Configuration& x);

}  // namespace firefly
