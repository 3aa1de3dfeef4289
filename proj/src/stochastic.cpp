#include "firefly/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include <Eigen/Dense>

#include "firefly/parallel.hpp"

namespace firefly {

NoiseModel uniform_edge_noise(const Graph& g, double p) {
    NoiseModel noise;
    noise.mode = NoiseMode::edge_reception;
    noise.probabilities.assign(static_cast<std::size_t>(g.edge_count()), p);
    validate(g, noise);
    return noise;
}

NoiseModel uniform_vertex_noise(const Graph& g, double p) {
    NoiseModel noise;
    noise.mode = NoiseMode::vertex_emission;
    noise.probabilities.assign(static_cast<std::size_t>(g.vertex_count()), p);
    validate(g, noise);
    return noise;
}

void validate(const Graph& g, const NoiseModel& noise) {
    const std::size_t expected = noise.mode == NoiseMode::edge_reception
                                     ? static_cast<std::size_t>(g.edge_count())
                                     : static_cast<std::size_t>(g.vertex_count());
    if (noise.probabilities.size() != expected) {
        throw std::invalid_argument("noise model size does not match the graph");
    }
    for (double p : noise.probabilities) {
        if (!(p > 0.0) || !(p < 1.0)) {
            throw std::invalid_argument("presence probabilities must lie strictly in (0,1)");
        }
    }
}

MaskedStepper::MaskedStepper(const Graph& g, NoiseModel noise)
    : graph_(&g), noise_(std::move(noise)) {
    validate(g, noise_);
    incidence_.assign(static_cast<std::size_t>(g.vertex_count()), {});
    int edge_index = 0;
    for (const auto& [u, v] : g.edges()) {
        incidence_[static_cast<std::size_t>(u)].emplace_back(v, edge_index);
        incidence_[static_cast<std::size_t>(v)].emplace_back(u, edge_index);
        ++edge_index;
    }
}

Configuration MaskedStepper::step(const Configuration& x, const Mask& mask) const {
    validate(*graph_, x);
    if (mask.size() != noise_.probabilities.size()) {
        throw std::invalid_argument("mask size does not match the noise model");
    }
    const int n = x.period;
    const int blink = blinking_state(n);
    Configuration next;
    next.period = n;
    next.states.resize(x.states.size());
    for (int v = 0; v < graph_->vertex_count(); ++v) {
        bool held = false;
        if (x.states[static_cast<std::size_t>(v)] > blink) {
            for (const auto& [u, edge_index] : incidence_[static_cast<std::size_t>(v)]) {
                if (x.states[static_cast<std::size_t>(u)] != blink) continue;
                const bool visible = noise_.mode == NoiseMode::edge_reception
                                         ? mask[static_cast<std::size_t>(edge_index)] != 0
                                         : mask[static_cast<std::size_t>(u)] != 0;
                if (visible) {
                    held = true;
                    break;
                }
            }
        }
        next.states[static_cast<std::size_t>(v)] =
            held ? x.states[static_cast<std::size_t>(v)]
                 : (x.states[static_cast<std::size_t>(v)] + 1) % n;
    }
    return next;
}

Mask MaskedStepper::sample_mask(SplitMix64& rng) const {
    Mask mask(noise_.probabilities.size());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        mask[i] = rng.next_double() < noise_.probabilities[i] ? 1 : 0;
    }
    return mask;
}

Configuration step_stochastic(const Graph& g, const Configuration& x, const NoiseModel& noise,
                              const Mask& mask) {
    return MaskedStepper(g, noise).step(x, mask);
}

AbsorptionResult mc_run(const Graph& g, const Configuration& x0, const NoiseModel& noise,
                        std::uint64_t seed, long long cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    if (!is_connected(g)) throw std::invalid_argument("mc run requires a connected graph");
    AbsorptionResult result;
    result.seed = seed;
    result.cap = cap;

    const MaskedStepper stepper(g, noise);
    SplitMix64 rng(seed);
    Configuration current = x0;
    for (long long t = 0; t <= cap; ++t) {
        if (is_constant(current)) {
            result.absorbed = true;
            result.steps_to_sync = t;
            return result;
        }
        if (t == cap) break;
        current = stepper.step(current, stepper.sample_mask(rng));
    }
    return result;
}

EnsembleReport mc_ensemble(const Graph& g, const Configuration& x0, const NoiseModel& noise,
                           std::uint64_t runs, std::uint64_t base_seed, long long cap,
                           int jobs) {
    if (runs < 1) throw std::invalid_argument("need runs >= 1");
    EnsembleReport report;
    report.runs = runs;
    report.base_seed = base_seed;
    report.cap = cap;
    report.results.resize(runs);

    parallel_chunks(runs, jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            report.results[i] = mc_run(g, x0, noise, derive_seed(base_seed, i), cap);
        }
    });

    long long total_steps = 0;
    for (const AbsorptionResult& r : report.results) {
        if (r.absorbed) {
            ++report.absorbed;
            total_steps += *r.steps_to_sync;
            report.max_steps = std::max(report.max_steps, *r.steps_to_sync);
        }
    }
    report.mean_steps = report.absorbed > 0
                            ? static_cast<double>(total_steps) /
                                  static_cast<double>(report.absorbed)
                            : 0.0;
    return report;
}

std::uint64_t pack_states(const Configuration& x) {
    std::uint64_t key = 0;
    for (int s : x.states) {
        key = key * static_cast<std::uint64_t>(x.period) + static_cast<std::uint64_t>(s);
    }
    return key;
}

ChainReport build_and_analyze_chain(const Graph& g, int period, const NoiseModel& noise,
                                    std::uint64_t state_gate, std::uint64_t mask_gate) {
    if (period < 3) throw std::invalid_argument("period must be >= 3");
    validate(g, noise);
    const int vertex_count = g.vertex_count();

    std::uint64_t total_states = 1;
    for (int v = 0; v < vertex_count; ++v) {
        if (total_states > state_gate / static_cast<std::uint64_t>(period)) {
            throw std::invalid_argument("chain state budget exceeded; shrink the instance");
        }
        total_states *= static_cast<std::uint64_t>(period);
    }
    const std::size_t mask_bits = noise.probabilities.size();
    if (mask_bits >= 63 || (std::uint64_t{1} << mask_bits) > mask_gate) {
        throw std::invalid_argument("mask enumeration budget exceeded; shrink the instance");
    }
    const std::uint64_t mask_count = std::uint64_t{1} << mask_bits;

    // Non-constant configurations in ascending packed order, then sync last.
    ChainReport report;
    report.period = period;
    std::vector<long long> index_of(total_states, -1);
    for (std::uint64_t packed = 0; packed < total_states; ++packed) {
        std::uint64_t rest = packed;
        Configuration x;
        x.period = period;
        x.states.assign(static_cast<std::size_t>(vertex_count), 0);
        for (int v = vertex_count - 1; v >= 0; --v) {
            x.states[static_cast<std::size_t>(v)] = static_cast<int>(rest % period);
            rest /= static_cast<std::uint64_t>(period);
        }
        if (!is_constant(x)) {
            index_of[packed] = static_cast<long long>(report.non_sync_states.size());
            report.non_sync_states.push_back(packed);
        }
    }
    const std::size_t k = report.non_sync_states.size();  // sync gets index k
    report.state_count = k + 1;

    const MaskedStepper stepper(g, noise);
    Eigen::MatrixXd transition = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k + 1),
                                                       static_cast<Eigen::Index>(k + 1));
    transition(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;

    Mask mask(mask_bits);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t rest = report.non_sync_states[i];
        Configuration x;
        x.period = period;
        x.states.assign(static_cast<std::size_t>(vertex_count), 0);
        for (int v = vertex_count - 1; v >= 0; --v) {
            x.states[static_cast<std::size_t>(v)] = static_cast<int>(rest % period);
            rest /= static_cast<std::uint64_t>(period);
        }
        for (std::uint64_t bits = 0; bits < mask_count; ++bits) {
            double probability = 1.0;
            for (std::size_t b = 0; b < mask_bits; ++b) {
                const bool present = (bits >> b) & 1u;
                mask[b] = present ? 1 : 0;
                probability *= present ? noise.probabilities[b]
                                       : 1.0 - noise.probabilities[b];
            }
            const Configuration next = stepper.step(x, mask);
            const std::uint64_t next_packed = pack_states(next);
            const long long target = is_constant(next)
                                         ? static_cast<long long>(k)
                                         : index_of[next_packed];
            transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(target)) +=
                probability;
        }
    }

    report.max_row_sum_error = 0.0;
    for (std::size_t i = 0; i <= k; ++i) {
        const double row_sum = transition.row(static_cast<Eigen::Index>(i)).sum();
        report.max_row_sum_error =
            std::max(report.max_row_sum_error, std::abs(row_sum - 1.0));
    }

    report.sync_unique_absorbing = true;
    for (std::size_t i = 0; i < k; ++i) {
        if (transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) >=
            1.0 - 1e-12) {
            report.sync_unique_absorbing = false;
        }
    }

    // Which states admit a positive-probability path into sync?
    std::vector<char> reaches(k + 1, 0);
    reaches[k] = 1;
    std::queue<std::size_t> frontier;
    frontier.push(k);
    while (!frontier.empty()) {
        const std::size_t target = frontier.front();
        frontier.pop();
        for (std::size_t i = 0; i <= k; ++i) {
            if (!reaches[i] &&
                transition(static_cast<Eigen::Index>(i),
                           static_cast<Eigen::Index>(target)) > 0.0) {
                reaches[i] = 1;
                frontier.push(i);
            }
        }
    }
    report.reaches_sync_from_all =
        std::all_of(reaches.begin(), reaches.end(), [](char c) { return c != 0; });

    if (report.sync_unique_absorbing && report.reaches_sync_from_all && k > 0) {
        const Eigen::MatrixXd q =
            transition.topLeftCorner(static_cast<Eigen::Index>(k),
                                     static_cast<Eigen::Index>(k));
        const Eigen::MatrixXd system =
            Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k),
                                      static_cast<Eigen::Index>(k)) -
            q;
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(k));
        const Eigen::VectorXd times = system.partialPivLu().solve(ones);
        report.solver_residual = (system * times - ones).lpNorm<Eigen::Infinity>();
        report.expected_steps.assign(times.data(), times.data() + times.size());
        report.solved = true;
    }
    return report;
}

}  // namespace firefly
