#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "firefly/analysis.hpp"
#include "firefly/dynamics.hpp"
#include "firefly/graph.hpp"
#include "firefly/stochastic.hpp"

namespace py = pybind11;
using namespace firefly;

namespace {

NoiseModel noise_from(const Graph& g, const std::string& mode, double p) {
    if (mode == "edge") return uniform_edge_noise(g, p);
    if (mode == "vertex") return uniform_vertex_noise(g, p);
    throw std::invalid_argument("mode must be 'edge' or 'vertex'");
}

py::object opt_int(const std::optional<long long>& value) {
    if (!value.has_value()) return py::none();
    return py::int_(*value);
}

py::object opt_states(const std::optional<Configuration>& value) {
    if (!value.has_value()) return py::none();
    return py::cast(value->states);
}

}  // namespace

PYBIND11_MODULE(_firefly, m) {
    m.doc() = "finite-state pulse-coupled oscillator networks: exact orbits, "
              "synchronization sweeps, and the randomized variant";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("vertex_count"),
             py::arg("edges"))
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors, py::arg("vertex"))
        .def("degree", &Graph::degree, py::arg("vertex"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(vertices=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("make_path", &make_path, py::arg("vertex_count"));
    m.def("make_cycle", &make_cycle, py::arg("vertex_count"));
    m.def("make_star", &make_star, py::arg("leaf_count"),
          "star with center 0 and the given number of leaves");
    m.def("make_complete", &make_complete, py::arg("vertex_count"));
    m.def("parse_family", &parse_family, py::arg("spec"),
          "build a graph from a family spec such as 'path:5' or 'tree:0-1,1-2'");
    m.def("blinking_state", [](int period) { return blinking_state(period); },
          py::arg("period"));

    m.def(
        "step",
        [](const Graph& g, int period, std::vector<int> states) {
            const Configuration x{period, std::move(states)};
            validate(g, x);
            return step(g, x).next.states;
        },
        py::arg("graph"), py::arg("period"), py::arg("states"),
        "one synchronous update of the deterministic rule");

    m.def(
        "compute_orbit",
        [](const Graph& g, int period, std::vector<int> states,
           std::optional<long long> cap, bool include_trajectory) {
            const Configuration x0{period, std::move(states)};
            validate(g, x0);
            const Orbit orbit = compute_orbit(g, x0, cap);
            py::dict out;
            out["truncated"] = orbit.truncated;
            out["transient_length"] = orbit.transient_length;
            out["cycle_length"] = orbit.cycle_length;
            out["sync_time"] = opt_int(orbit.sync_time);
            if (include_trajectory) {
                py::list steps;
                for (const Configuration& x : orbit.trajectory) steps.append(py::cast(x.states));
                out["trajectory"] = std::move(steps);
            }
            return out;
        },
        py::arg("graph"), py::arg("period"), py::arg("states"),
        py::arg("cap") = std::nullopt, py::arg("include_trajectory") = false,
        "full orbit resolution: transient, limit cycle, synchronization time");

    m.def(
        "is_n_synchronizing",
        [](const Graph& g, int period, std::uint64_t budget, int jobs) {
            const SyncReport report = is_n_synchronizing(g, period, budget, jobs);
            py::dict out;
            out["synchronizing"] = report.synchronizing;
            out["witness"] = opt_states(report.witness);
            out["configs_checked"] = report.configs_checked;
            out["max_sync_time"] = opt_int(report.max_sync_time);
            out["slowest"] = opt_states(report.slowest);
            return out;
        },
        py::arg("graph"), py::arg("period"), py::arg("budget") = 10'000'000,
        py::arg("jobs") = 1, "sweep every configuration for synchronization");

    m.def(
        "mc_ensemble",
        [](const Graph& g, int period, std::vector<int> states, double p,
           const std::string& mode, std::uint64_t runs, std::uint64_t seed, long long cap,
           int jobs) {
            const Configuration x0{period, std::move(states)};
            validate(g, x0);
            const EnsembleReport report =
                mc_ensemble(g, x0, noise_from(g, mode, p), runs, seed, cap, jobs);
            py::dict out;
            out["runs"] = report.runs;
            out["absorbed"] = report.absorbed;
            out["mean_steps"] = report.mean_steps;
            out["max_steps"] = report.max_steps;
            out["base_seed"] = report.base_seed;
            out["cap"] = report.cap;
            return out;
        },
        py::arg("graph"), py::arg("period"), py::arg("states"), py::arg("p") = 0.5,
        py::arg("mode") = "edge", py::arg("runs") = 10'000, py::arg("seed") = 0,
        py::arg("cap") = 100'000, py::arg("jobs") = 1,
        "independent seeded runs of the randomized dynamic");

    m.def(
        "chain_analysis",
        [](const Graph& g, int period, double p, const std::string& mode) {
            const ChainReport report =
                build_and_analyze_chain(g, period, noise_from(g, mode, p));
            py::dict out;
            out["state_count"] = report.state_count;
            out["sync_unique_absorbing"] = report.sync_unique_absorbing;
            out["reaches_sync_from_all"] = report.reaches_sync_from_all;
            out["solved"] = report.solved;
            out["solver_residual"] = report.solver_residual;
            py::dict expected;
            if (report.solved) {
                for (std::size_t i = 0; i < report.non_sync_states.size(); ++i) {
                    expected[py::str(std::to_string(report.non_sync_states[i]))] =
                        report.expected_steps[i];
                }
            }
            out["expected_steps"] = std::move(expected);
            return out;
        },
        py::arg("graph"), py::arg("period"), py::arg("p") = 0.5, py::arg("mode") = "edge",
        "exact absorbing-chain certificate and expected absorption times");
}
