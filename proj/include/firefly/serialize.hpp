#pragma once

#include <string>

#include <json.hpp>

#include "firefly/analysis.hpp"
#include "firefly/dynamics.hpp"
#include "firefly/graph.hpp"
#include "firefly/stochastic.hpp"

namespace firefly {

// All emitters use ordered JSON with fixed key order so repeated invocations
// are byte-identical.

nlohmann::ordered_json graph_json(const Graph& g);
nlohmann::ordered_json trace_json(const Graph& g, const Orbit& orbit);
std::string orbit_csv(const Orbit& orbit);
std::string dot_frame(const Graph& g, const Configuration& x);

nlohmann::ordered_json sync_report_json(const SyncReport& report);
nlohmann::ordered_json path_bounds_json(const PathBoundsReport& report);
nlohmann::ordered_json tree_theorem_json(const TreeTheoremReport& report);
std::string tree_theorem_csv(const TreeTheoremReport& report);
nlohmann::ordered_json blinking_theorem_json(const BlinkingTheoremReport& report);
nlohmann::ordered_json degree_lemma_json(const DegreeLemmaReport& report);
nlohmann::ordered_json return_map_json(const ReturnMapReport& report);
nlohmann::ordered_json irreducibility_json(const IrreducibilityReport& report);
nlohmann::ordered_json quotient_json(const QuotientReport& report);
nlohmann::ordered_json branch_width_json(const BranchWidthReport& report);
nlohmann::ordered_json ensemble_json(const EnsembleReport& report);
nlohmann::ordered_json chain_json(const ChainReport& report);

/// Parses "2,5,5,5" into a configuration with the given period.
Configuration parse_config_literal(const std::string& text, int period);

}  // namespace firefly
