#pragma once

#include <iosfwd>
#include <string>

#include "firefly/graph.hpp"

namespace firefly {

/// Edge-list text: one "u v" pair per line; blank lines and '#' comments are
/// skipped; an optional "n <count>" header fixes the vertex count (otherwise
/// it is 1 + the largest index seen).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

/// JSON form: {"vertices": int, "edges": [[u,v],...]}.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

/// Undirected DOT with vertex labels equal to indices.
std::string to_dot(const Graph& g);

/// Loads a graph from either a family spec ("path:5", "tree:0-1,1-2"), an
/// edge-list file, or a JSON file, dispatching on the argument's shape.
Graph load_graph_argument(const std::string& arg);

}  // namespace firefly
