#include "firefly/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace firefly {

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared_count = -1;
    int max_vertex = -1;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;  // blank or comment-only line
        if (first == "n") {
            if (!(fields >> declared_count) || declared_count < 0) {
                throw std::invalid_argument("bad vertex-count header line: " + line);
            }
            continue;
        }
        int u = 0;
        int v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad edge line: " + line);
        }
        if (!(fields >> v)) throw std::invalid_argument("bad edge line: " + line);
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    const int count = declared_count >= 0 ? declared_count : max_vertex + 1;
    return Graph(count, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge-list file: " + path);
    return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph graph_from_json(const std::string& text) {
    const auto parsed = nlohmann::json::parse(text);
    if (!parsed.is_object() || !parsed.contains("vertices") || !parsed.contains("edges")) {
        throw std::invalid_argument("graph JSON needs 'vertices' and 'edges'");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : parsed.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("each edge must be a [u, v] pair");
        }
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph(parsed.at("vertices").get<int>(), std::move(edges));
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json out;
    out["vertices"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    out["edges"] = std::move(edges);
    return out.dump();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << ";\n";
    }
    for (const auto& [u, v] : g.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

Graph load_graph_argument(const std::string& arg) {
    if (arg.find(':') != std::string::npos && arg.find('/') == std::string::npos &&
        arg.find('.') == std::string::npos) {
        return parse_family(arg);
    }
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open graph file: " + arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
    std::istringstream stream(text);
    return read_edge_list(stream);
}

}  // namespace firefly
