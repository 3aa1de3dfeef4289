#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "firefly/graph.hpp"
#include "firefly/graph_io.hpp"
#include "firefly/rng.hpp"
#include "firefly/tree_enum.hpp"

using namespace firefly;

TEST_CASE("graph construction normalizes edges") {
    Graph g(4, {{2, 1}, {1, 2}, {0, 1}, {3, 2}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("family builders") {
    const Graph p5 = make_path(5);
    CHECK(p5.vertex_count() == 5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.has_edge(0, 1));
    CHECK(p5.has_edge(3, 4));
    CHECK_FALSE(p5.has_edge(0, 4));

    const Graph c4 = make_cycle(4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(3, 0));

    const Graph s4 = make_star(4);
    CHECK(s4.vertex_count() == 5);
    CHECK(s4.degree(0) == 4);
    for (int leaf = 1; leaf <= 4; ++leaf) CHECK(s4.degree(leaf) == 1);

    const Graph k4 = make_complete(4);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    const Graph t = make_tree({{0, 1}, {1, 2}, {1, 3}});
    CHECK(t.vertex_count() == 4);
    CHECK(t.degree(1) == 3);
    CHECK_THROWS(make_tree({{0, 1}, {1, 2}, {2, 0}}));          // cycle
    CHECK_THROWS(make_tree({{0, 1}, {2, 3}}));                  // disconnected
}

TEST_CASE("parse_family") {
    CHECK(parse_family("path:3").edge_count() == 2);
    CHECK(parse_family("cycle:5").edge_count() == 5);
    CHECK(parse_family("star:6").vertex_count() == 7);
    CHECK(parse_family("complete:3").edge_count() == 3);
    const Graph t = parse_family("tree:0-1,1-2,1-3");
    CHECK(t.degree(1) == 3);
    CHECK(parse_family("path:1").vertex_count() == 1);  // single vertex is a valid path
    CHECK_THROWS(parse_family("blob:3"));
    CHECK_THROWS(parse_family("path"));
    CHECK_THROWS(parse_family("path:0"));
}

TEST_CASE("structural queries match closed forms") {
    for (int m = 2; m <= 7; ++m) {
        const StructureReport r = structural_queries(make_path(m));
        CHECK(r.is_connected);
        CHECK(r.is_tree);
        CHECK(r.max_degree <= 2);
    }
    for (int k = 1; k <= 6; ++k) {
        const StructureReport r = structural_queries(make_star(k));
        CHECK(r.is_tree);
        CHECK(r.max_degree == k);
    }
    for (int m = 3; m <= 6; ++m) {
        const StructureReport r = structural_queries(make_complete(m));
        CHECK(r.is_connected);
        CHECK_FALSE(r.is_tree);
        CHECK(r.max_degree == m - 1);
    }
    const StructureReport two_parts = structural_queries(Graph(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(two_parts.is_connected);
    CHECK_FALSE(two_parts.is_tree);
}

TEST_CASE("component labels follow first appearance") {
    const Graph g(6, {{4, 5}, {1, 2}});
    const std::vector<int> labels = component_labels(g);
    CHECK(labels == std::vector<int>{0, 1, 1, 2, 3, 3});
}

TEST_CASE("stars and branches on a 3-path") {
    const std::vector<Star> stars = find_stars_and_branches(make_path(3));
    REQUIRE(stars.size() == 1);
    CHECK(stars[0].center == 1);
    CHECK(stars[0].leaves == std::vector<int>{0, 2});
    CHECK_FALSE(stars[0].root.has_value());
    CHECK(stars[0].k() == 2);
    CHECK_FALSE(stars[0].is_branch());
}

TEST_CASE("stars and branches on a 4-path") {
    const std::vector<Star> stars = find_stars_and_branches(make_path(4));
    REQUIRE(stars.size() == 2);
    CHECK(stars[0].center == 1);
    CHECK(stars[0].leaves == std::vector<int>{0});
    REQUIRE(stars[0].root.has_value());
    CHECK(*stars[0].root == 2);
    CHECK(stars[1].center == 2);
    CHECK(stars[1].leaves == std::vector<int>{3});
    REQUIRE(stars[1].root.has_value());
    CHECK(*stars[1].root == 1);
}

TEST_CASE("stars and branches on a 4-star") {
    const std::vector<Star> stars = find_stars_and_branches(make_star(4));
    REQUIRE(stars.size() == 1);
    CHECK(stars[0].center == 0);
    CHECK(stars[0].leaves == std::vector<int>{1, 2, 3, 4});
    CHECK_FALSE(stars[0].root.has_value());
}

TEST_CASE("star invariants re-validated against adjacency") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 3 + static_cast<int>(rng.next_below(6));
        Graph g(m, {});
        {
            // random connected-ish graph: a random tree plus a few extra edges
            std::vector<std::pair<int, int>> edges;
            for (int v = 1; v < m; ++v) {
                edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
            }
            for (int extra = 0; extra < 2; ++extra) {
                const int a = static_cast<int>(rng.next_below(m));
                const int b = static_cast<int>(rng.next_below(m));
                if (a != b) edges.emplace_back(a, b);
            }
            g = Graph(m, edges);
        }
        for (const Star& star : find_stars_and_branches(g)) {
            CHECK_FALSE(star.leaves.empty());
            int non_leaf_neighbors = 0;
            for (int u : g.neighbors(star.center)) {
                if (g.degree(u) == 1) {
                    CHECK(std::binary_search(star.leaves.begin(), star.leaves.end(), u));
                } else {
                    ++non_leaf_neighbors;
                }
            }
            for (int leaf : star.leaves) {
                CHECK(g.degree(leaf) == 1);
                CHECK(g.has_edge(star.center, leaf));
            }
            if (star.root.has_value()) {
                CHECK(non_leaf_neighbors == 1);
                CHECK(g.has_edge(star.center, *star.root));
                CHECK(g.degree(*star.root) > 1);
            } else {
                CHECK(non_leaf_neighbors != 1);
            }
        }
    }
}

TEST_CASE("delete_vertices basics") {
    SUBCASE("path minus an end") {
        const DeletionResult r = delete_vertices(make_path(4), {3});
        CHECK(r.graph.vertex_count() == 3);
        CHECK(r.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
        CHECK(r.old_to_new == std::vector<int>{0, 1, 2, -1});
        CHECK(r.new_to_old == std::vector<int>{0, 1, 2});
    }
    SUBCASE("triangle minus a vertex") {
        const DeletionResult r = delete_vertices(make_complete(3), {0});
        CHECK(r.graph.vertex_count() == 2);
        CHECK(r.graph.edge_count() == 1);
    }
    SUBCASE("star minus its center") {
        const DeletionResult r = delete_vertices(make_star(4), {0});
        CHECK(r.graph.vertex_count() == 4);
        CHECK(r.graph.edge_count() == 0);
        CHECK_FALSE(is_connected(r.graph));
    }
    SUBCASE("bad vertex id") {
        CHECK_THROWS(delete_vertices(make_path(3), {5}));
    }
}

TEST_CASE("delete_vertices composes like deleting the union") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 5 + static_cast<int>(rng.next_below(4));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < m; ++v) {
            edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
        }
        const Graph g(m, edges);
        const int a = static_cast<int>(rng.next_below(m));
        int b = static_cast<int>(rng.next_below(m));
        if (b == a) b = (b + 1) % m;

        const DeletionResult joint = delete_vertices(g, {a, b});
        const DeletionResult first = delete_vertices(g, {a});
        const DeletionResult second = delete_vertices(first.graph, {first.old_to_new[b]});
        CHECK(joint.graph.vertex_count() == second.graph.vertex_count());
        CHECK(joint.graph.edges() == second.graph.edges());
        for (int old = 0; old < m; ++old) {
            const int via_first = first.old_to_new[old];
            const int composed = via_first < 0 ? -1 : second.old_to_new[via_first];
            CHECK(joint.old_to_new[old] == composed);
        }
    }
}

TEST_CASE("is_connected_subset") {
    const Graph p4 = make_path(4);
    CHECK(is_connected_subset(p4, {1, 2}));
    CHECK(is_connected_subset(p4, {0, 1, 2, 3}));
    CHECK_FALSE(is_connected_subset(p4, {0, 2}));
    CHECK_FALSE(is_connected_subset(p4, {}));
}

TEST_CASE("edge list text round trip") {
    std::istringstream in("# a comment\nn 5\n0 1\n\n1 2\n3 4\n");
    const Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 3);

    std::istringstream headerless("0 1\n1 2\n");
    CHECK(read_edge_list(headerless).vertex_count() == 3);

    const Graph p4 = make_path(4);
    std::istringstream again(to_edge_list(p4));
    const Graph back = read_edge_list(again);
    CHECK(back.vertex_count() == p4.vertex_count());
    CHECK(back.edges() == p4.edges());
}

TEST_CASE("graph json round trip") {
    const Graph s3 = make_star(3);
    const Graph back = graph_from_json(graph_to_json(s3));
    CHECK(back.vertex_count() == s3.vertex_count());
    CHECK(back.edges() == s3.edges());
    CHECK_THROWS(graph_from_json("{\"vertices\": 2}"));
}

TEST_CASE("dot export mentions every edge") {
    const std::string dot = to_dot(make_path(3));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}

TEST_CASE("load_graph_argument dispatches on shape") {
    CHECK(load_graph_argument("path:3").edge_count() == 2);
    CHECK(load_graph_argument("tree:0-1,1-2").vertex_count() == 3);
    CHECK_THROWS(load_graph_argument("/nonexistent/file.edges"));
}

TEST_CASE("canonical tree code is isomorphism invariant") {
    const Graph a = make_tree({{0, 1}, {1, 2}, {2, 3}});
    const Graph b = make_tree({{3, 2}, {2, 0}, {0, 1}});  // same path, relabeled
    CHECK(canonical_tree_code(a) == canonical_tree_code(b));

    const Graph star = make_star(3);
    CHECK(canonical_tree_code(a) != canonical_tree_code(star));
    CHECK_THROWS(canonical_tree_code(make_cycle(4)));
}

TEST_CASE("tree catalog sizes") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11};
    for (int m = 1; m <= 7; ++m) {
        const std::vector<CatalogTree> catalog = nonisomorphic_trees(m);
        CHECK(static_cast<int>(catalog.size()) == expected[m - 1]);
        std::set<std::string> codes;
        for (const CatalogTree& entry : catalog) {
            CHECK(entry.tree.vertex_count() == m);
            CHECK(structural_queries(entry.tree).is_tree);
            CHECK(canonical_tree_code(entry.tree) == entry.code);
            codes.insert(entry.code);
        }
        CHECK(codes.size() == catalog.size());
    }
}

TEST_CASE("pruefer decode round trips through the catalog") {
    const Graph t = tree_from_pruefer({1, 1}, 4);  // degree-3 hub at 1
    CHECK(t.degree(1) == 3);
    CHECK(structural_queries(t).is_tree);
}

TEST_CASE("all labeled graphs enumeration") {
    CHECK(all_labeled_graphs(3, false).size() == 8);    // 2^3 edge subsets
    CHECK(all_labeled_graphs(3, true).size() == 4);     // 3 paths + triangle
    CHECK(all_labeled_graphs(4, true).size() == 38);    // connected labeled graphs on 4 vertices
    for (const Graph& g : all_labeled_graphs(4, true)) CHECK(is_connected(g));
}
