#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treelab/enumerate.hpp"
#include "treelab/graph.hpp"
#include "treelab/io.hpp"

using namespace treelab;

TEST_CASE("vertex set helpers") {
    VertexSet s = vs::bit(0) | vs::bit(3) | vs::bit(63);
    CHECK(vs::count(s) == 3);
    CHECK(vs::first(s) == 0);
    CHECK(vs::has(s, 63));
    CHECK(!vs::has(s, 1));
    CHECK(vs::to_vector(s) == std::vector<int>{0, 3, 63});
    CHECK(vs::all(0) == 0);
    CHECK(vs::count(vs::all(64)) == 64);
}

TEST_CASE("graph basics and guards") {
    Graph g(4, {{0, 1}, {1, 2}, {1, 2}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 2); // duplicate collapsed
    CHECK(g.has_edge(2, 1));
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(65), UnsupportedSizeError);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("graph6 round trips") {
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(parse_graph6("@") == Graph(1));
    for (const Graph& g : {petersen_graph(), complete_bipartite(2, 3), path_graph(7), Graph(0)})
        CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);      // truncated
    CHECK_THROWS_AS(parse_graph6("Bw "), ParseError);    // trailing garbage
    CHECK_THROWS_AS(parse_graph6("\x01"), ParseError);   // out-of-range byte
}

TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("3\n0 1\n1 2\n");
    CHECK(g == path_graph(3));
    CHECK_THROWS_AS(parse_edge_list("2\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 7\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 x\n"), ParseError);
}

TEST_CASE("derived constructions") {
    CHECK(is_isomorphic(line_graph(star_graph(3)).graph, complete_graph(3)));
    const LineGraph l = line_graph(path_graph(4));
    CHECK(l.graph == path_graph(3));
    CHECK(l.source_edge == path_graph(4).edges());

    const TriangleAugment aug = triangle_augment(complete_graph(4));
    CHECK(aug.graph.n() == 10);
    CHECK(aug.graph.m() == 18);
    CHECK(vs::count(aug.edge_vertices) == 6);

    CHECK(is_isomorphic(complement(path_graph(4)), path_graph(4)));
    CHECK(complement(complete_graph(5)) == Graph(5));

    const Graph c5 = cycle_graph(5);
    CHECK(is_isomorphic(delete_vertex(c5, 2), path_graph(4)));
    CHECK(is_isomorphic(delete_edge(c5, 0, 4), path_graph(5)));
    CHECK(is_isomorphic(subdivide_edge(c5, 0, 1), cycle_graph(6)));
    CHECK(add_leaf(path_graph(2), 1) == path_graph(3));

    const Graph bowtie = vertex_sum(complete_graph(3), 0, complete_graph(3), 0);
    CHECK(bowtie.n() == 5);
    CHECK(bowtie.m() == 6);
    CHECK(bowtie.degree(0) == 4);
}

TEST_CASE("induced subgraphs and connectivity") {
    const Graph c6 = cycle_graph(6);
    const InducedSubgraph sub = induced(c6, vs::bit(0) | vs::bit(1) | vs::bit(3));
    CHECK(sub.vertices == std::vector<int>{0, 1, 3});
    CHECK(sub.graph.m() == 1);

    Graph two(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(!is_connected(two));
    CHECK(components(two).size() == 2);
    CHECK(component_of(two, 4, two.vertices()) == (vs::bit(2) | vs::bit(3) | vs::bit(4)));
    CHECK(is_tree_subset(two, vs::bit(2) | vs::bit(3) | vs::bit(4)));
    CHECK(!is_tree_subset(two, two.vertices()));
    CHECK(is_forest_subset(two, two.vertices()));
    CHECK(is_clique_subset(complete_graph(5), vs::all(5)));
    CHECK(count_edges_within(c6, vs::all(6)) == 6);
}

TEST_CASE("blocks, bridges, cut vertices") {
    const Graph bowtie = vertex_sum(complete_graph(3), 0, complete_graph(3), 0);
    const BlockDecomposition bd = block_decomposition(bowtie);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == vs::bit(0));
    CHECK(bd.bridges.empty());
    CHECK(bd.connected);

    const BlockDecomposition pd = block_decomposition(path_graph(4));
    CHECK(pd.blocks.size() == 3);
    CHECK(pd.bridges.size() == 3);
    CHECK(vs::count(pd.cut_vertices) == 2);

    CHECK(!block_decomposition(Graph(3, {{0, 1}})).connected);
    CHECK(block_decomposition(cycle_graph(5)).blocks.size() == 1);
}

TEST_CASE("girth, independence, cliques, treewidth") {
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(complete_bipartite(2, 3)) == 4);
    CHECK(!girth(path_graph(6)).has_value());

    CHECK(independence_number(cycle_graph(5)).size == 2);
    const IndependenceResult ir = independence_number(petersen_graph());
    CHECK(ir.size == 4);
    CHECK(vs::count(ir.witness) == 4);
    vs::for_each(ir.witness, [&](int v) {
        CHECK((petersen_graph().adj(v) & ir.witness) == 0);
    });

    CHECK(clique_number(complete_graph(6)) == 6);
    CHECK(clique_number(cycle_graph(6)) == 2);

    CHECK(treewidth(complete_graph(4)) == 3);
    CHECK(treewidth(path_graph(5)) == 1);
    CHECK(treewidth(cycle_graph(6)) == 2);
    CHECK(treewidth(petersen_graph()) == 4);
    CHECK_THROWS_AS(treewidth(Graph(15)), UnsupportedSizeError);
}

TEST_CASE("outerplanarity") {
    CHECK(is_outerplanar(cycle_graph(5)));
    CHECK(is_outerplanar(path_graph(6)));
    CHECK(!is_outerplanar(complete_graph(4)));
    CHECK(!is_outerplanar(complete_bipartite(2, 3)));
    CHECK(!is_outerplanar(petersen_graph()));
    // K4 subdivision (not a subgraph, only a minor/subdivision)
    Graph sub = subdivide_edge(complete_graph(4), 0, 1);
    CHECK(!is_outerplanar(sub));
    CHECK(is_outerplanar(vertex_sum(complete_graph(3), 0, cycle_graph(4), 0)));
}

TEST_CASE("isomorphism and canonical keys") {
    CHECK(is_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
    CHECK(!is_isomorphic(path_graph(4), star_graph(3)));
    CHECK(canonical_key(cycle_graph(5)) == canonical_key(parse_graph6(to_graph6(cycle_graph(5)))));
    Graph relabeled(5, {{4, 3}, {3, 1}, {1, 0}, {0, 2}, {2, 4}});
    CHECK(canonical_key(relabeled) == canonical_key(cycle_graph(5)));
    CHECK(canonical_key(path_graph(5)) != canonical_key(star_graph(4)));
}

TEST_CASE("enumeration counts match the literature") {
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(2).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
    const auto trees = enumerate_connected_where(7, [](const Graph& g) { return g.m() < g.n(); });
    CHECK(trees.size() == 11); // trees on 7 vertices
    CHECK_THROWS_AS(enumerate_connected(10), UnsupportedSizeError);
}
