#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treelab/covers.hpp"
#include "treelab/extremal.hpp"

using namespace treelab;

namespace {
Graph bowtie() { return vertex_sum(complete_graph(3), 0, complete_graph(3), 0); }
}

TEST_CASE("family F membership") {
    CHECK(is_family_F(complete_graph(3)));
    CHECK(is_family_F(bowtie()));
    CHECK(is_family_F(generate_friendship(4)));
    CHECK(!is_family_F(Graph(1)));
    CHECK(!is_family_F(path_graph(2)));
    CHECK(!is_family_F(path_graph(3)));
    CHECK(!is_family_F(cycle_graph(5)));
    CHECK(!is_family_F(complete_graph(5)));
    CHECK(!is_family_F(add_leaf(complete_graph(3), 0))); // even order
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(!is_family_F(two_triangles)); // disconnected
}

TEST_CASE("even classification: the three cases") {
    const ExtremalClass leaf = classify_even_extremal(add_leaf(bowtie(), 1));
    CHECK(leaf.kind == ExtremalClass::Kind::EvenLeafOnF);
    CHECK(leaf.leaf == 5);

    Graph bridged(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    const ExtremalClass br = classify_even_extremal(bridged);
    CHECK(br.kind == ExtremalClass::Kind::EvenBridgeOfTwoF);
    CHECK(br.bridge == std::pair<int, int>{2, 3});

    const ExtremalClass c4 = classify_even_extremal(cycle_graph(4));
    CHECK(c4.kind == ExtremalClass::Kind::EvenK3Chain);
    CHECK(c4.core == ExtremalClass::Core::C4);

    const ExtremalClass k4e = classify_even_extremal(delete_edge(complete_graph(4), 0, 1));
    CHECK(k4e.kind == ExtremalClass::Kind::EvenK3Chain);
    CHECK(k4e.core == ExtremalClass::Core::K4MinusE);

    const ExtremalClass ct = classify_even_extremal(generate_cycle_triangle(4));
    CHECK(ct.kind == ExtremalClass::Kind::EvenK3Chain);
    CHECK(ct.core == ExtremalClass::Core::CycleTriangle);
    CHECK(ct.cycle_length == 4);

    // chained triangles on a core
    const ExtremalClass chain =
        classify_even_extremal(vertex_sum(cycle_graph(4), 0, complete_graph(3), 0));
    CHECK(chain.kind == ExtremalClass::Kind::EvenK3Chain);
    CHECK(chain.core == ExtremalClass::Core::C4);
}

TEST_CASE("even classification: rejections") {
    CHECK(classify_even_extremal(cycle_graph(6)).kind == ExtremalClass::Kind::NotExtremal);
    CHECK(classify_even_extremal(complete_graph(4)).kind == ExtremalClass::Kind::NotExtremal);
    CHECK(classify_even_extremal(path_graph(4)).kind == ExtremalClass::Kind::NotExtremal);
    CHECK(classify_even_extremal(bowtie()).kind == ExtremalClass::Kind::NotExtremal); // odd order
    CHECK(classify_even_extremal(complete_bipartite(2, 4)).kind ==
          ExtremalClass::Kind::NotExtremal);
}

TEST_CASE("classification agrees with the exact solver") {
    // These are exactly the even graphs with T = n/2 among the samples.
    for (const Graph& g : {cycle_graph(4), delete_edge(complete_graph(4), 0, 1),
                           generate_cycle_triangle(3), add_leaf(complete_graph(3), 0)}) {
        CHECK(tree_cover_exact(g).size == g.n() / 2);
        CHECK(classify_even_extremal(g).kind != ExtremalClass::Kind::NotExtremal);
    }
    // (the converse needs outerplanarity: K6 has T = 3 = n/2 but is not classified)
    for (const Graph& g : {cycle_graph(6), path_graph(6), complete_bipartite(2, 4)}) {
        CHECK(tree_cover_exact(g).size < g.n() / 2);
        CHECK(classify_even_extremal(g).kind == ExtremalClass::Kind::NotExtremal);
    }
}

TEST_CASE("generators hit their own recognizers") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph f = generate_family_F(4, seed);
        CHECK(f.n() == 9);
        CHECK(is_family_F(f));

        EvenExtremalSpec spec;
        spec.kind = ExtremalClass::Kind::EvenLeafOnF;
        spec.f_blocks = 3;
        CHECK(classify_even_extremal(generate_even_extremal(spec, seed)).kind ==
              ExtremalClass::Kind::EvenLeafOnF);

        spec.kind = ExtremalClass::Kind::EvenBridgeOfTwoF;
        spec.f_blocks2 = 2;
        CHECK(classify_even_extremal(generate_even_extremal(spec, seed)).kind ==
              ExtremalClass::Kind::EvenBridgeOfTwoF);

        spec.kind = ExtremalClass::Kind::EvenK3Chain;
        spec.core = ExtremalClass::Core::K4MinusE;
        spec.k3_count = 2;
        CHECK(classify_even_extremal(generate_even_extremal(spec, seed)).kind ==
              ExtremalClass::Kind::EvenK3Chain);
    }
    CHECK(generate_family_F(3, 7) == generate_family_F(3, 7)); // deterministic
    CHECK_THROWS_AS(generate_family_F(0, 1), std::invalid_argument);
}

TEST_CASE("k-trees, friendship graphs, cycle triangles") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph t3 = generate_k_tree(3, 9, seed);
        CHECK(t3.n() == 9);
        CHECK(clique_number(t3) == 4);
        CHECK(treewidth(t3) == 3);
        CHECK(tree_cover_exact(t3).size == 2);

        const Graph t5 = generate_k_tree(5, 10, seed);
        CHECK(treewidth(t5) == 5);
        CHECK(tree_cover_exact(t5).size == 3);
    }
    CHECK_THROWS_AS(generate_k_tree(3, 3, 0), std::invalid_argument);

    const Graph fr = generate_friendship(3);
    CHECK(fr.n() == 7);
    CHECK(fr.degree(0) == 6);
    CHECK(is_family_F(fr));
    CHECK(tree_cover_exact(fr).size == 4);

    const Graph ct = generate_cycle_triangle(5);
    CHECK(ct.n() == 10);
    CHECK(ct.m() == 15);
    CHECK(tree_cover_exact(ct).size == 5);
    CHECK_THROWS_AS(generate_cycle_triangle(2), std::invalid_argument);
}
