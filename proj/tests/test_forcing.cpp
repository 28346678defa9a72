#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treelab/covers.hpp"
#include "treelab/enumerate.hpp"
#include "treelab/forcing.hpp"

using namespace treelab;

namespace {

// Definition-level closures, written independently of the solver: sweep all
// vertices until no rule applies.
VertexSet oracle_standard(const Graph& g, VertexSet filled) {
    bool change = true;
    while (change) {
        change = false;
        for (int u = 0; u < g.n(); ++u) {
            if (!vs::has(filled, u)) continue;
            const VertexSet unfilled = g.adj(u) & ~filled;
            if (vs::count(unfilled) == 1) {
                filled |= unfilled;
                change = true;
            }
        }
    }
    return filled;
}

VertexSet oracle_psd(const Graph& g, VertexSet filled) {
    bool change = true;
    while (change) {
        change = false;
        for (int u = 0; u < g.n(); ++u) {
            if (!vs::has(filled, u)) continue;
            for (VertexSet comp : components_within(g, g.vertices() & ~filled)) {
                const VertexSet reach = g.adj(u) & comp;
                if (vs::count(reach) == 1) {
                    filled |= reach;
                    change = true;
                }
            }
        }
    }
    return filled;
}

int oracle_minimum(const Graph& g, VertexSet (*closure)(const Graph&, VertexSet)) {
    const int n = g.n();
    for (int k = 0; k <= n; ++k) {
        VertexSet b = vs::all(k);
        const VertexSet limit = vs::bit(n);
        while (b < limit) {
            if (closure(g, b) == g.vertices()) return k;
            if (k == 0) break;
            const VertexSet c = b & (~b + 1);
            const VertexSet r = b + c;
            b = (((r ^ b) >> 2) / c) | r;
        }
        if (k == 0 && n == 0) return 0;
    }
    return n;
}

} // namespace

TEST_CASE("closures match the definition oracle on every subset, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            for (VertexSet b = 0; b <= vs::all(n); ++b) {
                CHECK(standard_closure(g, b).filled == oracle_standard(g, b));
                CHECK(psd_closure(g, b).filled == oracle_psd(g, b));
            }
        }
    }
}

TEST_CASE("forcing history replays to the closure") {
    const Graph g = petersen_graph();
    const ForcingState st = psd_closure(g, vs::all(5));
    VertexSet replay = vs::all(5);
    for (auto [forcer, forced] : st.history) {
        CHECK(vs::has(replay, forcer));
        CHECK(!vs::has(replay, forced));
        CHECK(g.has_edge(forcer, forced));
        replay |= vs::bit(forced);
    }
    CHECK(replay == st.filled);
}

TEST_CASE("forcing numbers match subset enumeration oracles, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            CHECK(zero_forcing_number(g) == oracle_minimum(g, oracle_standard));
            CHECK(psd_zero_forcing_number(g) == oracle_minimum(g, oracle_psd));
        }
    }
}

TEST_CASE("forcing numbers of named graphs") {
    CHECK(psd_zero_forcing_number(path_graph(8)) == 1);
    CHECK(psd_zero_forcing_number(star_graph(5)) == 1);   // trees have Z+ = 1
    CHECK(zero_forcing_number(path_graph(8)) == 1);
    CHECK(zero_forcing_number(star_graph(5)) == 4);
    for (int n = 3; n <= 8; ++n) {
        CHECK(psd_zero_forcing_number(cycle_graph(n)) == 2);
        CHECK(zero_forcing_number(cycle_graph(n)) == 2);
        CHECK(psd_zero_forcing_number(complete_graph(n)) == n - 1);
        CHECK(zero_forcing_number(complete_graph(n)) == n - 1);
    }
    CHECK(zero_forcing_number(complete_graph(4)) == 3);
    CHECK(zero_forcing_number(petersen_graph()) == 5);
    CHECK_THROWS_AS(zero_forcing_number(complete_graph(13)), UnsupportedSizeError);
}

TEST_CASE("T <= Z+ <= Z on all connected n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const int t = tree_cover_exact(g).size;
            const int zp = psd_zero_forcing_number(g);
            const int z = zero_forcing_number(g);
            CHECK(t <= zp);
            CHECK(zp <= z);
        }
    }
}
