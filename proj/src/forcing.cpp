#include "treelab/forcing.hpp"

namespace treelab {

namespace {

// One sweep: the lexicographically first legal force, or {-1,-1}.
std::pair<int, int> first_psd_force(const Graph& g, VertexSet filled) {
    auto comps = components_within(g, g.vertices() & ~filled);
    std::pair<int, int> best{-1, -1};
    vs::for_each(filled, [&](int u) {
        for (VertexSet w : comps) {
            VertexSet cand = g.adj(u) & w;
            if (vs::count(cand) == 1) {
                int forced = vs::first(cand);
                if (best.first < 0 || std::pair{u, forced} < best) best = {u, forced};
            }
        }
    });
    return best;
}

std::pair<int, int> first_standard_force(const Graph& g, VertexSet filled) {
    std::pair<int, int> best{-1, -1};
    vs::for_each(filled, [&](int u) {
        VertexSet cand = g.adj(u) & ~filled;
        if (vs::count(cand) == 1) {
            int forced = vs::first(cand);
            if (best.first < 0 || std::pair{u, forced} < best) best = {u, forced};
        }
    });
    return best;
}

template <class Rule>
ForcingState run_closure(const Graph& g, VertexSet b, Rule next_force) {
    if (b & ~g.vertices()) throw std::out_of_range("closure: vertex out of range");
    ForcingState state{b, {}};
    while (true) {
        auto f = next_force(g, state.filled);
        if (f.first < 0) return state;
        state.filled |= vs::bit(f.second);
        state.history.push_back(f);
    }
}

template <class Closure>
int minimum_forcing_set(const Graph& g, Closure close) {
    if (g.n() > 12) throw UnsupportedSizeError("forcing number: subset search limited to n <= 12");
    if (g.n() == 0) return 0;
    for (int k = 1; k <= g.n(); ++k) {
        // k-subsets via Gosper's hack
        VertexSet s = vs::all(k);
        VertexSet limit = VertexSet{1} << g.n();
        while (s < limit) {
            if (close(g, s).filled == g.vertices()) return k;
            VertexSet c = s & -s;
            VertexSet r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return g.n();
}

} // namespace

ForcingState psd_closure(const Graph& g, VertexSet b) { return run_closure(g, b, first_psd_force); }

ForcingState standard_closure(const Graph& g, VertexSet b) {
    return run_closure(g, b, first_standard_force);
}

int psd_zero_forcing_number(const Graph& g) {
    return minimum_forcing_set(g, [](const Graph& gr, VertexSet s) { return psd_closure(gr, s); });
}

int zero_forcing_number(const Graph& g) {
    return minimum_forcing_set(g,
                               [](const Graph& gr, VertexSet s) { return standard_closure(gr, s); });
}

} // namespace treelab
