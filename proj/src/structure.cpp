#include "treelab/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>

namespace treelab {

// ---- block decomposition (Tarjan articulation-point DFS) ----

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    explicit BlockDfs(const Graph& graph)
        : g(graph), disc(static_cast<size_t>(graph.n()), -1), low(static_cast<size_t>(graph.n()), 0) {}

    void pop_block(std::pair<int, int> until) {
        VertexSet block = 0;
        std::pair<int, int> e;
        do {
            e = edge_stack.back();
            edge_stack.pop_back();
            block |= vs::bit(e.first) | vs::bit(e.second);
        } while (e != until);
        out.blocks.push_back(block);
    }

    void dfs(int v, int parent) {
        const bool is_root = parent < 0;
        disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
        int children = 0;
        bool skipped_parent = false;
        vs::for_each(g.adj(v), [&](int w) {
            if (w == parent && !skipped_parent) { // skip the tree edge once
                skipped_parent = true;
                return;
            }
            if (disc[static_cast<size_t>(w)] < 0) {
                ++children;
                std::pair<int, int> e{v, w};
                edge_stack.push_back(e);
                dfs(w, v);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
                if (low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(v)]) {
                    if (!is_root || children > 1) out.cut_vertices |= vs::bit(v);
                    pop_block(e);
                }
            } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(v)]) {
                edge_stack.push_back({v, w});
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
            }
        });
    }
};

} // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    BlockDfs dfs(g);
    int roots = 0;
    for (int v = 0; v < g.n(); ++v)
        if (dfs.disc[static_cast<size_t>(v)] < 0) {
            ++roots;
            if (g.degree(v) == 0) {
                dfs.disc[static_cast<size_t>(v)] = dfs.timer++;
                dfs.out.blocks.push_back(vs::bit(v)); // isolated vertex block
            } else {
                dfs.dfs(v, -1);
            }
        }
    BlockDecomposition out = std::move(dfs.out);
    out.connected = roots <= 1;
    for (const VertexSet& b : out.blocks)
        if (vs::count(b) == 2) {
            int u = vs::first(b);
            out.bridges.emplace_back(u, vs::first(b & ~vs::bit(u)));
        }
    out.block_adjacency.assign(out.blocks.size(), {});
    for (size_t i = 0; i < out.blocks.size(); ++i)
        for (size_t j = i + 1; j < out.blocks.size(); ++j)
            if (out.blocks[i] & out.blocks[j]) {
                out.block_adjacency[i].push_back(static_cast<int>(j));
                out.block_adjacency[j].push_back(static_cast<int>(i));
            }
    return out;
}

// ---- girth: per-vertex BFS, minimum over all non-tree edge closings ----

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<size_t>(g.n()));
    std::vector<int> parent(static_cast<size_t>(g.n()));
    std::vector<int> queue(static_cast<size_t>(g.n()));
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(s)] = 0;
        parent[static_cast<size_t>(s)] = -1;
        int head = 0, tail = 0;
        queue[static_cast<size_t>(tail++)] = s;
        while (head < tail) {
            int u = queue[static_cast<size_t>(head++)];
            if (2 * dist[static_cast<size_t>(u)] >= best) break;
            vs::for_each(g.adj(u), [&](int w) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    queue[static_cast<size_t>(tail++)] = w;
                } else if (w != parent[static_cast<size_t>(u)]) {
                    best = std::min(best, dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1);
                }
            });
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

// ---- maximum independent set (branch and bound) ----

namespace {

void mis_search(const Graph& g, VertexSet cand, VertexSet chosen, IndependenceResult& best) {
    while (true) {
        if (vs::count(chosen) + vs::count(cand) <= best.size) return;
        if (!cand) break;
        // forced picks: vertices with at most one candidate neighbor
        int pick = -1, max_deg = -1;
        VertexSet scan = cand;
        bool forced = false;
        vs::for_each(scan, [&](int v) {
            int d = vs::count(g.adj(v) & cand);
            if (d <= 1 && !forced) {
                chosen |= vs::bit(v);
                cand &= ~(vs::bit(v) | g.adj(v));
                forced = true;
            } else if (d > max_deg) {
                max_deg = d;
                pick = v;
            }
        });
        if (forced) continue;
        // branch on highest-degree candidate: include, then exclude
        mis_search(g, cand & ~(vs::bit(pick) | g.adj(pick)), chosen | vs::bit(pick), best);
        cand &= ~vs::bit(pick);
    }
    if (vs::count(chosen) > best.size) best = {vs::count(chosen), chosen};
}

} // namespace

IndependenceResult independence_number(const Graph& g) {
    IndependenceResult best;
    mis_search(g, g.vertices(), 0, best);
    return best;
}

int clique_number(const Graph& g) {
    if (g.n() == 0) return 0;
    return independence_number(complement(g)).size;
}

// ---- exact treewidth: subset DP over elimination orderings ----

namespace {

// Number of vertices outside S u {v} reachable from v through S.
int elimination_degree(const Graph& g, VertexSet s, int v) {
    VertexSet seen = vs::bit(v);
    VertexSet frontier = seen;
    VertexSet out = 0;
    while (frontier) {
        VertexSet nb = 0;
        vs::for_each(frontier, [&](int u) { nb |= g.adj(u); });
        nb &= ~seen;
        seen |= nb;
        out |= nb & ~s;
        frontier = nb & s;
    }
    return vs::count(out);
}

} // namespace

int treewidth(const Graph& g) {
    int n = g.n();
    if (n > 14) throw UnsupportedSizeError("treewidth: exact subset DP limited to n <= 14");
    if (n == 0) return -1;
    std::vector<std::int8_t> opt(size_t{1} << n, 0);
    for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
        int best = std::numeric_limits<int>::max();
        vs::for_each(s, [&](int v) {
            int w = std::max<int>(opt[s & ~vs::bit(v)], elimination_degree(g, s & ~vs::bit(v), v));
            best = std::min(best, w);
        });
        opt[s] = static_cast<std::int8_t>(best);
    }
    return opt[(VertexSet{1} << n) - 1];
}

// ---- outerplanarity: forbidden topological minors K4 and K_{2,3} ----
// Both have maximum degree 3, so minor containment coincides with
// subdivision containment: branch vertices plus internally disjoint paths.

namespace {

// Connect the given terminal pairs by internally vertex-disjoint paths whose
// internal vertices come from `avail`.
bool link_pairs(const Graph& g, const std::vector<std::pair<int, int>>& pairs, size_t idx,
                VertexSet avail) {
    if (idx == pairs.size()) return true;
    auto [s, t] = pairs[idx];
    // DFS over simple paths from s to t
    std::function<bool(int, VertexSet)> extend = [&](int u, VertexSet used) -> bool {
        if (g.has_edge(u, t)) {
            if (link_pairs(g, pairs, idx + 1, avail & ~used)) return true;
        }
        bool found = false;
        vs::for_each(g.adj(u) & avail & ~used, [&](int w) {
            if (!found) found = extend(w, used | vs::bit(w));
        });
        return found;
    };
    return extend(s, 0);
}

bool has_subdivision(const Graph& g, const std::vector<int>& branch,
                     const std::vector<std::pair<int, int>>& h_edges) {
    VertexSet branch_set = 0;
    for (int v : branch) branch_set |= vs::bit(v);
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, j] : h_edges)
        pairs.emplace_back(branch[static_cast<size_t>(i)], branch[static_cast<size_t>(j)]);
    return link_pairs(g, pairs, 0, g.vertices() & ~branch_set);
}

bool has_k4_subdivision(const Graph& g) {
    int n = g.n();
    static const std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int a = 0; a < n; ++a) {
        if (g.degree(a) < 3) continue;
        for (int b = a + 1; b < n; ++b) {
            if (g.degree(b) < 3) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.degree(c) < 3) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (g.degree(d) < 3) continue;
                    if (has_subdivision(g, {a, b, c, d}, k4)) return true;
                }
            }
        }
    }
    return false;
}

bool has_k23_subdivision(const Graph& g) {
    int n = g.n();
    static const std::vector<std::pair<int, int>> k23{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
    for (int a = 0; a < n; ++a) {
        if (g.degree(a) < 3) continue;
        for (int b = a + 1; b < n; ++b) {
            if (g.degree(b) < 3) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b || g.degree(c) < 2) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (d == a || d == b || g.degree(d) < 2) continue;
                    for (int e = d + 1; e < n; ++e) {
                        if (e == a || e == b || g.degree(e) < 2) continue;
                        if (has_subdivision(g, {a, b, c, d, e}, k23)) return true;
                    }
                }
            }
        }
    }
    return false;
}

} // namespace

bool is_outerplanar(const Graph& g) {
    if (g.n() > 16) throw UnsupportedSizeError("is_outerplanar: minor search limited to n <= 16");
    if (g.n() >= 2 && g.m() > 2 * g.n() - 3) return false; // outerplanar graphs are sparse
    return !has_k4_subdivision(g) && !has_k23_subdivision(g);
}

// ---- canonical form and isomorphism ----

namespace {

struct CanonSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, 16> perm{};

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.n()), total_bits(graph.n() * (graph.n() - 1) / 2) {}

    void rec(int depth, std::uint64_t prefix, int bits, VertexSet used) {
        if (depth == n) {
            best = std::min(best, prefix);
            return;
        }
        vs::for_each(g.vertices() & ~used, [&](int v) {
            std::uint64_t row = 0;
            for (int j = 0; j < depth; ++j)
                row = (row << 1) | (g.has_edge(v, perm[static_cast<size_t>(j)]) ? 1u : 0u);
            std::uint64_t next = (prefix << depth) | row;
            int next_bits = bits + depth;
            if (next > (best >> (total_bits - next_bits))) return; // cannot beat best
            perm[static_cast<size_t>(depth)] = v;
            rec(depth + 1, next, next_bits, used | vs::bit(v));
        });
    }
};

} // namespace

std::uint64_t canonical_key(const Graph& g) {
    if (g.n() > 11) throw UnsupportedSizeError("canonical_key: bitstring form limited to n <= 11");
    if (g.n() <= 1) return 0;
    CanonSearch search(g);
    search.rec(0, 0, 0, 0);
    return search.best | (std::uint64_t{static_cast<std::uint64_t>(g.n())} << 58);
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map, VertexSet used_b, int v) {
    if (v == a.n()) return true;
    bool found = false;
    vs::for_each(b.vertices() & ~used_b, [&](int w) {
        if (found || a.degree(v) != b.degree(w)) return;
        for (int u = 0; u < v; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[static_cast<size_t>(u)], w)) return;
        map[static_cast<size_t>(v)] = w;
        if (iso_extend(a, b, map, used_b | vs::bit(w), v + 1)) found = true;
    });
    return found;
}

} // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    if (a.n() <= 11) return canonical_key(a) == canonical_key(b);
    std::vector<int> map(static_cast<size_t>(a.n()), -1);
    return iso_extend(a, b, map, 0, 0);
}

} // namespace treelab
