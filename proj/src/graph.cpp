#include "treelab/graph.hpp"

#include <algorithm>
#include <array>

namespace treelab {

namespace vs {

std::vector<int> to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count(s)));
    for_each(s, [&](int v) { out.push_back(v); });
    return out;
}

} // namespace vs

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
    Graph g(static_cast<int>(adj.size()));
    for (int v = 0; v < g.n_; ++v) {
        VertexSet row = adj[static_cast<size_t>(v)];
        if (row & ~vs::all(g.n_)) throw std::out_of_range("adjacency bit out of range");
        if (vs::has(row, v)) throw std::invalid_argument("loops are not allowed");
        vs::for_each(row, [&](int u) {
            if (!vs::has(adj[static_cast<size_t>(u)], v))
                throw std::invalid_argument("adjacency not symmetric");
        });
    }
    g.adj_ = std::move(adj);
    int deg_sum = 0;
    for (VertexSet row : g.adj_) deg_sum += vs::count(row);
    g.m_ = deg_sum / 2;
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        vs::for_each(adj(u) & ~vs::all(u + 1), [&](int v) { out.emplace_back(u, v); });
    std::sort(out.begin(), out.end());
    return out;
}

Graph complement(const Graph& g) {
    std::vector<VertexSet> adj(static_cast<size_t>(g.n()));
    VertexSet full = g.vertices();
    for (int v = 0; v < g.n(); ++v)
        adj[static_cast<size_t>(v)] = full & ~g.adj(v) & ~vs::bit(v);
    return Graph::from_adjacency(std::move(adj));
}

LineGraph line_graph(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    std::vector<std::pair<int, int>> ledges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[static_cast<size_t>(i)];
            auto [c, d] = es[static_cast<size_t>(j)];
            if (a == c || a == d || b == c || b == d) ledges.emplace_back(i, j);
        }
    return {Graph(m, ledges), std::move(es)};
}

TriangleAugment triangle_augment(const Graph& g) {
    auto es = g.edges();
    int n = g.n();
    int m = static_cast<int>(es.size());
    std::vector<std::pair<int, int>> edges = es;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(es[static_cast<size_t>(i)].first, n + i);
        edges.emplace_back(es[static_cast<size_t>(i)].second, n + i);
    }
    return {Graph(n + m, edges), vs::all(n + m) & ~vs::all(n)};
}

InducedSubgraph induced(const Graph& g, VertexSet s) {
    std::vector<int> verts = vs::to_vector(s);
    int k = static_cast<int>(verts.size());
    std::vector<int> rank(static_cast<size_t>(g.n()), -1);
    for (int i = 0; i < k; ++i) rank[static_cast<size_t>(verts[static_cast<size_t>(i)])] = i;
    std::vector<VertexSet> adj(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        vs::for_each(g.adj(verts[static_cast<size_t>(i)]) & s, [&](int u) {
            adj[static_cast<size_t>(i)] |= vs::bit(rank[static_cast<size_t>(u)]);
        });
    return {Graph::from_adjacency(std::move(adj)), std::move(verts)};
}

Graph delete_vertex(const Graph& g, int v) {
    return induced(g, g.vertices() & ~vs::bit(v)).graph;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
    std::vector<VertexSet> adj(static_cast<size_t>(g.n()));
    for (int w = 0; w < g.n(); ++w) adj[static_cast<size_t>(w)] = g.adj(w);
    adj[static_cast<size_t>(u)] &= ~vs::bit(v);
    adj[static_cast<size_t>(v)] &= ~vs::bit(u);
    return Graph::from_adjacency(std::move(adj));
}

Graph add_leaf(const Graph& g, int v) {
    auto edges = g.edges();
    edges.emplace_back(v, g.n());
    return Graph(g.n() + 1, edges);
}

Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
    auto edges = delete_edge(g, u, v).edges();
    edges.emplace_back(u, g.n());
    edges.emplace_back(v, g.n());
    return Graph(g.n() + 1, edges);
}

Graph vertex_sum(const Graph& g1, int v1, const Graph& g2, int v2) {
    if (v1 < 0 || v1 >= g1.n() || v2 < 0 || v2 >= g2.n())
        throw std::out_of_range("vertex-sum anchor out of range");
    auto map2 = [&](int w) {
        if (w == v2) return v1;
        return g1.n() + w - (w > v2 ? 1 : 0);
    };
    auto edges = g1.edges();
    for (auto [a, b] : g2.edges()) edges.emplace_back(map2(a), map2(b));
    return Graph(g1.n() + g2.n() - 1, edges);
}

VertexSet component_of(const Graph& g, int v, VertexSet within) {
    VertexSet comp = vs::bit(v);
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        vs::for_each(frontier, [&](int u) { next |= g.adj(u); });
        next &= within & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet s) {
    std::vector<VertexSet> out;
    while (s) {
        VertexSet c = component_of(g, vs::first(s), s);
        out.push_back(c);
        s &= ~c;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected_subset(const Graph& g, VertexSet s) {
    if (!s) return false;
    return component_of(g, vs::first(s), s) == s;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return is_connected_subset(g, g.vertices());
}

int count_edges_within(const Graph& g, VertexSet s) {
    int deg_sum = 0;
    vs::for_each(s, [&](int v) { deg_sum += vs::count(g.adj(v) & s); });
    return deg_sum / 2;
}

bool is_forest_subset(const Graph& g, VertexSet s) {
    int verts = vs::count(s);
    int comps = static_cast<int>(components_within(g, s).size());
    return count_edges_within(g, s) == verts - comps;
}

bool is_tree_subset(const Graph& g, VertexSet s) {
    if (!s) return false;
    return is_connected_subset(g, s) && count_edges_within(g, s) == vs::count(s) - 1;
}

bool is_tree(const Graph& g) { return g.n() > 0 && is_tree_subset(g, g.vertices()); }

bool is_clique_subset(const Graph& g, VertexSet s) {
    bool ok = true;
    vs::for_each(s, [&](int v) { ok = ok && (s & ~vs::bit(v) & ~g.adj(v)) == 0; });
    return ok;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    auto g = path_graph(n).edges();
    g.emplace_back(0, n - 1);
    return Graph(n, g);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph complete_bipartite(int s, int t) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) e.emplace_back(i, s + j);
    return Graph(s + t, e);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);       // outer C5
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);             // spokes
    }
    return Graph(10, e);
}

} // namespace treelab
