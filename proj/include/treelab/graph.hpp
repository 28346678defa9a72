#ifndef TREELAB_GRAPH_HPP
#define TREELAB_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treelab {

// A set of vertices of a graph on at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

namespace vs {

constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr bool has(VertexSet s, int v) { return (s >> v) & 1u; }
inline int count(VertexSet s) { return std::popcount(s); }
inline int first(VertexSet s) { return s ? std::countr_zero(s) : -1; }

constexpr VertexSet all(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

template <class F>
void for_each(VertexSet s, F f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

std::vector<int> to_vector(VertexSet s);

} // namespace vs

struct UnsupportedSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph, vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<size_t>(n)) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(check_order(n)), adj_(static_cast<size_t>(n)) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    static Graph from_adjacency(std::vector<VertexSet> adj);

    int n() const { return n_; }
    int m() const { return m_; }
    VertexSet adj(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return vs::count(adj(v)); }
    bool has_edge(int u, int v) const { return vs::has(adj(u), v); }
    VertexSet vertices() const { return vs::all(n_); }

    // All edges {u,v} with u < v, sorted lexicographically. This ordering is
    // shared by line_graph, triangle_augment and the incidence matrices.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    static int check_order(int n) {
        if (n < 0 || n > vs::kMaxVertices)
            throw UnsupportedSizeError("graph order must be between 0 and 64");
        return n;
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (!has_edge(u, v)) {
            adj_[static_cast<size_t>(u)] |= vs::bit(v);
            adj_[static_cast<size_t>(v)] |= vs::bit(u);
            ++m_;
        }
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// ---- basic constructions ----

Graph complement(const Graph& g);

struct LineGraph {
    Graph graph;                                // one vertex per edge of the source
    std::vector<std::pair<int, int>> source_edge; // vertex index -> source edge
};
LineGraph line_graph(const Graph& g);

struct TriangleAugment {
    Graph graph;              // n + m vertices; edge-vertex for edge i is n + i
    VertexSet edge_vertices;  // the m new vertices
};
TriangleAugment triangle_augment(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices; // new index -> old index, ascending
};
InducedSubgraph induced(const Graph& g, VertexSet s);

Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph add_leaf(const Graph& g, int v);          // new leaf gets index n
Graph subdivide_edge(const Graph& g, int u, int v); // new vertex gets index n

// G1 +_v G2: the vertex `v2` of g2 is identified with `v1` of g1; the other
// vertices of g2 follow after those of g1.
Graph vertex_sum(const Graph& g1, int v1, const Graph& g2, int v2);

// ---- connectivity and shape queries ----

bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, VertexSet s);
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, VertexSet s);
VertexSet component_of(const Graph& g, int v, VertexSet within);

int count_edges_within(const Graph& g, VertexSet s);
bool is_forest_subset(const Graph& g, VertexSet s);
bool is_tree_subset(const Graph& g, VertexSet s);
bool is_tree(const Graph& g);
bool is_clique_subset(const Graph& g, VertexSet s);

// ---- named graphs (used by generators and tests) ----

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph star_graph(int leaves); // K_{1,leaves}, center 0
Graph petersen_graph();

// ---- structural parameters ----

struct BlockDecomposition {
    std::vector<VertexSet> blocks;           // maximal nonseparable subgraphs
    VertexSet cut_vertices = 0;
    std::vector<std::pair<int, int>> bridges;
    std::vector<std::vector<int>> block_adjacency; // blocks sharing a cut vertex
    bool connected = true;                   // false when input had >1 component
};
BlockDecomposition block_decomposition(const Graph& g);

std::optional<int> girth(const Graph& g);

struct IndependenceResult {
    int size = 0;
    VertexSet witness = 0;
};
IndependenceResult independence_number(const Graph& g);
int clique_number(const Graph& g);

int treewidth(const Graph& g);      // exact; n <= 14
bool is_outerplanar(const Graph& g); // no K4/K_{2,3} minor; n <= 16

// ---- isomorphism ----

bool is_isomorphic(const Graph& a, const Graph& b);

// Minimum adjacency bitstring over all vertex orderings; n <= 11 so the
// upper triangle fits in 64 bits. Equal keys <=> isomorphic.
std::uint64_t canonical_key(const Graph& g);

} // namespace treelab

#endif
