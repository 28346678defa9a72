#include "treelab/extremal.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace treelab {
namespace {

bool all_blocks_triangles(const Graph& g) {
    const BlockDecomposition bd = block_decomposition(g);
    if (!bd.connected) return false;
    for (VertexSet b : bd.blocks) {
        if (vs::count(b) != 3) return false;
    }
    return true;
}

// C_r with a pendant triangle on every cycle edge, recognized structurally.
// Returns r, or 0 if the graph is not of this form.
int cycle_triangle_order(const Graph& g) {
    const int n = g.n();
    if (n < 6 || n % 2 != 0) return 0;
    const int r = n / 2;
    VertexSet low = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 2) low |= vs::bit(v);
    }
    if (vs::count(low) != r) return 0;
    for (int v = 0; v < n; ++v) {
        if (vs::has(low, v) && (g.adj(v) & low) != 0) return 0;
    }
    // the rest must induce C_r
    const VertexSet ring = vs::all(n) & ~low;
    for (int v = 0; v < n; ++v) {
        if (vs::has(ring, v) && vs::count(g.adj(v) & ring) != 2) return 0;
    }
    if (components_within(g, ring).size() != 1) return 0;
    // each degree-2 vertex spans one ring edge; each ring edge carries exactly one
    std::vector<int> per_edge(static_cast<std::size_t>(n) * n, 0);
    for (int v = 0; v < n; ++v) {
        if (!vs::has(low, v)) continue;
        const VertexSet nb = g.adj(v);
        const int a = vs::first(nb);
        const int b = vs::first(nb & ~vs::bit(a));
        if (!vs::has(ring, a) || !vs::has(ring, b) || !g.has_edge(a, b)) return 0;
        ++per_edge[static_cast<std::size_t>(a) * n + b];
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (vs::has(ring, a) && vs::has(ring, b) && g.has_edge(a, b) &&
                per_edge[static_cast<std::size_t>(a) * n + b] != 1)
                return 0;
        }
    }
    return r;
}

ExtremalClass classify_core(const Graph& b, VertexSet block) {
    ExtremalClass r;
    if (b.n() == 4 && b.m() == 4) {
        r.core = ExtremalClass::Core::C4;
    } else if (b.n() == 4 && b.m() == 5) {
        r.core = ExtremalClass::Core::K4MinusE;
    } else if (int len = cycle_triangle_order(b); len != 0) {
        r.core = ExtremalClass::Core::CycleTriangle;
        r.cycle_length = len;
    } else {
        return r; // NotExtremal
    }
    r.kind = ExtremalClass::Kind::EvenK3Chain;
    r.core_block = block;
    return r;
}

} // namespace

std::string to_string(ExtremalClass::Kind kind) {
    switch (kind) {
        case ExtremalClass::Kind::OddF: return "OddF";
        case ExtremalClass::Kind::EvenLeafOnF: return "EvenLeafOnF";
        case ExtremalClass::Kind::EvenBridgeOfTwoF: return "EvenBridgeOfTwoF";
        case ExtremalClass::Kind::EvenK3Chain: return "EvenK3Chain";
        case ExtremalClass::Kind::NotExtremal: return "NotExtremal";
    }
    return "NotExtremal";
}

std::string to_string(ExtremalClass::Core core) {
    switch (core) {
        case ExtremalClass::Core::None: return "None";
        case ExtremalClass::Core::C4: return "C4";
        case ExtremalClass::Core::K4MinusE: return "K4-e";
        case ExtremalClass::Core::CycleTriangle: return "CycleTriangle";
    }
    return "None";
}

bool is_family_F(const Graph& g) {
    if (g.n() < 3 || g.n() % 2 == 0) return false;
    return all_blocks_triangles(g);
}

ExtremalClass classify_even_extremal(const Graph& g) {
    ExtremalClass out;
    const int n = g.n();
    if (n < 4 || n % 2 != 0) return out;
    const BlockDecomposition bd = block_decomposition(g);
    if (!bd.connected) return out;

    // (1) a leaf whose removal lands in F
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        if (is_family_F(delete_vertex(g, v))) {
            out.kind = ExtremalClass::Kind::EvenLeafOnF;
            out.leaf = v;
            return out;
        }
    }

    // (2) a bridge splitting G into two F members
    for (auto [u, w] : bd.bridges) {
        const Graph cut = delete_edge(g, u, w);
        const VertexSet side_u = component_of(cut, u, cut.vertices());
        const VertexSet side_w = component_of(cut, w, cut.vertices());
        if (is_family_F(induced(cut, side_u).graph) &&
            is_family_F(induced(cut, side_w).graph)) {
            out.kind = ExtremalClass::Kind::EvenBridgeOfTwoF;
            out.bridge = {u, w};
            return out;
        }
    }

    // (3) all blocks are triangles except one core block
    VertexSet core_block = 0;
    int non_k3 = 0;
    for (VertexSet b : bd.blocks) {
        if (vs::count(b) != 3) {
            ++non_k3;
            core_block = b;
        }
    }
    if (non_k3 == 1) {
        ExtremalClass c = classify_core(induced(g, core_block).graph, core_block);
        if (c.kind != ExtremalClass::Kind::NotExtremal) return c;
    }
    return out;
}

Graph generate_family_F(int blocks, std::uint64_t seed) {
    if (blocks < 1) throw std::invalid_argument("generate_family_F: blocks must be >= 1");
    std::mt19937_64 rng(seed);
    Graph g = complete_graph(3);
    for (int i = 1; i < blocks; ++i) {
        std::uniform_int_distribution<int> pick(0, g.n() - 1);
        g = vertex_sum(g, pick(rng), complete_graph(3), 0);
    }
    return g;
}

Graph generate_even_extremal(const EvenExtremalSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    switch (spec.kind) {
        case ExtremalClass::Kind::EvenLeafOnF: {
            Graph f = generate_family_F(spec.f_blocks, rng());
            std::uniform_int_distribution<int> pick(0, f.n() - 1);
            return add_leaf(f, pick(rng));
        }
        case ExtremalClass::Kind::EvenBridgeOfTwoF: {
            const Graph f1 = generate_family_F(spec.f_blocks, rng());
            const Graph f2 = generate_family_F(spec.f_blocks2, rng());
            const int n1 = f1.n();
            std::vector<std::pair<int, int>> edges;
            for (auto [a, b] : f1.edges()) edges.emplace_back(a, b);
            for (auto [a, b] : f2.edges()) edges.emplace_back(n1 + a, n1 + b);
            std::uniform_int_distribution<int> pick1(0, n1 - 1);
            std::uniform_int_distribution<int> pick2(0, f2.n() - 1);
            edges.emplace_back(pick1(rng), n1 + pick2(rng));
            return Graph(n1 + f2.n(), edges);
        }
        case ExtremalClass::Kind::EvenK3Chain: {
            Graph g = [&] {
                switch (spec.core) {
                    case ExtremalClass::Core::C4: return cycle_graph(4);
                    case ExtremalClass::Core::K4MinusE:
                        return delete_edge(complete_graph(4), 0, 1);
                    case ExtremalClass::Core::CycleTriangle:
                        return generate_cycle_triangle(spec.cycle_length);
                    default:
                        throw std::invalid_argument("generate_even_extremal: bad core");
                }
            }();
            for (int i = 0; i < spec.k3_count; ++i) {
                std::uniform_int_distribution<int> pick(0, g.n() - 1);
                g = vertex_sum(g, pick(rng), complete_graph(3), 0);
            }
            return g;
        }
        case ExtremalClass::Kind::OddF:
            return generate_family_F(spec.f_blocks, rng());
        default:
            throw std::invalid_argument("generate_even_extremal: bad kind");
    }
}

Graph generate_k_tree(int k, int n, std::uint64_t seed) {
    if (k < 1 || n < k + 1) throw std::invalid_argument("generate_k_tree: need n >= k+1 >= 2");
    if (n > vs::kMaxVertices) throw UnsupportedSizeError("generate_k_tree: order above 64");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a <= k; ++a) {
        for (int b = a + 1; b <= k; ++b) edges.emplace_back(a, b);
    }
    std::vector<VertexSet> cliques; // current k-cliques usable as attachment faces
    const VertexSet base = vs::all(k + 1);
    for (int skip = 0; skip <= k; ++skip) cliques.push_back(base & ~vs::bit(skip));
    for (int v = k + 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        const VertexSet face = cliques[pick(rng)];
        vs::for_each(face, [&](int u) { edges.emplace_back(u, v); });
        vs::for_each(face, [&](int u) {
            cliques.push_back((face & ~vs::bit(u)) | vs::bit(v));
        });
    }
    return Graph(n, edges);
}

Graph generate_friendship(int k) {
    if (k < 1) throw std::invalid_argument("generate_friendship: k must be >= 1");
    if (2 * k + 1 > vs::kMaxVertices) throw UnsupportedSizeError("generate_friendship: order above 64");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(0, 2 * i + 1);
        edges.emplace_back(0, 2 * i + 2);
        edges.emplace_back(2 * i + 1, 2 * i + 2);
    }
    return Graph(2 * k + 1, edges);
}

Graph generate_cycle_triangle(int r) {
    if (r < 3) throw std::invalid_argument("generate_cycle_triangle: r must be >= 3");
    return triangle_augment(cycle_graph(r)).graph;
}

} // namespace treelab
