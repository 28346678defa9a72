#include "treelab/covers.hpp"

#include <algorithm>
#include <cassert>

#include "treelab/forcing.hpp"

namespace treelab {

CoverCheck verify_cover(const Graph& g, const std::vector<VertexSet>& parts) {
    CoverCheck out;
    VertexSet seen = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        VertexSet p = parts[i];
        if (p & ~g.vertices()) throw std::out_of_range("verify_cover: vertex index out of range");
        if (!p) {
            out.violation = "part " + std::to_string(i) + " is empty";
            return out;
        }
        if (p & seen) {
            out.violation = "part " + std::to_string(i) + " overlaps an earlier part";
            return out;
        }
        seen |= p;
        if (!is_connected_subset(g, p)) {
            out.violation = "part " + std::to_string(i) + " induces a disconnected subgraph";
            return out;
        }
        if (count_edges_within(g, p) != vs::count(p) - 1) {
            out.violation = "part " + std::to_string(i) + " induces a cycle";
            return out;
        }
    }
    if (seen != g.vertices()) {
        out.violation = "parts do not cover every vertex";
        return out;
    }
    out.ok = true;
    out.cover = {parts, true};
    return out;
}

// ---- exact partition solver ----

namespace {

constexpr int kSolverBudget = 16;

class PartitionSolver {
public:
    enum class Mode { Tree, Path };

    PartitionSolver(const Graph& g, Mode mode) : g_(g), mode_(mode) {
        // BFS order per component keeps each prefix close to connected
        VertexSet placed = 0;
        while (placed != g.vertices()) {
            int start = vs::first(g.vertices() & ~placed);
            std::vector<int> queue{start};
            placed |= vs::bit(start);
            for (size_t h = 0; h < queue.size(); ++h)
                vs::for_each(g.adj(queue[h]) & ~placed, [&](int w) {
                    placed |= vs::bit(w);
                    queue.push_back(w);
                });
            order_.insert(order_.end(), queue.begin(), queue.end());
        }
        suffix_.assign(static_cast<size_t>(g.n()) + 1, 0);
        for (int i = g.n() - 1; i >= 0; --i)
            suffix_[static_cast<size_t>(i)] =
                suffix_[static_cast<size_t>(i) + 1] | vs::bit(order_[static_cast<size_t>(i)]);
        part_degree_.assign(static_cast<size_t>(g.n()), 0);
    }

    std::optional<std::vector<VertexSet>> solve(int k) {
        k_ = k;
        parts_.clear();
        solution_.reset();
        rec(0);
        return solution_;
    }

private:
    struct Part {
        VertexSet verts = 0;
        std::vector<VertexSet> comps;
    };

    // A component that can no longer gain a connecting vertex is dead unless
    // it is already its part's only component.
    bool viable(VertexSet unassigned) const {
        for (const Part& p : parts_) {
            if (p.comps.size() <= 1) continue;
            for (VertexSet c : p.comps) {
                VertexSet reach = 0;
                vs::for_each(c, [&](int v) { reach |= g_.adj(v); });
                if (!(reach & unassigned)) return false;
            }
        }
        return true;
    }

    void rec(size_t idx) {
        if (solution_) return;
        if (idx == order_.size()) {
            for (const Part& p : parts_)
                if (p.comps.size() != 1) return;
            std::vector<VertexSet> parts;
            for (const Part& p : parts_) parts.push_back(p.verts);
            solution_ = std::move(parts);
            return;
        }
        int v = order_[idx];
        VertexSet rest = suffix_[idx + 1];
        for (size_t pi = 0; pi < parts_.size(); ++pi) {
            // index access: deeper recursion may grow (and reallocate) parts_
            VertexSet hits = g_.adj(v) & parts_[pi].verts;
            if (mode_ == Mode::Path && vs::count(hits) > 2) continue;
            bool ok = true;
            for (VertexSet c : parts_[pi].comps)
                if (vs::count(hits & c) > 1) ok = false; // would close a cycle
            if (mode_ == Mode::Path)
                vs::for_each(hits, [&](int u) {
                    if (part_degree_[static_cast<size_t>(u)] >= 2) ok = false;
                });
            if (!ok) continue;

            // merge the touched components with v
            Part saved = parts_[pi];
            VertexSet merged = vs::bit(v);
            std::vector<VertexSet> comps;
            for (VertexSet c : saved.comps) {
                if (hits & c)
                    merged |= c;
                else
                    comps.push_back(c);
            }
            comps.push_back(merged);
            parts_[pi].verts |= vs::bit(v);
            parts_[pi].comps = std::move(comps);
            part_degree_[static_cast<size_t>(v)] = vs::count(hits);
            vs::for_each(hits, [&](int u) { ++part_degree_[static_cast<size_t>(u)]; });

            if (viable(rest)) rec(idx + 1);

            vs::for_each(hits, [&](int u) { --part_degree_[static_cast<size_t>(u)]; });
            part_degree_[static_cast<size_t>(v)] = 0;
            parts_[pi] = std::move(saved);
            if (solution_) return;
        }
        if (static_cast<int>(parts_.size()) < k_) {
            parts_.push_back({vs::bit(v), {vs::bit(v)}});
            if (viable(rest)) rec(idx + 1);
            parts_.pop_back();
        }
    }

    const Graph& g_;
    Mode mode_;
    std::vector<int> order_;
    std::vector<VertexSet> suffix_;
    std::vector<Part> parts_;
    std::vector<int> part_degree_;
    int k_ = 0;
    std::optional<std::vector<VertexSet>> solution_;
};

int partition_lower_bound(const Graph& g) {
    int comps = static_cast<int>(components(g).size());
    // any induced tree meets a clique in at most 2 vertices
    int from_clique = (clique_number(g) + 1) / 2;
    return std::max({1, comps, from_clique});
}

} // namespace

ExactCover tree_cover_exact(const Graph& g) {
    if (g.n() > kSolverBudget)
        throw UnsupportedSizeError("tree_cover_exact: branch-and-bound budget is n <= 16");
    if (g.n() == 0) return {0, {{}, true}};
    PartitionSolver solver(g, PartitionSolver::Mode::Tree);
    for (int k = partition_lower_bound(g);; ++k) {
        if (auto parts = solver.solve(k)) {
            auto check = verify_cover(g, *parts);
            assert(check.ok);
            return {static_cast<int>(parts->size()), check.cover};
        }
    }
}

int path_cover_exact(const Graph& g) {
    if (g.n() > kSolverBudget)
        throw UnsupportedSizeError("path_cover_exact: branch-and-bound budget is n <= 16");
    if (g.n() == 0) return 0;
    PartitionSolver solver(g, PartitionSolver::Mode::Path);
    for (int k = partition_lower_bound(g);; ++k)
        if (auto parts = solver.solve(k)) return static_cast<int>(parts->size());
}

// ---- reduction rules ----

namespace {

struct Reducer {
    Reduction out;

    void run(const Graph& g, std::vector<int> labels) {
        Graph piece = g;
        while (true) {
            int n = piece.n();
            if (n <= 1) break;

            // leaf deletion
            int leaf = -1;
            for (int v = 0; v < n && leaf < 0; ++v)
                if (piece.degree(v) == 1) leaf = v;
            if (leaf >= 0) {
                int nbr = vs::first(piece.adj(leaf));
                out.trace.steps.push_back({ReductionStep::Kind::LeafDelete,
                                           labels[static_cast<size_t>(leaf)],
                                           labels[static_cast<size_t>(nbr)], -1});
                piece = delete_vertex(piece, leaf);
                labels.erase(labels.begin() + leaf);
                continue;
            }

            // suppress a subdivision vertex: degree 2, nonadjacent neighbors
            int mid = -1;
            for (int v = 0; v < n && mid < 0; ++v)
                if (piece.degree(v) == 2) {
                    int a = vs::first(piece.adj(v));
                    int b = vs::first(piece.adj(v) & ~vs::bit(a));
                    if (!piece.has_edge(a, b)) mid = v;
                }
            if (mid >= 0) {
                int a = vs::first(piece.adj(mid));
                int b = vs::first(piece.adj(mid) & ~vs::bit(a));
                out.trace.steps.push_back({ReductionStep::Kind::SuppressSubdivision,
                                           labels[static_cast<size_t>(mid)],
                                           labels[static_cast<size_t>(a)],
                                           labels[static_cast<size_t>(b)]});
                auto edges = delete_vertex(piece, mid).edges();
                auto shift = [mid](int v) { return v > mid ? v - 1 : v; };
                edges.emplace_back(shift(a), shift(b));
                piece = Graph(n - 1, edges);
                labels.erase(labels.begin() + mid);
                continue;
            }

            auto blocks = block_decomposition(piece);
            if (!blocks.bridges.empty()) {
                auto [u, v] = blocks.bridges.front();
                out.trace.steps.push_back({ReductionStep::Kind::BridgeSplit, -1,
                                           labels[static_cast<size_t>(u)],
                                           labels[static_cast<size_t>(v)]});
                out.trace.offset -= 1;
                Graph cut = delete_edge(piece, u, v);
                for (VertexSet comp : components(cut)) {
                    auto sub = induced(piece, comp);
                    std::vector<int> sub_labels;
                    for (int w : sub.vertices) sub_labels.push_back(labels[static_cast<size_t>(w)]);
                    run(sub.graph, std::move(sub_labels));
                }
                return;
            }
            if (blocks.cut_vertices) {
                int c = vs::first(blocks.cut_vertices);
                out.trace.steps.push_back({ReductionStep::Kind::CutSplit, -1,
                                           labels[static_cast<size_t>(c)], -1});
                auto comps = components_within(piece, piece.vertices() & ~vs::bit(c));
                out.trace.offset -= static_cast<int>(comps.size()) - 1;
                for (VertexSet comp : comps) {
                    auto sub = induced(piece, comp | vs::bit(c));
                    std::vector<int> sub_labels;
                    for (int w : sub.vertices) sub_labels.push_back(labels[static_cast<size_t>(w)]);
                    run(sub.graph, std::move(sub_labels));
                }
                return;
            }
            break; // leafless, suppressed, nonseparable: a kernel
        }
        out.kernels.push_back(piece);
        out.kernel_vertices.push_back(std::move(labels));
    }
};

} // namespace

Reduction reduce(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("reduce: input must be connected");
    Reducer r;
    std::vector<int> labels(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) labels[static_cast<size_t>(v)] = v;
    r.run(g, std::move(labels));
    return std::move(r.out);
}

std::vector<VertexSet> replay_cover(const Reduction& red,
                                    const std::vector<std::vector<VertexSet>>& kernel_covers) {
    if (kernel_covers.size() != red.kernels.size())
        throw std::invalid_argument("replay_cover: one cover per kernel required");
    std::vector<VertexSet> parts; // in original labels
    for (size_t k = 0; k < kernel_covers.size(); ++k)
        for (VertexSet part : kernel_covers[k]) {
            VertexSet mapped = 0;
            vs::for_each(part, [&](int v) {
                mapped |= vs::bit(red.kernel_vertices[k][static_cast<size_t>(v)]);
            });
            parts.push_back(mapped);
        }
    auto part_with = [&](int v) {
        for (size_t i = 0; i < parts.size(); ++i)
            if (vs::has(parts[i], v)) return i;
        throw std::logic_error("replay_cover: vertex not covered");
    };
    for (auto it = red.trace.steps.rbegin(); it != red.trace.steps.rend(); ++it) {
        switch (it->kind) {
        case ReductionStep::Kind::LeafDelete:
        case ReductionStep::Kind::SuppressSubdivision:
            // re-attach the removed vertex next to its anchor
            parts[part_with(it->anchor)] |= vs::bit(it->removed);
            break;
        case ReductionStep::Kind::BridgeSplit: {
            size_t a = part_with(it->anchor), b = part_with(it->anchor2);
            parts[a] |= parts[b];
            parts.erase(parts.begin() + static_cast<long>(b));
            break;
        }
        case ReductionStep::Kind::CutSplit: {
            // merge every part currently containing the cut vertex
            VertexSet merged = 0;
            std::vector<VertexSet> rest;
            for (VertexSet p : parts) {
                if (vs::has(p, it->anchor))
                    merged |= p;
                else
                    rest.push_back(p);
            }
            rest.push_back(merged);
            parts = std::move(rest);
            break;
        }
        }
    }
    return parts;
}

ExactCover tree_cover(const Graph& g) {
    if (g.n() == 0) return {0, {{}, true}};
    if (!is_connected(g)) {
        // per-component solve; covers are independent across components
        ExactCover total{0, {{}, true}};
        for (VertexSet comp : components(g)) {
            auto sub = induced(g, comp);
            ExactCover part = tree_cover(sub.graph);
            total.size += part.size;
            for (VertexSet p : part.witness.parts) {
                VertexSet mapped = 0;
                vs::for_each(p, [&](int v) { mapped |= vs::bit(sub.vertices[static_cast<size_t>(v)]); });
                total.witness.parts.push_back(mapped);
            }
        }
        return total;
    }
    Reduction red = reduce(g);
    std::vector<std::vector<VertexSet>> kernel_covers;
    int size = red.trace.offset;
    for (const Graph& kernel : red.kernels) {
        ExactCover solved = tree_cover_exact(kernel);
        size += solved.size;
        kernel_covers.push_back(solved.witness.parts);
    }
    auto parts = replay_cover(red, kernel_covers);
    auto check = verify_cover(g, parts);
    assert(check.ok && static_cast<int>(parts.size()) == size);
    return {size, check.cover};
}

// ---- constructive upper bounds ----

namespace {

// combinations of the sorted neighbor list, lexicographic within a size
bool next_combination(std::vector<int>& idx, int limit) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<size_t>(i)] < limit - (k - i)) {
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// Search within the active induced subgraph; empty result means none found.
VertexSet find_removable_star_in(const Graph& g, VertexSet active) {
    int total = vs::count(active);
    for (int p = 1; p < total - 1; ++p) {
        VertexSet centers = active;
        VertexSet found = 0;
        vs::for_each(centers, [&](int c) {
            if (found) return;
            auto nbrs = vs::to_vector(g.adj(c) & active);
            if (static_cast<int>(nbrs.size()) < p) return;
            std::vector<int> idx(static_cast<size_t>(p));
            for (int i = 0; i < p; ++i) idx[static_cast<size_t>(i)] = i;
            do {
                VertexSet leaves = 0;
                for (int i : idx) leaves |= vs::bit(nbrs[static_cast<size_t>(i)]);
                bool independent = true;
                vs::for_each(leaves, [&](int l) {
                    if (g.adj(l) & leaves) independent = false;
                });
                if (!independent) continue;
                VertexSet star = leaves | vs::bit(c);
                VertexSet rest = active & ~star;
                if (rest && is_connected_subset(g, rest)) {
                    found = star;
                    break;
                }
            } while (next_combination(idx, static_cast<int>(nbrs.size())));
        });
        if (found) return found;
    }
    return 0;
}

} // namespace

VertexSet find_removable_star(const Graph& g) {
    if (g.n() < 3 || !is_connected(g))
        throw std::invalid_argument("find_removable_star: needs a connected graph, n >= 3");
    VertexSet star = find_removable_star_in(g, g.vertices());
    if (!star) throw std::logic_error("find_removable_star: no removable star found");
    return star;
}

TreeCover half_order_cover(const Graph& g) {
    if (g.n() < 1 || !is_connected(g))
        throw std::invalid_argument("half_order_cover: needs a connected graph, n >= 1");
    std::vector<VertexSet> parts;
    VertexSet active = g.vertices();
    while (active) {
        if (is_tree_subset(g, active)) {
            parts.push_back(active);
            break;
        }
        VertexSet star = find_removable_star_in(g, active);
        if (!star) throw std::logic_error("half_order_cover: no removable star found");
        parts.push_back(star);
        active &= ~star;
    }
    auto check = verify_cover(g, parts);
    assert(check.ok);
    return check.cover;
}

// ---- girth-5 cover ----

namespace {

struct Girth5Builder {
    const Graph& g;

    int degree_in(int v, VertexSet active) const { return vs::count(g.adj(v) & active); }

    std::vector<VertexSet> cover(VertexSet active) {
        int n = vs::count(active);
        if (is_tree_subset(g, active)) return {active};
        if (n <= 10) { // small pieces and proof base cases: solve exactly
            auto sub = induced(g, active);
            auto exact = tree_cover_exact(sub.graph);
            std::vector<VertexSet> parts;
            for (VertexSet p : exact.witness.parts) {
                VertexSet mapped = 0;
                vs::for_each(p, [&](int v) { mapped |= vs::bit(sub.vertices[static_cast<size_t>(v)]); });
                parts.push_back(mapped);
            }
            return parts;
        }

        // strip a leaf and re-attach it to its neighbor's tree
        int leaf = -1;
        vs::for_each(active, [&](int v) {
            if (leaf < 0 && degree_in(v, active) == 1) leaf = v;
        });
        if (leaf >= 0) {
            int nbr = vs::first(g.adj(leaf) & active);
            auto parts = cover(active & ~vs::bit(leaf));
            for (VertexSet& p : parts)
                if (vs::has(p, nbr)) {
                    p |= vs::bit(leaf);
                    return parts;
                }
        }

        // induced P3 centered at a maximum-degree vertex
        int y = -1, best_deg = -1;
        vs::for_each(active, [&](int v) {
            int d = degree_in(v, active);
            if (d > best_deg) {
                best_deg = d;
                y = v;
            }
        });
        int x = vs::first(g.adj(y) & active);
        int z = vs::first(g.adj(y) & active & ~vs::bit(x));
        VertexSet p3 = vs::bit(x) | vs::bit(y) | vs::bit(z);

        auto comps = components_within(g, active & ~p3);

        // a small tree component, or a C5 component, is handled first
        for (VertexSet h : comps) {
            int size = vs::count(h);
            if (size < 3 || size > 5) continue;
            if (is_tree_subset(g, h)) {
                auto parts = cover(active & ~h);
                parts.push_back(h);
                return parts;
            }
            // girth >= 5 leaves C5 as the only non-tree on <= 5 vertices
            int u1 = -1;
            vs::for_each(h, [&](int v) {
                if (u1 < 0 && (g.adj(v) & p3)) u1 = v;
            });
            VertexSet rest_path = h & ~vs::bit(u1);
            auto parts = cover(active & ~rest_path);
            parts.push_back(rest_path);
            return parts;
        }

        // now every component is a K2 or has at least 6 vertices
        std::vector<VertexSet> small, big;
        for (VertexSet h : comps)
            (vs::count(h) == 2 ? small : big).push_back(h);

        std::vector<VertexSet> parts;
        if (small.empty()) {
            parts.push_back(p3);
        } else if (small.size() == 1) {
            // one K2: its endpoints hang off x and z; give one tree to
            // P3+K2 minus the vertex r that re-attaches a big component
            VertexSet k2 = small.front();
            VertexSet chosen = big.front();
            big.erase(big.begin());
            int r = -1;
            vs::for_each(p3, [&](int v) {
                if (r < 0 && (g.adj(v) & chosen)) r = v;
            });
            parts.push_back((p3 | k2) & ~vs::bit(r));
            big.push_back(chosen | vs::bit(r));
        } else {
            // several K2s: two trees, one rooted at x, one at z (plus y)
            VertexSet ends_x = 0, ends_z = 0;
            for (VertexSet k2 : small) {
                ends_x |= k2 & g.adj(x);
                ends_z |= k2 & g.adj(z);
            }
            parts.push_back(ends_x | vs::bit(x));
            parts.push_back(ends_z | vs::bit(z) | vs::bit(y));
        }
        for (VertexSet h : big) {
            auto sub_parts = cover(h);
            parts.insert(parts.end(), sub_parts.begin(), sub_parts.end());
        }
        return parts;
    }
};

} // namespace

TreeCover girth5_cover(const Graph& g) {
    if (!is_connected(g) || g.n() < 6)
        throw std::invalid_argument("girth5_cover: needs a connected graph, n >= 6");
    if (auto gi = girth(g); gi && *gi < 5)
        throw std::invalid_argument("girth5_cover: girth must be at least 5");
    Girth5Builder builder{g};
    auto parts = builder.cover(g.vertices());
    auto check = verify_cover(g, parts);
    assert(check.ok);
    return check.cover;
}

BoundReport bound_report(const Graph& g) {
    BoundReport r;
    r.n = g.n();
    r.m = g.m();
    r.exact = tree_cover(g).size;
    r.alpha = independence_number(g).size;
    r.n_minus_alpha = r.n - r.alpha;
    r.ceil_half = (r.n + 1) / 2;
    if (r.n <= 12) r.z_plus = psd_zero_forcing_number(g);
    r.vertex_bracket_low = 1;
    r.vertex_bracket_high = r.n;
    for (int v = 0; v < g.n(); ++v) {
        int t = tree_cover(delete_vertex(g, v)).size;
        r.vertex_bracket_low = std::max(r.vertex_bracket_low, t - g.degree(v) + 1);
        r.vertex_bracket_high = std::min(r.vertex_bracket_high, t + 1);
    }
    r.edge_bracket_low = 1;
    r.edge_bracket_high = r.n;
    for (auto [u, v] : g.edges()) {
        int t = tree_cover(delete_edge(g, u, v)).size;
        r.edge_bracket_low = std::max(r.edge_bracket_low, t - 1);
        r.edge_bracket_high = std::min(r.edge_bracket_high, t + 1);
    }
    return r;
}

} // namespace treelab
