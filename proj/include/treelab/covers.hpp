#ifndef TREELAB_COVERS_HPP
#define TREELAB_COVERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "treelab/graph.hpp"

namespace treelab {

// A partition of V into parts, each claimed to induce a tree.
struct TreeCover {
    std::vector<VertexSet> parts;
    bool verified = false;
};

struct CoverCheck {
    bool ok = false;
    TreeCover cover;       // verified == ok
    std::string violation; // first violated condition, names the part index
};

CoverCheck verify_cover(const Graph& g, const std::vector<VertexSet>& parts);

// ---- exact solvers (iterative deepening branch and bound) ----

struct ExactCover {
    int size = 0;
    TreeCover witness;
};

ExactCover tree_cover_exact(const Graph& g); // n <= 16
int path_cover_exact(const Graph& g);        // n <= 16, induced-path parts

// ---- reduction rules ----

struct ReductionStep {
    enum class Kind { LeafDelete, SuppressSubdivision, BridgeSplit, CutSplit };
    Kind kind;
    int removed = -1; // deleted leaf / suppressed degree-2 vertex (original label)
    int anchor = -1;  // leaf neighbor; subdivision neighbor; bridge endpoint; cut vertex
    int anchor2 = -1; // second subdivision neighbor / second bridge endpoint
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    int offset = 0; // T(G) = sum T(kernel_i) + offset
};

struct Reduction {
    std::vector<Graph> kernels;
    std::vector<std::vector<int>> kernel_vertices; // kernel index -> original labels
    ReductionTrace trace;
};

Reduction reduce(const Graph& g);

// Rebuilds a cover of the original graph from minimum covers of the kernels
// (parts given in kernel-local indices). Result has sum(sizes) + offset parts.
std::vector<VertexSet> replay_cover(const Reduction& red,
                                    const std::vector<std::vector<VertexSet>>& kernel_covers);

// reduce, solve each kernel exactly, replay. Exact for any graph whose
// kernels fit the solver budget.
ExactCover tree_cover(const Graph& g);

// ---- constructive upper bounds ----

// Induced star K_{1,p} whose removal leaves the graph connected and nonempty.
VertexSet find_removable_star(const Graph& g);

TreeCover half_order_cover(const Graph& g); // size <= ceil(n/2), G connected
TreeCover girth5_cover(const Graph& g);     // size <= floor(n/3), girth >= 5, n >= 6

struct BoundReport {
    int n = 0;
    int m = 0;
    int exact = 0;        // T(G)
    int alpha = 0;
    int n_minus_alpha = 0; // upper bound (independence bound)
    int ceil_half = 0;     // upper bound for connected G
    std::optional<int> z_plus; // upper bound, when within the forcing budget
    int vertex_bracket_low = 0, vertex_bracket_high = 0; // from T(G-v) for all v
    int edge_bracket_low = 0, edge_bracket_high = 0;     // from T(G-e) for all e
};

BoundReport bound_report(const Graph& g);

} // namespace treelab

#endif
