#ifndef TREELAB_FORCING_HPP
#define TREELAB_FORCING_HPP

#include <utility>
#include <vector>

#include "treelab/graph.hpp"

namespace treelab {

struct ForcingState {
    VertexSet filled = 0;
    std::vector<std::pair<int, int>> history; // (forcer, forced), in applied order
};

// Positive semidefinite rule: a filled u forces the unfilled w when w is the
// only unfilled neighbor of u inside one component of G minus the filled set.
ForcingState psd_closure(const Graph& g, VertexSet b);

// Standard rule: a filled u with exactly one unfilled neighbor forces it.
ForcingState standard_closure(const Graph& g, VertexSet b);

int psd_zero_forcing_number(const Graph& g); // n <= 12
int zero_forcing_number(const Graph& g);     // n <= 12

} // namespace treelab

#endif
