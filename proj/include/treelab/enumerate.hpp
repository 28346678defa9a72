#ifndef TREELAB_ENUMERATE_HPP
#define TREELAB_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "treelab/graph.hpp"

namespace treelab {

// All connected graphs on exactly n vertices, one per isomorphism class,
// in a deterministic (canonical-key) order. 1 <= n <= 9.
std::vector<Graph> enumerate_connected(int n);

// Same, restricted to graphs satisfying `keep`. The predicate must be
// hereditary under vertex deletion (true for girth bounds, triangle-freeness,
// outerplanarity, ...), since generation extends smaller members only.
// 1 <= n <= 10; n = 10 is practical only for sparse hereditary families.
std::vector<Graph> enumerate_connected_where(int n, const std::function<bool(const Graph&)>& keep);

// Deterministic parallel map: applies f to 0..count-1 on a small thread pool,
// results land at their input index.
template <class T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& f);

void parallel_for(int count, const std::function<void(int)>& f);

template <class T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& f) {
    std::vector<T> out(static_cast<size_t>(count));
    parallel_for(count, [&](int i) { out[static_cast<size_t>(i)] = f(i); });
    return out;
}

} // namespace treelab

#endif
