#include "treelab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace treelab {

void parallel_for(int count, const std::function<void(int)>& f) {
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers <= 1 || count < 4) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
        });
    for (auto& t : pool) t.join();
}

std::vector<Graph> enumerate_connected_where(int n,
                                             const std::function<bool(const Graph&)>& keep) {
    if (n < 1 || n > 10) throw UnsupportedSizeError("enumerate_connected_where: budget is 1 <= n <= 10");
    std::vector<Graph> level{Graph(1)};
    if (!keep(level[0])) return {};
    if (n == 1) return level;

    for (int k = 1; k < n; ++k) {
        std::map<std::uint64_t, Graph> next; // key order gives a stable output order
        std::mutex mu;
        parallel_for(static_cast<int>(level.size()), [&](int gi) {
            const Graph& base = level[static_cast<size_t>(gi)];
            std::vector<std::pair<std::uint64_t, Graph>> local;
            std::vector<VertexSet> adj(static_cast<size_t>(k + 1));
            for (VertexSet s = 1; s <= vs::all(k); ++s) {
                for (int v = 0; v < k; ++v)
                    adj[static_cast<size_t>(v)] = base.adj(v) | (vs::has(s, v) ? vs::bit(k) : 0);
                adj[static_cast<size_t>(k)] = s;
                Graph candidate = Graph::from_adjacency(adj);
                if (!keep(candidate)) continue;
                local.emplace_back(canonical_key(candidate), std::move(candidate));
            }
            std::lock_guard<std::mutex> lock(mu);
            for (auto& [key, graph] : local) next.try_emplace(key, std::move(graph));
        });
        level.clear();
        level.reserve(next.size());
        for (auto& [key, graph] : next) level.push_back(std::move(graph));
    }
    return level;
}

std::vector<Graph> enumerate_connected(int n) {
    if (n > 9) throw UnsupportedSizeError("enumerate_connected: budget is 1 <= n <= 9");
    return enumerate_connected_where(n, [](const Graph&) { return true; });
}

} // namespace treelab
