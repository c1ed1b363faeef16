#include "gki/enumerate.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "gki/canonical.hpp"

namespace gki {

std::vector<uint64_t> enumerate_graph_codes(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument(
            "internal enumeration is capped at n = 10; supply graph6 input instead");

    static std::mutex cache_mutex;
    static std::map<int, std::vector<uint64_t>> cache;
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    std::vector<uint64_t> codes{0};  // the single graph on one vertex
    for (int size = 2; size <= n; ++size) {
        std::set<uint64_t> next;
        for (uint64_t code : codes) {
            Graph base = graph_from_bits(size - 1, code);
            uint32_t limit = 1u << (size - 1);
            for (uint32_t mask = 0; mask < limit; ++mask) {
                auto edges = base.edges();
                for (uint32_t m = mask; m; m &= m - 1)
                    edges.emplace_back(std::countr_zero(m), size - 1);
                next.insert(canonical_bits(Graph::build(size, std::move(edges))));
            }
        }
        codes.assign(next.begin(), next.end());
    }

    std::scoped_lock lock(cache_mutex);
    cache[n] = codes;
    return codes;
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& fn) {
    for (uint64_t code : enumerate_graph_codes(n)) {
        Graph g = graph_from_bits(n, code);
        if (connected_only && !is_connected(g)) continue;
        fn(g);
    }
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    std::vector<Graph> out;
    for_each_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace gki
