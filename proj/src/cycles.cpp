#include "gki/cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gki {

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), -1) {}

    void pop_block(std::pair<int, int> until) {
        std::vector<std::pair<int, int>> block;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until) break;
        }
        blocks.push_back(std::move(block));
    }

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int w : g.neighbors(v)) {
            if (disc[w] == -1) {
                edge_stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) pop_block({v, w});
            } else if (w != parent && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

Cycle order_cycle_block(const Graph& g, const std::vector<int>& verts,
                        const std::vector<bool>& in_block) {
    // Walk the 2-regular block starting at its minimum vertex, stepping
    // toward the smaller in-block neighbor for a deterministic sequence.
    int start = *std::min_element(verts.begin(), verts.end());
    Cycle cyc{start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (!in_block[w] || w == prev) continue;
            if (next == -1 || w < next) next = w;
        }
        prev = cur;
        cur = next;
        if (cur != start) cyc.push_back(cur);
    } while (cur != start);
    return cyc;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.disc[v] == -1) finder.dfs(v, -1);
    return finder.blocks;
}

std::optional<CycleList> disjoint_cycles(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cycle_block_hits(n, 0);
    CycleList cycles;
    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() == 1) continue;  // bridge
        std::set<int> vset;
        for (auto [u, v] : block) {
            vset.insert(u);
            vset.insert(v);
        }
        if (block.size() != vset.size()) return std::nullopt;  // denser than a cycle
        std::vector<int> verts(vset.begin(), vset.end());
        for (int v : verts)
            if (++cycle_block_hits[v] > 1) return std::nullopt;  // shared vertex
        std::vector<bool> in_block(n, false);
        for (int v : verts) in_block[v] = true;
        cycles.push_back(order_cycle_block(g, verts, in_block));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a[0] < b[0]; });
    return cycles;
}

CycleList pendant_cycles(const Graph& g) {
    CycleList found;
    std::set<int> starts_seen;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) != 3) continue;
        for (int first : g.neighbors(x)) {
            if (g.degree(first) != 2) continue;
            Cycle walk{x, first};
            int prev = x, cur = first;
            while (g.degree(cur) == 2) {
                int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                       : g.neighbors(cur)[0];
                if (next == x) break;
                walk.push_back(next);
                prev = cur;
                cur = next;
            }
            if (g.degree(cur) != 2) continue;  // ran into another high-degree vertex
            int min_v = *std::min_element(walk.begin(), walk.end());
            if (!starts_seen.insert(min_v).second) continue;  // same cycle, other direction
            // Normalize: rotate to the minimum vertex, then pick the
            // direction whose second vertex is smaller.
            auto at = std::find(walk.begin(), walk.end(), min_v);
            std::rotate(walk.begin(), at, walk.end());
            if (walk.back() < walk[1]) std::reverse(walk.begin() + 1, walk.end());
            found.push_back(std::move(walk));
        }
    }
    std::sort(found.begin(), found.end(),
              [](const Cycle& a, const Cycle& b) { return a[0] < b[0]; });
    return found;
}

ShrinkResult shrink(const Graph& g) {
    auto cycles = disjoint_cycles(g);
    if (!cycles) throw std::invalid_argument("cycles are not pairwise vertex-disjoint");

    int n = g.vertex_count();
    std::vector<int> cycle_of(n, -1);
    for (size_t c = 0; c < cycles->size(); ++c)
        for (int v : (*cycles)[c]) cycle_of[v] = static_cast<int>(c);

    ShrinkResult res;
    res.cycles = *cycles;
    res.vertex_map.assign(n, -1);
    VertexSet on_cycle;
    int next_id = 0;
    for (int v = 0; v < n; ++v)
        if (cycle_of[v] == -1) res.vertex_map[v] = next_id++;
    res.off_cycle_count = next_id;
    for (int v = 0; v < n; ++v)
        if (cycle_of[v] != -1) {
            res.vertex_map[v] = res.off_cycle_count + cycle_of[v];
            on_cycle.push_back(v);
        }

    // Adjacency transfers along the map; parallel images collapse to one
    // simple edge.
    std::set<std::pair<int, int>> t_edges;
    for (auto [u, v] : g.edges()) {
        int a = res.vertex_map[u], b = res.vertex_map[v];
        if (a == b) continue;
        t_edges.insert({std::min(a, b), std::max(a, b)});
    }
    res.t_graph = Graph::build(res.off_cycle_count + static_cast<int>(cycles->size()),
                               {t_edges.begin(), t_edges.end()});

    auto del = delete_vertices(g, on_cycle);
    res.gamma_graph = std::move(del.graph);
    res.gamma_old_to_new = std::move(del.old_to_new);
    return res;
}

}  // namespace gki
