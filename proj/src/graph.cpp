#include "gki/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gki {

Graph Graph::build(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") for n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + ")");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> parts;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet part;
        std::queue<int> bfs;
        bfs.push(s);
        seen[s] = true;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            part.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    bfs.push(w);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

int omega(const Graph& g) {
    return g.edge_count() - g.vertex_count() + component_count(g);
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_acyclic(const Graph& g) { return omega(g) == 0; }

DeletionResult delete_vertices(const Graph& g, const VertexSet& s) {
    int n = g.vertex_count();
    std::vector<bool> gone(n, false);
    for (int v : s) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        gone[v] = true;
    }
    DeletionResult res;
    res.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!gone[v]) {
            res.old_to_new[v] = static_cast<int>(res.new_to_old.size());
            res.new_to_old.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) edges.emplace_back(res.old_to_new[u], res.old_to_new[v]);
    res.graph = Graph::build(static_cast<int>(res.new_to_old.size()), std::move(edges));
    return res;
}

DeletionResult induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<bool> keep_flag(g.vertex_count(), false);
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        keep_flag[v] = true;
    }
    VertexSet drop;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!keep_flag[v]) drop.push_back(v);
    return delete_vertices(g, drop);
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("no edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") to delete");
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges())
        if (e != std::make_pair(u, v)) edges.push_back(e);
    return Graph::build(g.vertex_count(), std::move(edges));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::build(n, std::move(edges));
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::build(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int shift = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::build(shift + b.vertex_count(), std::move(edges));
}

}  // namespace gki
