#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gki {

/// Subset of a graph's vertices, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

/// Finite simple undirected graph with stable 0-based vertex indices.
/// Immutable after construction, so values can be shared between threads.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws std::invalid_argument naming the
    /// offending edge on self-loops, duplicates, or out-of-range endpoints.
    static Graph build(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges normalized to u < v and sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

int component_count(const Graph& g);

/// Dimension of the cycle space: |E| - |V| + c(G). Zero iff acyclic.
int omega(const Graph& g);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

/// Result of deleting vertices: the induced subgraph on the survivors,
/// re-indexed densely, plus both direction maps.
struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;
};

DeletionResult delete_vertices(const Graph& g, const VertexSet& s);

/// Induced subgraph on `keep` (complement of a deletion).
DeletionResult induced_subgraph(const Graph& g, const VertexSet& keep);

Graph delete_edge(const Graph& g, int u, int v);

// Common families used throughout the tests and generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // center is vertex 0
Graph complete_graph(int n);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace gki
