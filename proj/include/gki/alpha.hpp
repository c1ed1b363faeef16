#pragma once

#include "gki/graph.hpp"

namespace gki {

struct AlphaResult {
    int value = 0;
    /// Lexicographically smallest maximum generalized k-independent set.
    VertexSet witness;
    int k = 0;
};

/// True iff the induced subgraph g[s] contains no k-vertex tree as a
/// subgraph, i.e. every component of g[s] has at most k-1 vertices.
bool is_gen_k_independent(const Graph& g, const VertexSet& s, int k);

/// Exhaustive scan over all 2^n subsets. Rejects graphs above `cap`
/// vertices; use alpha_exact for larger inputs.
AlphaResult alpha_bruteforce(const Graph& g, int k, int cap = 24);

/// Rooted dynamic program; rejects cyclic input.
AlphaResult alpha_tree(const Graph& g, int k);

/// Exact solver for arbitrary graphs: component decomposition, tree DP on
/// acyclic components, branch and reduce elsewhere.
AlphaResult alpha_exact(const Graph& g, int k);

/// Value-only fast paths.
int alpha_value(const Graph& g, int k);
int alpha_tree_value(const Graph& g, int k);

/// Largest feasible set containing all of `required`, or -1 when none
/// exists. With stop_at >= 0 the search may return early with any
/// achievable value >= stop_at.
int alpha_value_with_required(const Graph& g, int k, const VertexSet& required,
                              int stop_at = -1);

/// Lexicographically smallest witness of the (already computed) optimum.
VertexSet lexmin_witness(const Graph& g, int k, int value);

}  // namespace gki
