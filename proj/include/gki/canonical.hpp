#pragma once

#include <cstdint>
#include <string>

#include "gki/graph.hpp"

namespace gki {

/// AHU-style canonical code of a rooted tree (children codes sorted).
std::string ahu_code_rooted(const Graph& tree, int root);

/// The one or two centroids of a tree, ascending.
std::vector<int> tree_centroids(const Graph& tree);

/// Canonical code of an unrooted tree: the minimum rooted code over its
/// centroids. Equal codes iff the trees are isomorphic. Throws on input
/// that is not a nonempty tree.
std::string ahu_code(const Graph& tree);

/// Lexicographically minimal upper-triangle adjacency bitstring over all
/// vertex permutations, packed MSB-first in graph6 column order. Exact
/// canonical form; limited to n <= 11 so the bits fit one word.
uint64_t canonical_bits(const Graph& g);

Graph graph_from_bits(int n, uint64_t bits);

/// Isomorphism test by color-refinement plus backtracking; intended for
/// the small, sparse graphs this project generates.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace gki
