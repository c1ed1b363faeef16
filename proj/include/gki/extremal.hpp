#pragma once

#include <map>
#include <optional>

#include "gki/graph.hpp"

namespace gki {

/// All trees on n vertices up to isomorphism, ordered by canonical code.
std::vector<Graph> all_trees(int n);

/// The extremal family R_i for block size k: trees on k*i vertices built
/// by iteratively attaching a k-vertex tree by a single edge. Pairwise
/// non-isomorphic, deterministic order. Throws when k*i exceeds the cap.
std::vector<Graph> generate_R(int i, int k = 4, int vertex_cap = 20);

/// Witness that a tree lies in R_{n/k}: a partition into connected
/// k-blocks plus an order in which each block after the first attaches to
/// the union of the earlier ones by exactly one edge.
struct RCertificate {
    std::vector<VertexSet> blocks;  // sorted by smallest member
    std::vector<int> attach_order;  // indices into blocks
};

/// Decides membership by a partition dynamic program over the rooted
/// tree. Rejects disconnected or cyclic input; returns std::nullopt when
/// the order is not divisible by k or no partition exists.
std::optional<RCertificate> is_in_R(const Graph& tree, int k = 4);

/// Independent re-check of a certificate against its tree.
bool verify_r_certificate(const Graph& tree, int k, const RCertificate& cert);

/// Spider-like tree: one center, `p4_arms` hanging paths of three
/// vertices, and for each (k, count) entry `count` stars S_k attached by
/// identifying one leaf with the center.
Graph build_O_gadget(int p4_arms, const std::map<int, int>& star_arms);

/// All connected graphs on n vertices (up to isomorphism) meeting the
/// equality characterization: pairwise vertex-disjoint cycles of length
/// 1 mod 4 and every cycle-free component in the R family. Constructive:
/// assembles cycle and R-tree pieces over all piece-tree shapes, then
/// filters through the structural checker and deduplicates.
std::vector<Graph> generate_good_graphs(int n, int cap = 16);

}  // namespace gki
