#pragma once

#include <cstdint>
#include <functional>

#include "gki/graph.hpp"

namespace gki {

/// Canonical codes of all graphs on n vertices up to isomorphism, sorted.
/// Built by vertex augmentation with canonical-form deduplication and
/// cached per order. Capped at n = 10 (canonicalization is factorial);
/// larger corpora should arrive as graph6 files.
std::vector<uint64_t> enumerate_graph_codes(int n);

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& fn);

std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace gki
