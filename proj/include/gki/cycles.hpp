#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gki/graph.hpp"

namespace gki {

/// Simple cycle as a closed walk of distinct vertices. Normalized cycles
/// start at their minimum vertex and step toward its smaller neighbor.
using Cycle = std::vector<int>;
using CycleList = std::vector<Cycle>;

/// Biconnected blocks as edge sets (bridges are single-edge blocks).
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g);

/// The complete cycle list when all cycles are pairwise vertex-disjoint,
/// std::nullopt otherwise. Detection runs on the block decomposition:
/// every block must be an edge or a cycle, and no vertex may lie in two
/// cycle blocks.
std::optional<CycleList> disjoint_cycles(const Graph& g);

/// Induced cycles holding exactly one degree-3 vertex, all other cycle
/// vertices of degree 2 in g.
CycleList pendant_cycles(const Graph& g);

/// Contraction of each (vertex-disjoint) cycle to a single vertex, plus
/// the graph left after deleting all cycle vertices.
struct ShrinkResult {
    Graph t_graph;
    Graph gamma_graph;
    CycleList cycles;
    /// Original vertex -> t_graph vertex. Off-cycle vertices map to their
    /// own image; cycle vertices map to their contracted cycle-vertex.
    std::vector<int> vertex_map;
    /// Original vertex -> gamma_graph vertex, -1 for deleted cycle vertices.
    std::vector<int> gamma_old_to_new;
    /// Number of t_graph vertices that are images of off-cycle vertices;
    /// contracted cycle-vertices occupy indices [off_cycle_count, ...).
    int off_cycle_count = 0;
};

/// Throws std::invalid_argument when the cycles are not pairwise
/// vertex-disjoint.
ShrinkResult shrink(const Graph& g);

}  // namespace gki
