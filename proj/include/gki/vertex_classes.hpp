#pragma once

#include "gki/graph.hpp"

namespace gki {

/// Pendant vertices and the quasi-pendant refinements used by the equality
/// analysis: Q2 (quasi-pendants of degree 2), Q3 (quasi-pendants of degree
/// 3 with exactly two pendant neighbors), and Q2' (degree-2 vertices with
/// exactly one neighbor in Q2).
struct PendantClasses {
    VertexSet pendant;
    VertexSet quasi_pendant;
    VertexSet q2;
    VertexSet q3;
    VertexSet q2_prime;
};

PendantClasses pendant_and_quasi_classes(const Graph& g);

}  // namespace gki
