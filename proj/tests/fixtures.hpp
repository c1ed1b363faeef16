#pragma once

// Shared graph fixtures for the tests.

#include "gki/graph.hpp"

namespace fixtures {

// 27-vertex connected cactus: a 9-cycle and two pendant 5-cycles hanging
// off a path, plus a hanging S4 and P4. Its cycle-free rest has exactly
// two components of order 4 (one star, one path).
inline gki::Graph cactus27() {
    return gki::Graph::build(
        27, {{0, 1},   {1, 2},   {2, 4},   {4, 5},   {5, 6},   {6, 7},   {7, 8},
             {8, 9},   {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 9},  {5, 14},
             {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 14}, {4, 19},  {19, 20},
             {20, 21}, {21, 22}, {22, 23}, {23, 24}, {24, 25}, {25, 26}, {26, 4},
             {1, 3}});
}

// Two triangles sharing one vertex.
inline gki::Graph bowtie() {
    return gki::Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Triangle with one pendant edge.
inline gki::Graph c3_plus() {
    return gki::Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

// K4 minus one edge.
inline gki::Graph k4_minus() {
    return gki::Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Center with three legs of length two (n = 7).
inline gki::Graph spider_3x2() {
    return gki::Graph::build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

// 5-cycle with one pendant edge.
inline gki::Graph c5_pendant() {
    return gki::Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
}

}  // namespace fixtures
