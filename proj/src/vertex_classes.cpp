#include "gki/vertex_classes.hpp"

#include <algorithm>

namespace gki {

PendantClasses pendant_and_quasi_classes(const Graph& g) {
    int n = g.vertex_count();
    PendantClasses cls;
    std::vector<bool> is_pendant(n, false), in_q2(n, false);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) {
            is_pendant[v] = true;
            cls.pendant.push_back(v);
        }
    for (int v = 0; v < n; ++v) {
        int pendant_nbrs = 0;
        for (int w : g.neighbors(v)) pendant_nbrs += is_pendant[w];
        if (pendant_nbrs == 0) continue;
        cls.quasi_pendant.push_back(v);
        if (g.degree(v) == 2) {
            in_q2[v] = true;
            cls.q2.push_back(v);
        }
        if (g.degree(v) == 3 && pendant_nbrs == 2) cls.q3.push_back(v);
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        int q2_nbrs = 0;
        for (int w : g.neighbors(v)) q2_nbrs += in_q2[w];
        if (q2_nbrs == 1) cls.q2_prime.push_back(v);
    }
    return cls;
}

}  // namespace gki
