#include "gki/characterization.hpp"

#include <stdexcept>

#include "gki/alpha.hpp"
#include "gki/cycles.hpp"
#include "gki/extremal.hpp"

namespace gki {

BoundCheck check_bound(const Graph& g) {
    BoundCheck res;
    res.alpha = alpha_value(g, 4);
    res.bound = Rational(3LL * (g.vertex_count() - omega(g)), 4);
    res.holds = Rational(res.alpha) >= res.bound;
    return res;
}

StructuralVerdict check_good_structural(const Graph& g) {
    StructuralVerdict v;
    auto cycles = disjoint_cycles(g);
    if (!cycles) return v;  // (ii)/(iii) fail by precondition
    v.cond_disjoint = true;

    v.cond_cycle_lengths = true;
    VertexSet cycle_vertices;
    for (const auto& c : *cycles) {
        if (c.size() % 4 != 1) v.cond_cycle_lengths = false;
        cycle_vertices.insert(cycle_vertices.end(), c.begin(), c.end());
    }

    v.cond_gamma = true;
    Graph gamma = delete_vertices(g, cycle_vertices).graph;
    for (const auto& comp : components(gamma)) {
        if (comp.size() % 4 != 0) {
            v.cond_gamma = false;
            break;
        }
        if (!is_in_R(induced_subgraph(gamma, comp).graph, 4)) {
            v.cond_gamma = false;
            break;
        }
    }

    v.structural_good = v.cond_disjoint && v.cond_cycle_lengths && v.cond_gamma;
    return v;
}

GoodnessReport check_good(const Graph& g) {
    GoodnessReport rep;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.omega_value = omega(g);
    rep.alpha_value = alpha_value(g, 4);
    rep.bound_value = Rational(3LL * (rep.n - rep.omega_value), 4);
    rep.direct_good = Rational(rep.alpha_value) == rep.bound_value;
    rep.structural = check_good_structural(g);
    rep.theorem_violation = rep.direct_good != rep.structural.structural_good;

    for (const auto& comp : components(g)) {
        ComponentVerdict cv;
        cv.vertices = comp;
        Graph sub = induced_subgraph(g, comp).graph;
        cv.alpha = alpha_value(sub, 4);
        cv.bound = Rational(3LL * (sub.vertex_count() - omega(sub)), 4);
        cv.good = Rational(cv.alpha) == cv.bound;
        rep.component_verdicts.push_back(std::move(cv));
    }
    return rep;
}

AlphaDecomposition decompose_alpha(const Graph& g) {
    GoodnessReport rep = check_good(g);
    if (!rep.direct_good || !rep.structural.cond_disjoint)
        throw std::invalid_argument(
            "decompose_alpha requires a good graph with pairwise vertex-disjoint cycles");
    ShrinkResult shrunk = shrink(g);
    AlphaDecomposition dec;
    dec.gamma_alpha = alpha_value(shrunk.gamma_graph, 4);
    dec.total = Rational(dec.gamma_alpha);
    for (const auto& c : shrunk.cycles) {
        Rational term(3LL * (static_cast<long long>(c.size()) - 1), 4);
        dec.total = dec.total + term;
        dec.cycle_terms.push_back(term);
    }
    return dec;
}

}  // namespace gki
