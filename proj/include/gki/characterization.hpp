#pragma once

#include <vector>

#include "gki/graph.hpp"
#include "gki/rational.hpp"

namespace gki {

struct BoundCheck {
    int alpha = 0;
    Rational bound;
    bool holds = false;
};

/// alpha_4 against the lower bound 3(n - omega)/4. A false `holds` can
/// only mean a solver bug and is treated as a soundness alarm by callers.
BoundCheck check_bound(const Graph& g);

/// The three structural equality conditions. When the cycles are not
/// pairwise vertex-disjoint the other two conditions are recorded as
/// failed, since Gamma is only defined for cycle-disjoint graphs.
struct StructuralVerdict {
    bool cond_disjoint = false;
    bool cond_cycle_lengths = false;  // every cycle length is 1 mod 4
    bool cond_gamma = false;          // Gamma components of order 0 mod 4, all in R
    bool structural_good = false;
};

StructuralVerdict check_good_structural(const Graph& g);

struct ComponentVerdict {
    VertexSet vertices;
    int alpha = 0;
    Rational bound;
    bool good = false;
};

struct GoodnessReport {
    int n = 0;
    int m = 0;
    int omega_value = 0;
    int alpha_value = 0;
    Rational bound_value;  // exact 3(n - omega)/4
    bool direct_good = false;
    StructuralVerdict structural;
    /// Set when the direct and structural verdicts disagree, which would
    /// contradict the equality characterization.
    bool theorem_violation = false;
    std::vector<ComponentVerdict> component_verdicts;
};

GoodnessReport check_good(const Graph& g);

struct AlphaDecomposition {
    int gamma_alpha = 0;
    std::vector<Rational> cycle_terms;  // 3(|C| - 1)/4 per cycle
    Rational total;
};

/// Splits alpha_4 of a good cycle-disjoint graph into the Gamma part plus
/// one term per cycle. Refuses input that is not good (the identity is
/// only claimed there).
AlphaDecomposition decompose_alpha(const Graph& g);

}  // namespace gki
