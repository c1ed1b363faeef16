#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gki/graph.hpp"

namespace gki {

struct SweepConfig {
    std::vector<int> k_values;
    int n_max = 0;
    bool connected_only = false;
    std::string graph6_path;  // empty: internal isomorph-free enumeration
    int jobs = 1;
    std::string checkpoint_path;  // empty: no checkpointing
};

struct SweepTally {
    int n = 0;
    int k = 0;
    long long graphs = 0;
    long long bound_violations = 0;
    long long equality = 0;
    long long structural = 0;
    long long mismatches = 0;  // equality and structural verdicts disagree
};

struct SweepFinding {
    std::string graph6;
    int n = 0;
    int k = 0;
    int alpha = 0;
    int omega_value = 0;
    std::string bound;
    std::string kind;  // bound_violation | equality_without_structure | structure_without_equality
};

/// k = 4 rows are theorem-backed: any violation lands in k4_anomalies and
/// means a bug. Rows for other k are conjecture observations; violations
/// and mismatches are reported as findings, never asserted.
struct ConjectureReport {
    SweepConfig config;
    std::vector<SweepTally> tallies;        // sorted by (n, k)
    std::vector<SweepFinding> findings;     // k != 4, sorted
    std::vector<SweepFinding> k4_anomalies; // expected empty
    long long graphs_processed = 0;
};

/// Generalized structural equality predicate: pairwise vertex-disjoint
/// cycles, cycle lengths 1 mod k, Gamma components of order 0 mod k that
/// partition into connected k-blocks.
bool structural_good_k(const Graph& g, int k);

ConjectureReport sweep(const SweepConfig& config);

nlohmann::ordered_json report_to_json(const ConjectureReport& r);

/// format: "json" or "table". Deterministic output either way.
std::string render_report(const ConjectureReport& r, const std::string& format);

}  // namespace gki
