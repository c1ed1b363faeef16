#include "gki/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gki/alpha.hpp"
#include "gki/cycles.hpp"
#include "gki/enumerate.hpp"
#include "gki/extremal.hpp"
#include "gki/graph_io.hpp"
#include "gki/rational.hpp"

namespace gki {

bool structural_good_k(const Graph& g, int k) {
    auto cycles = disjoint_cycles(g);
    if (!cycles) return false;
    VertexSet cycle_vertices;
    for (const auto& c : *cycles) {
        if (static_cast<int>(c.size()) % k != 1) return false;
        cycle_vertices.insert(cycle_vertices.end(), c.begin(), c.end());
    }
    Graph gamma = delete_vertices(g, cycle_vertices).graph;
    for (const auto& comp : components(gamma)) {
        if (static_cast<int>(comp.size()) % k != 0) return false;
        if (!is_in_R(induced_subgraph(gamma, comp).graph, k)) return false;
    }
    return true;
}

namespace {

struct PartialState {
    std::map<std::pair<int, int>, SweepTally> tallies;
    std::vector<SweepFinding> findings;
    std::vector<SweepFinding> k4_anomalies;
    long long graphs_processed = 0;

    void merge(const PartialState& other) {
        for (const auto& [key, t] : other.tallies) {
            SweepTally& mine = tallies[key];
            mine.n = t.n;
            mine.k = t.k;
            mine.graphs += t.graphs;
            mine.bound_violations += t.bound_violations;
            mine.equality += t.equality;
            mine.structural += t.structural;
            mine.mismatches += t.mismatches;
        }
        findings.insert(findings.end(), other.findings.begin(), other.findings.end());
        k4_anomalies.insert(k4_anomalies.end(), other.k4_anomalies.begin(),
                            other.k4_anomalies.end());
        graphs_processed += other.graphs_processed;
    }
};

void process_graph(const Graph& g, const std::vector<int>& k_values, PartialState& state) {
    int n = g.vertex_count();
    int w = omega(g);
    std::string g6 = graph6_encode(g);
    for (int k : k_values) {
        int alpha = alpha_value(g, k);
        Rational bound(static_cast<long long>(k - 1) * (n - w), k);
        bool holds = Rational(alpha) >= bound;
        bool equality = Rational(alpha) == bound;
        bool structural = structural_good_k(g, k);

        SweepTally& tally = state.tallies[{n, k}];
        tally.n = n;
        tally.k = k;
        ++tally.graphs;
        if (!holds) ++tally.bound_violations;
        if (equality) ++tally.equality;
        if (structural) ++tally.structural;
        if (equality != structural) ++tally.mismatches;

        if (!holds || equality != structural) {
            SweepFinding f;
            f.graph6 = g6;
            f.n = n;
            f.k = k;
            f.alpha = alpha;
            f.omega_value = w;
            f.bound = bound.str();
            f.kind = !holds              ? "bound_violation"
                     : equality          ? "equality_without_structure"
                                         : "structure_without_equality";
            if (k == 4)
                state.k4_anomalies.push_back(std::move(f));
            else
                state.findings.push_back(std::move(f));
        }
    }
    ++state.graphs_processed;
}

void process_batch(const std::vector<Graph>& graphs, const std::vector<int>& k_values, int jobs,
                   PartialState& state) {
    if (jobs <= 1 || graphs.size() < 2) {
        for (const Graph& g : graphs) process_graph(g, k_values, state);
        return;
    }
    int workers = std::min<int>(jobs, static_cast<int>(graphs.size()));
    std::vector<PartialState> partials(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            for (size_t i = t; i < graphs.size(); i += workers)
                process_graph(graphs[i], k_values, partials[t]);
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& p : partials) state.merge(p);
}

void sort_findings(std::vector<SweepFinding>& fs) {
    std::sort(fs.begin(), fs.end(), [](const SweepFinding& a, const SweepFinding& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.k != b.k) return a.k < b.k;
        if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
        return a.kind < b.kind;
    });
}

nlohmann::ordered_json config_identity(const SweepConfig& c) {
    nlohmann::ordered_json j;
    j["k_values"] = c.k_values;
    j["n_max"] = c.n_max;
    j["connected_only"] = c.connected_only;
    j["source"] = c.graph6_path.empty() ? std::string("internal") : c.graph6_path;
    return j;
}

nlohmann::ordered_json finding_to_json(const SweepFinding& f) {
    nlohmann::ordered_json j;
    j["graph6"] = f.graph6;
    j["n"] = f.n;
    j["k"] = f.k;
    j["alpha"] = f.alpha;
    j["omega"] = f.omega_value;
    j["bound"] = f.bound;
    j["kind"] = f.kind;
    return j;
}

SweepFinding finding_from_json(const nlohmann::json& j) {
    SweepFinding f;
    f.graph6 = j.at("graph6").get<std::string>();
    f.n = j.at("n").get<int>();
    f.k = j.at("k").get<int>();
    f.alpha = j.at("alpha").get<int>();
    f.omega_value = j.at("omega").get<int>();
    f.bound = j.at("bound").get<std::string>();
    f.kind = j.at("kind").get<std::string>();
    return f;
}

nlohmann::ordered_json state_to_json(const PartialState& state,
                                     const std::vector<int>& completed_units) {
    nlohmann::ordered_json j;
    j["completed_units"] = completed_units;
    auto tallies = nlohmann::ordered_json::array();
    for (const auto& [key, t] : state.tallies) {
        nlohmann::ordered_json tj;
        tj["n"] = t.n;
        tj["k"] = t.k;
        tj["graphs"] = t.graphs;
        tj["bound_violations"] = t.bound_violations;
        tj["equality"] = t.equality;
        tj["structural"] = t.structural;
        tj["mismatches"] = t.mismatches;
        tallies.push_back(std::move(tj));
    }
    j["tallies"] = std::move(tallies);
    auto findings = nlohmann::ordered_json::array();
    for (const auto& f : state.findings) findings.push_back(finding_to_json(f));
    j["findings"] = std::move(findings);
    auto anomalies = nlohmann::ordered_json::array();
    for (const auto& f : state.k4_anomalies) anomalies.push_back(finding_to_json(f));
    j["k4_anomalies"] = std::move(anomalies);
    j["graphs_processed"] = state.graphs_processed;
    return j;
}

void state_from_json(const nlohmann::json& j, PartialState& state,
                     std::vector<int>& completed_units) {
    completed_units = j.at("completed_units").get<std::vector<int>>();
    for (const auto& tj : j.at("tallies")) {
        SweepTally t;
        t.n = tj.at("n").get<int>();
        t.k = tj.at("k").get<int>();
        t.graphs = tj.at("graphs").get<long long>();
        t.bound_violations = tj.at("bound_violations").get<long long>();
        t.equality = tj.at("equality").get<long long>();
        t.structural = tj.at("structural").get<long long>();
        t.mismatches = tj.at("mismatches").get<long long>();
        state.tallies[{t.n, t.k}] = t;
    }
    for (const auto& fj : j.at("findings")) state.findings.push_back(finding_from_json(fj));
    for (const auto& fj : j.at("k4_anomalies"))
        state.k4_anomalies.push_back(finding_from_json(fj));
    state.graphs_processed = j.at("graphs_processed").get<long long>();
}

void write_checkpoint(const SweepConfig& config, const PartialState& state,
                      const std::vector<int>& completed_units) {
    if (config.checkpoint_path.empty()) return;
    nlohmann::ordered_json j;
    j["config"] = config_identity(config);
    j["state"] = state_to_json(state, completed_units);
    std::ofstream out(config.checkpoint_path);
    out << j.dump(2) << '\n';
}

bool load_checkpoint(const SweepConfig& config, PartialState& state,
                     std::vector<int>& completed_units) {
    if (config.checkpoint_path.empty()) return false;
    std::ifstream in(config.checkpoint_path);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
    if (j.value("config", nlohmann::json()) != nlohmann::json(config_identity(config)))
        return false;
    try {
        state_from_json(j.at("state"), state, completed_units);
    } catch (const nlohmann::json::exception&) {
        state = PartialState{};
        completed_units.clear();
        return false;
    }
    return true;
}

constexpr int kFileChunk = 2000;

}  // namespace

ConjectureReport sweep(const SweepConfig& config) {
    if (config.k_values.empty()) throw std::invalid_argument("k_values must be nonempty");
    for (int k : config.k_values)
        if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (config.graph6_path.empty() && (config.n_max < 1 || config.n_max > 10))
        throw std::invalid_argument("internal enumeration requires 1 <= n_max <= 10");

    PartialState state;
    std::vector<int> completed;
    load_checkpoint(config, state, completed);
    auto is_done = [&](int unit) {
        return std::find(completed.begin(), completed.end(), unit) != completed.end();
    };

    if (config.graph6_path.empty()) {
        for (int n = 1; n <= config.n_max; ++n) {
            if (is_done(n)) continue;
            std::vector<Graph> batch = enumerate_graphs(n, config.connected_only);
            process_batch(batch, config.k_values, config.jobs, state);
            completed.push_back(n);
            write_checkpoint(config, state, completed);
        }
    } else {
        std::ifstream in(config.graph6_path);
        if (!in) throw parse_error("cannot open " + config.graph6_path);
        std::vector<Graph> graphs = read_graph6_stream(in);
        if (config.connected_only) {
            std::erase_if(graphs, [](const Graph& g) { return !is_connected(g); });
        }
        for (size_t start = 0, unit = 0; start < graphs.size(); start += kFileChunk, ++unit) {
            if (is_done(static_cast<int>(unit))) continue;
            size_t stop = std::min(graphs.size(), start + kFileChunk);
            std::vector<Graph> batch(graphs.begin() + start, graphs.begin() + stop);
            process_batch(batch, config.k_values, config.jobs, state);
            completed.push_back(static_cast<int>(unit));
            write_checkpoint(config, state, completed);
        }
    }

    ConjectureReport report;
    report.config = config;
    for (const auto& [key, t] : state.tallies) report.tallies.push_back(t);
    std::sort(report.tallies.begin(), report.tallies.end(),
              [](const SweepTally& a, const SweepTally& b) {
                  return a.n != b.n ? a.n < b.n : a.k < b.k;
              });
    report.findings = state.findings;
    report.k4_anomalies = state.k4_anomalies;
    sort_findings(report.findings);
    sort_findings(report.k4_anomalies);
    report.graphs_processed = state.graphs_processed;
    return report;
}

nlohmann::ordered_json report_to_json(const ConjectureReport& r) {
    nlohmann::ordered_json j;
    j["config"] = config_identity(r.config);
    auto tallies = nlohmann::ordered_json::array();
    for (const auto& t : r.tallies) {
        nlohmann::ordered_json tj;
        tj["n"] = t.n;
        tj["k"] = t.k;
        tj["graphs"] = t.graphs;
        tj["bound_violations"] = t.bound_violations;
        tj["equality"] = t.equality;
        tj["structural"] = t.structural;
        tj["mismatches"] = t.mismatches;
        tallies.push_back(std::move(tj));
    }
    j["tallies"] = std::move(tallies);
    auto findings = nlohmann::ordered_json::array();
    for (const auto& f : r.findings) findings.push_back(finding_to_json(f));
    j["findings"] = std::move(findings);
    auto anomalies = nlohmann::ordered_json::array();
    for (const auto& f : r.k4_anomalies) anomalies.push_back(finding_to_json(f));
    j["k4_anomalies"] = std::move(anomalies);
    j["graphs_processed"] = r.graphs_processed;
    return j;
}

std::string render_report(const ConjectureReport& r, const std::string& format) {
    if (format == "json") return report_to_json(r).dump(2) + "\n";
    if (format != "table") throw std::invalid_argument("unknown report format: " + format);

    std::ostringstream out;
    out << "   n   k    graphs  bound_viol  equality  structural  mismatches\n";
    for (const auto& t : r.tallies) {
        char line[128];
        std::snprintf(line, sizeof(line), "%4d %3d %9lld %11lld %9lld %11lld %11lld\n", t.n,
                      t.k, t.graphs, t.bound_violations, t.equality, t.structural,
                      t.mismatches);
        out << line;
    }
    out << "graphs processed: " << r.graphs_processed << "\n";
    auto dump_findings = [&](const char* title, const std::vector<SweepFinding>& fs) {
        out << title << ": " << fs.size() << "\n";
        for (const auto& f : fs)
            out << "  " << f.graph6 << "  n=" << f.n << " k=" << f.k << " alpha=" << f.alpha
                << " omega=" << f.omega_value << " bound=" << f.bound << " [" << f.kind
                << "]\n";
    };
    dump_findings("findings (k != 4, reported not asserted)", r.findings);
    dump_findings("k=4 anomalies (theorem violations)", r.k4_anomalies);
    return out.str();
}

}  // namespace gki
