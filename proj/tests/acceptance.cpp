// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line each. Exit status is the number of failed criteria.
//
// Usage: acceptance [--cli <path-to-gki-binary>]

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "gki/alpha.hpp"
#include "gki/canonical.hpp"
#include "gki/characterization.hpp"
#include "gki/cycles.hpp"
#include "gki/enumerate.hpp"
#include "gki/extremal.hpp"
#include "gki/graph_io.hpp"
#include "oracles.hpp"

using namespace gki;

namespace {

std::string g_cli_path = "gki";

struct Outcome {
    bool pass = true;
    std::ostringstream diag;
};

#define FAIL_UNLESS(cond, msg)                  \
    do {                                        \
        if (!(cond)) {                          \
            out.pass = false;                   \
            out.diag << "    " << msg << "\n";  \
        }                                       \
    } while (0)

// 1. Path/cycle closed forms: alpha_4(P_n) = ceil(3n/4) for 1..20 and
//    alpha_4(C_n) = floor(3n/4) for 3..20.
Outcome criterion1() {
    Outcome out;
    for (int n = 1; n <= 20; ++n) {
        int a = alpha_value(path_graph(n), 4);
        FAIL_UNLESS(a == (3 * n + 3) / 4, "path n=" << n << ": alpha=" << a
                                                    << ", ceil(3n/4)=" << (3 * n + 3) / 4);
    }
    for (int n = 3; n <= 20; ++n) {
        int a = alpha_value(cycle_graph(n), 4);
        FAIL_UNLESS(a == 3 * n / 4,
                    "cycle n=" << n << ": alpha=" << a << ", floor(3n/4)=" << 3 * n / 4
                               << (n == 3 ? " (the formula assumes n >= 4: a 3-vertex graph "
                                            "cannot contain a 4-vertex tree, so the whole "
                                            "triangle is feasible and alpha_4(C_3)=3)"
                                          : ""));
    }
    return out;
}

// 2. The 27-vertex worked example: alpha 18, omega 3, structurally good,
//    decomposition 6 + 3 + 3 + 6.
Outcome criterion2() {
    Outcome out;
    Graph g = fixtures::cactus27();
    FAIL_UNLESS(omega(g) == 3, "omega=" << omega(g));
    AlphaResult res = alpha_exact(g, 4);
    FAIL_UNLESS(res.value == 18, "alpha=" << res.value);
    FAIL_UNLESS(static_cast<int>(res.witness.size()) == 18, "witness size");
    FAIL_UNLESS(is_gen_k_independent(g, res.witness, 4), "witness infeasible");
    auto rep = check_good(g);
    FAIL_UNLESS(rep.structural.structural_good, "structural goodness false");
    FAIL_UNLESS(rep.direct_good, "direct goodness false");
    auto dec = decompose_alpha(g);
    FAIL_UNLESS(dec.gamma_alpha == 6, "gamma alpha=" << dec.gamma_alpha);
    std::multiset<std::string> terms;
    for (const auto& t : dec.cycle_terms) terms.insert(t.str());
    FAIL_UNLESS((terms == std::multiset<std::string>{"3", "3", "6"}), "cycle terms wrong");
    FAIL_UNLESS(dec.total == Rational(18), "total=" << dec.total.str());
    return out;
}

// 3. Tree sweep to n = 12: bound with exact rationals, equality exactly on
//    recognized R members at n in {4, 8, 12}.
Outcome criterion3() {
    Outcome out;
    long long mismatches = 0, checked = 0;
    for (int n = 1; n <= 12; ++n) {
        for (const Graph& t : all_trees(n)) {
            ++checked;
            int alpha = alpha_tree_value(t, 4);
            FAIL_UNLESS(4 * alpha >= 3 * n, "bound violated on an n=" << n << " tree");
            bool equality = 4 * alpha == 3 * n;
            bool member = (n % 4 == 0) && is_in_R(t, 4).has_value();
            if (equality != member) ++mismatches;
        }
    }
    FAIL_UNLESS(mismatches == 0, mismatches << " equality/membership mismatches");
    FAIL_UNLESS(checked == 987, "tree corpus size " << checked);
    return out;
}

// 4. Exhaustive verification over all connected graphs with n <= 8:
//    bound soundness and direct == structural equivalence.
Outcome criterion4() {
    Outcome out;
    long long violations = 0, mismatches = 0, graphs = 0;
    for (int n = 1; n <= 8; ++n)
        for_each_graph(n, true, [&](const Graph& g) {
            ++graphs;
            int alpha = alpha_value(g, 4);
            int w = omega(g);
            if (4 * alpha < 3 * (n - w)) ++violations;
            bool direct = 4 * alpha == 3 * (n - w);
            if (direct != check_good_structural(g).structural_good) ++mismatches;
        });
    FAIL_UNLESS(violations == 0, violations << " bound violations");
    FAIL_UNLESS(mismatches == 0, mismatches << " equivalence mismatches");
    FAIL_UNLESS(graphs == 12113, "connected corpus size " << graphs);
    return out;
}

// 5. The good graphs on 4 vertices are exactly P4 and S4.
Outcome criterion5() {
    Outcome out;
    auto goods = generate_good_graphs(4);
    FAIL_UNLESS(goods.size() == 2, "generator found " << goods.size() << " graphs");
    bool has_p4 = false, has_s4 = false;
    for (const Graph& g : goods) {
        if (are_isomorphic(g, path_graph(4))) has_p4 = true;
        if (are_isomorphic(g, star_graph(4))) has_s4 = true;
    }
    FAIL_UNLESS(has_p4 && has_s4, "generator missed P4 or S4");

    std::vector<std::pair<std::string, Graph>> six = {
        {"P4", path_graph(4)},        {"S4", star_graph(4)},
        {"C3+", fixtures::c3_plus()}, {"C4", cycle_graph(4)},
        {"K4-", fixtures::k4_minus()}, {"K4", complete_graph(4)}};
    for (const auto& [name, g] : six) {
        auto rep = check_good(g);
        bool expected = name == "P4" || name == "S4";
        FAIL_UNLESS(rep.direct_good == expected, name << ": direct verdict wrong");
        FAIL_UNLESS(rep.structural.structural_good == expected,
                    name << ": structural verdict wrong");
    }
    return out;
}

// 6. Cycles are good exactly at lengths 5, 9, 13, 17 within 3..17.
Outcome criterion6() {
    Outcome out;
    for (int n = 3; n <= 17; ++n) {
        auto rep = check_good(cycle_graph(n));
        bool expected = n == 5 || n == 9 || n == 13 || n == 17;
        FAIL_UNLESS(rep.direct_good == expected && rep.structural.structural_good == expected,
                    "C" << n << ": good=" << rep.direct_good);
        FAIL_UNLESS(!rep.theorem_violation, "C" << n << ": verdicts disagree");
    }
    return out;
}

// 7. Definition equivalence: component-size feasibility equals literal
//    k-subtree containment on every subset of every graph with n <= 7.
Outcome criterion7() {
    Outcome out;
    long long disagreements = 0, checked = 0;
    for (int n = 1; n <= 7; ++n)
        for_each_graph(n, false, [&](const Graph& g) {
            for (uint32_t mask = 0; mask < (1u << n); ++mask) {
                VertexSet s;
                for (uint32_t m = mask; m; m &= m - 1) s.push_back(std::countr_zero(m));
                for (int k = 2; k <= 5; ++k) {
                    ++checked;
                    if (is_gen_k_independent(g, s, k) != !oracles::contains_k_subtree(g, s, k))
                        ++disagreements;
                }
            }
        });
    FAIL_UNLESS(disagreements == 0, disagreements << " disagreements over " << checked);
    return out;
}

// 8. Solver cross-validation: exact vs brute force on all graphs n <= 8
//    for k in 2..5 (value and witness), tree DP vs brute force on all
//    trees n <= 14 for k = 4.
Outcome criterion8() {
    Outcome out;
    long long disagreements = 0;
    for (int n = 1; n <= 8; ++n)
        for_each_graph(n, false, [&](const Graph& g) {
            for (int k = 2; k <= 5; ++k) {
                auto brute = alpha_bruteforce(g, k);
                auto exact = alpha_exact(g, k);
                if (brute.value != exact.value || brute.witness != exact.witness)
                    ++disagreements;
            }
        });
    FAIL_UNLESS(disagreements == 0, disagreements << " exact/brute disagreements");

    long long tree_disagreements = 0;
    for (int n = 1; n <= 14; ++n)
        for (const Graph& t : all_trees(n)) {
            auto brute = alpha_bruteforce(t, 4);
            auto dp = alpha_tree(t, 4);
            if (brute.value != dp.value || brute.witness != dp.witness)
                ++tree_disagreements;
        }
    FAIL_UNLESS(tree_disagreements == 0, tree_disagreements << " tree/brute disagreements");
    return out;
}

// 9. Monotonicity under vertex and edge deletion on all graphs n <= 8.
Outcome criterion9() {
    Outcome out;
    long long bad = 0;
    for (int n = 1; n <= 8; ++n)
        for_each_graph(n, false, [&](const Graph& g) {
            int base = alpha_bruteforce(g, 4).value;
            for (int v = 0; v < n; ++v) {
                int dropped = alpha_bruteforce(delete_vertices(g, {v}).graph, 4).value;
                if (dropped > base || dropped < base - 1) ++bad;
            }
            for (auto [u, v] : g.edges())
                if (alpha_bruteforce(delete_edge(g, u, v), 4).value < base) ++bad;
        });
    FAIL_UNLESS(bad == 0, bad << " monotonicity violations");
    return out;
}

// 10. The partition recognizer accepts exactly the generated R members
//     for i <= 4 (orders 4, 8, 12, 16).
Outcome criterion10() {
    Outcome out;
    for (int i = 1; i <= 4; ++i) {
        int n = 4 * i;
        std::set<std::string> family;
        for (const Graph& t : generate_R(i, 4, 16)) family.insert(ahu_code(t));
        long long mismatches = 0, members = 0;
        for (const Graph& t : all_trees(n)) {
            bool generated = family.count(ahu_code(t)) > 0;
            auto cert = is_in_R(t, 4);
            if (generated != cert.has_value()) ++mismatches;
            if (cert) {
                ++members;
                if (!verify_r_certificate(t, 4, *cert)) ++mismatches;
            }
        }
        FAIL_UNLESS(mismatches == 0, "i=" << i << ": " << mismatches << " mismatches");
        FAIL_UNLESS(members == static_cast<long long>(family.size()),
                    "i=" << i << ": member count " << members << " vs " << family.size());
    }
    return out;
}

int run_command(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 11. The sweep CLI over connected graphs up to n = 7: clean k = 4 rows,
//     byte-identical reruns, equality tallies matching the generator.
Outcome criterion11() {
    Outcome out;
    std::string out1 = "acceptance_sweep_1.json";
    std::string out2 = "acceptance_sweep_2.json";
    std::string base = "\"" + g_cli_path + "\" sweep --k 2,3,4,5 --n-max 7 --connected -o ";
    int rc1 = run_command(base + out1);
    FAIL_UNLESS(rc1 == 0, "first sweep run exited " << rc1);
    int rc2 = run_command(base + out2);
    FAIL_UNLESS(rc2 == 0, "second sweep run exited " << rc2);
    std::string report1 = slurp(out1), report2 = slurp(out2);
    FAIL_UNLESS(!report1.empty(), "empty report");
    FAIL_UNLESS(report1 == report2, "reruns differ byte-wise");
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    if (!out.pass) return out;

    auto j = nlohmann::json::parse(report1);
    FAIL_UNLESS(j.at("k4_anomalies").empty(),
                j.at("k4_anomalies").size() << " k=4 anomalies");
    std::map<int, long long> equality;
    for (const auto& t : j.at("tallies"))
        if (t.at("k").get<int>() == 4) equality[t.at("n").get<int>()] = t.at("equality").get<long long>();
    for (int n = 1; n <= 7; ++n) {
        long long expected = static_cast<long long>(generate_good_graphs(n).size());
        FAIL_UNLESS(equality[n] == expected,
                    "n=" << n << ": equality tally " << equality[n] << " vs " << expected);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc - 1; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Entry> criteria = {
        {1, "path and cycle alpha closed forms", criterion1},
        {2, "27-vertex cactus worked example", criterion2},
        {3, "tree bound and equality family, n <= 12", criterion3},
        {4, "exhaustive bound + equivalence, connected n <= 8", criterion4},
        {5, "good graphs on four vertices", criterion5},
        {6, "goodness of cycles up to length 17", criterion6},
        {7, "definition equivalence against literal subtree oracle, n <= 7", criterion7},
        {8, "solver cross-validation (graphs n <= 8, trees n <= 14)", criterion8},
        {9, "deletion monotonicity, n <= 8", criterion9},
        {10, "R recognizer equals R generator, i <= 4", criterion10},
        {11, "sweep CLI regression, connected n <= 7", criterion11},
    };

    int failed = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        char line[160];
        std::snprintf(line, sizeof(line), "[%s] criterion %2d (%7.2fs): %s",
                      out.pass ? "PASS" : "FAIL", c.id, secs, c.name);
        std::cout << line << "\n";
        if (!out.pass) {
            std::cout << out.diag.str();
            ++failed;
        }
        std::cout.flush();
    }
    if (failed > 0) std::cout << failed << " criterion(s) failed\n";
    return failed;
}
