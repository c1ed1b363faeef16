#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gki/alpha.hpp"
#include "gki/characterization.hpp"
#include "gki/cycles.hpp"
#include "gki/extremal.hpp"
#include "gki/graph_io.hpp"
#include "gki/sweep.hpp"
#include "gki/vertex_classes.hpp"

namespace {

using gki::Graph;
using nlohmann::ordered_json;

struct IoOptions {
    std::string input = "-";
    std::string format = "auto";
    std::string output = "-";
};

void add_io(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("input", io.input, "input file, or - for stdin")->capture_default_str();
    cmd->add_option("--format", io.format, "input format: auto, edge-list, graph6")
        ->check(CLI::IsMember({"auto", "edge-list", "graph6"}))
        ->capture_default_str();
    cmd->add_option("-o,--out", io.output, "output file, or - for stdout")
        ->capture_default_str();
}

gki::InputFormat parse_format(const std::string& name) {
    if (name == "edge-list") return gki::InputFormat::edge_list;
    if (name == "graph6") return gki::InputFormat::graph6;
    return gki::InputFormat::auto_detect;
}

std::vector<Graph> load_graphs(const IoOptions& io) {
    if (io.input == "-") return gki::read_graphs(std::cin, parse_format(io.format));
    std::ifstream in(io.input);
    if (!in) throw gki::parse_error("cannot open " + io.input);
    return gki::read_graphs(in, parse_format(io.format));
}

Graph load_graph(const IoOptions& io) {
    auto graphs = load_graphs(io);
    if (graphs.empty()) throw gki::parse_error("no graph in input");
    return graphs.front();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw gki::parse_error("cannot open " + path + " for writing");
    out << text;
}

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

ordered_json goodness_to_json(const gki::GoodnessReport& rep) {
    ordered_json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["omega"] = rep.omega_value;
    j["alpha"] = rep.alpha_value;
    j["bound"] = rep.bound_value.str();
    j["direct_good"] = rep.direct_good;
    j["cond_disjoint_cycles"] = rep.structural.cond_disjoint;
    j["cond_cycle_lengths"] = rep.structural.cond_cycle_lengths;
    j["cond_gamma_components"] = rep.structural.cond_gamma;
    j["structural_good"] = rep.structural.structural_good;
    j["theorem_violation"] = rep.theorem_violation;
    auto comps = ordered_json::array();
    for (const auto& cv : rep.component_verdicts) {
        ordered_json cj;
        cj["vertices"] = cv.vertices;
        cj["alpha"] = cv.alpha;
        cj["bound"] = cv.bound.str();
        cj["good"] = cv.good;
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    return j;
}

int default_jobs() {
    if (const char* env = std::getenv("GKI_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for generalized k-independence numbers"};
    app.require_subcommand(1);

    // alpha
    IoOptions alpha_io;
    int alpha_k = 0;
    auto* cmd_alpha = app.add_subcommand("alpha", "exact alpha_k with a lexicographically "
                                                  "minimal witness");
    cmd_alpha->add_option("--k", alpha_k, "order parameter (k >= 2)")->required();
    add_io(cmd_alpha, alpha_io);

    // omega
    IoOptions omega_io;
    auto* cmd_omega = app.add_subcommand("omega", "cycle space dimension |E|-|V|+c");
    add_io(cmd_omega, omega_io);

    // classes
    IoOptions classes_io;
    auto* cmd_classes =
        app.add_subcommand("classes", "pendant and quasi-pendant vertex classes");
    add_io(cmd_classes, classes_io);

    // shrink
    IoOptions shrink_io;
    auto* cmd_shrink = app.add_subcommand(
        "shrink", "contract each vertex-disjoint cycle; also reports the cycle-free rest");
    add_io(cmd_shrink, shrink_io);

    // check-good
    IoOptions good_io;
    bool explain = false;
    auto* cmd_good = app.add_subcommand(
        "check-good", "equality verdict for the 3/4(n - omega) bound, direct and structural");
    cmd_good->add_flag("--explain", explain, "include cycles, Gamma components and R blocks");
    add_io(cmd_good, good_io);

    // gen-r
    int gen_i = 0, gen_k = 4;
    std::string gen_r_out = "-";
    auto* cmd_genr = app.add_subcommand("gen-r", "generate the extremal tree family R_i");
    cmd_genr->add_option("--i", gen_i, "family index (order k*i)")->required();
    cmd_genr->add_option("--k", gen_k, "block size")->capture_default_str();
    cmd_genr->add_option("-o,--out", gen_r_out, "output file, or - for stdout")
        ->capture_default_str();

    // is-r
    IoOptions isr_io;
    int isr_k = 4;
    auto* cmd_isr = app.add_subcommand("is-r", "membership in the extremal tree family");
    cmd_isr->add_option("--k", isr_k, "block size")->capture_default_str();
    add_io(cmd_isr, isr_io);

    // gen-good
    int good_n = 0;
    std::string gen_good_out = "-";
    auto* cmd_gengood =
        app.add_subcommand("gen-good", "generate all connected graphs attaining the bound");
    cmd_gengood->add_option("--n", good_n, "order")->required();
    cmd_gengood->add_option("-o,--out", gen_good_out, "output file, or - for stdout")
        ->capture_default_str();

    // sweep
    gki::SweepConfig sweep_cfg;
    sweep_cfg.jobs = default_jobs();
    std::string sweep_out = "-";
    std::string sweep_format = "json";
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "bound and equality-structure sweep over graph corpora for several k");
    cmd_sweep->add_option("--k", sweep_cfg.k_values, "k values, e.g. 2,3,4,5")
        ->required()
        ->delimiter(',');
    cmd_sweep->add_option("--n-max", sweep_cfg.n_max,
                          "enumerate all graphs internally up to this order");
    cmd_sweep->add_option("--graph6", sweep_cfg.graph6_path, "read corpus from a graph6 file");
    cmd_sweep->add_flag("--connected", sweep_cfg.connected_only, "restrict to connected graphs");
    cmd_sweep->add_option("--checkpoint", sweep_cfg.checkpoint_path,
                          "JSON checkpoint file (resumable)");
    cmd_sweep->add_option("--jobs", sweep_cfg.jobs, "worker threads (env GKI_JOBS)")
        ->capture_default_str();
    cmd_sweep->add_option("-o,--out", sweep_out, "report file, or - for stdout")
        ->capture_default_str();
    cmd_sweep->add_option("--report-format", sweep_format, "json | table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    // convert
    IoOptions convert_io;
    std::string convert_to = "graph6";
    auto* cmd_convert = app.add_subcommand("convert", "convert between graph formats");
    cmd_convert->add_option("--to", convert_to, "edge-list | graph6 | dot")
        ->check(CLI::IsMember({"edge-list", "graph6", "dot"}))
        ->required();
    add_io(cmd_convert, convert_io);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    try {
        if (cmd_alpha->parsed()) {
            Graph g = load_graph(alpha_io);
            gki::AlphaResult res = gki::alpha_exact(g, alpha_k);
            ordered_json j;
            j["alpha"] = res.value;
            j["witness"] = res.witness;
            write_output(alpha_io.output, j.dump() + "\n");
        } else if (cmd_omega->parsed()) {
            Graph g = load_graph(omega_io);
            ordered_json j;
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["components"] = gki::component_count(g);
            j["omega"] = gki::omega(g);
            write_output(omega_io.output, j.dump() + "\n");
        } else if (cmd_classes->parsed()) {
            Graph g = load_graph(classes_io);
            gki::PendantClasses cls = gki::pendant_and_quasi_classes(g);
            ordered_json j;
            j["pendant"] = cls.pendant;
            j["quasi_pendant"] = cls.quasi_pendant;
            j["q2"] = cls.q2;
            j["q3"] = cls.q3;
            j["q2_prime"] = cls.q2_prime;
            write_output(classes_io.output, j.dump() + "\n");
        } else if (cmd_shrink->parsed()) {
            Graph g = load_graph(shrink_io);
            gki::ShrinkResult res = gki::shrink(g);
            ordered_json j;
            j["t_graph"] = graph_to_json(res.t_graph);
            j["gamma_graph"] = graph_to_json(res.gamma_graph);
            j["cycles"] = res.cycles;
            j["vertex_map"] = res.vertex_map;
            j["gamma_vertex_map"] = res.gamma_old_to_new;
            write_output(shrink_io.output, j.dump() + "\n");
        } else if (cmd_good->parsed()) {
            Graph g = load_graph(good_io);
            gki::GoodnessReport rep = gki::check_good(g);
            ordered_json j = goodness_to_json(rep);
            if (explain && rep.structural.cond_disjoint) {
                gki::ShrinkResult shr = gki::shrink(g);
                j["cycles"] = shr.cycles;
                auto gamma_comps = ordered_json::array();
                std::vector<int> gamma_to_orig(shr.gamma_graph.vertex_count());
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (shr.gamma_old_to_new[v] != -1)
                        gamma_to_orig[shr.gamma_old_to_new[v]] = v;
                for (const auto& comp : gki::components(shr.gamma_graph)) {
                    ordered_json cj;
                    gki::VertexSet orig;
                    for (int v : comp) orig.push_back(gamma_to_orig[v]);
                    cj["vertices"] = orig;
                    cj["order"] = orig.size();
                    Graph sub = gki::induced_subgraph(shr.gamma_graph, comp).graph;
                    auto cert = gki::is_in_R(sub, 4);
                    cj["in_r"] = cert.has_value();
                    if (cert) {
                        auto blocks = ordered_json::array();
                        for (const auto& blk : cert->blocks) {
                            gki::VertexSet mapped;
                            // block labels -> gamma labels -> input labels
                            for (int v : blk) mapped.push_back(gamma_to_orig[comp[v]]);
                            blocks.push_back(mapped);
                        }
                        cj["blocks"] = std::move(blocks);
                        cj["attach_order"] = cert->attach_order;
                    }
                    gamma_comps.push_back(std::move(cj));
                }
                j["gamma_components"] = std::move(gamma_comps);
            }
            write_output(good_io.output, j.dump() + "\n");
        } else if (cmd_genr->parsed()) {
            auto family = gki::generate_R(gen_i, gen_k);
            std::ostringstream out;
            for (const Graph& t : family) out << gki::graph6_encode(t) << "\n";
            write_output(gen_r_out, out.str());
            ordered_json meta;
            meta["i"] = gen_i;
            meta["k"] = gen_k;
            meta["count"] = family.size();
            std::cerr << meta.dump() << "\n";
        } else if (cmd_isr->parsed()) {
            Graph g = load_graph(isr_io);
            auto cert = gki::is_in_R(g, isr_k);
            ordered_json j;
            j["member"] = cert.has_value();
            if (cert) {
                j["blocks"] = cert->blocks;
                j["attach_order"] = cert->attach_order;
            }
            write_output(isr_io.output, j.dump() + "\n");
        } else if (cmd_gengood->parsed()) {
            auto goods = gki::generate_good_graphs(good_n);
            std::ostringstream out;
            for (const Graph& g : goods) out << gki::graph6_encode(g) << "\n";
            write_output(gen_good_out, out.str());
            ordered_json meta;
            meta["n"] = good_n;
            meta["count"] = goods.size();
            std::cerr << meta.dump() << "\n";
        } else if (cmd_sweep->parsed()) {
            gki::ConjectureReport report = gki::sweep(sweep_cfg);
            write_output(sweep_out, gki::render_report(report, sweep_format));
            if (!report.k4_anomalies.empty()) {
                std::cerr << "error: " << report.k4_anomalies.size()
                          << " k=4 anomalies found (theorem violation; see report)\n";
                return 1;
            }
        } else if (cmd_convert->parsed()) {
            std::vector<Graph> graphs = load_graphs(convert_io);
            std::ostringstream out;
            for (const Graph& g : graphs) {
                if (convert_to == "graph6")
                    out << gki::graph6_encode(g) << "\n";
                else if (convert_to == "edge-list")
                    out << gki::format_edge_list(g);
                else
                    out << gki::to_dot(g);
            }
            write_output(convert_io.output, out.str());
        }
    } catch (const gki::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
