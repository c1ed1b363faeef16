#include "gki/graph_io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace gki {

namespace {

long long parse_int_token(std::istringstream& in, const std::string& what) {
    long long x;
    if (!(in >> x)) throw parse_error("expected integer for " + what);
    return x;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = parse_int_token(in, "vertex count");
    long long m = parse_int_token(in, "edge count");
    if (n < 0 || m < 0) throw parse_error("negative count in edge-list header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = parse_int_token(in, "edge " + std::to_string(i));
        long long v = parse_int_token(in, "edge " + std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw parse_error("trailing input after " + std::to_string(m) + " edges");
    try {
        return Graph::build(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph6_decode(const std::string& line) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw parse_error("truncated graph6 line");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126)
            throw parse_error("invalid graph6 character at position " + std::to_string(pos));
        return c - 63;
    };

    long long n;
    if (line.empty()) throw parse_error("empty graph6 line");
    if (line[0] != '~') {
        n = next();
    } else {
        ++pos;
        if (pos < line.size() && line[pos] == '~')
            throw parse_error("graph6 order beyond 258047 not supported");
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }

    long long bits_needed = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int buffer = 0, buffered = 0;
    int row = 0, col = 1;
    for (long long i = 0; i < bits_needed; ++i) {
        if (buffered == 0) {
            buffer = next();
            buffered = 6;
        }
        --buffered;
        if ((buffer >> buffered) & 1) edges.emplace_back(row, col);
        if (++row == col) {
            row = 0;
            ++col;
        }
    }
    if ((buffer & ((1 << buffered) - 1)) != 0) throw parse_error("nonzero graph6 padding bits");
    if (pos != line.size()) throw parse_error("trailing characters on graph6 line");
    try {
        return Graph::build(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

std::string graph6_encode(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6 encoding");
    }
    int buffer = 0, buffered = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            buffer = (buffer << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++buffered == 6) {
                out.push_back(static_cast<char>(buffer + 63));
                buffer = 0;
                buffered = 0;
            }
        }
    }
    if (buffered > 0) out.push_back(static_cast<char>((buffer << (6 - buffered)) + 63));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in, bool lenient,
                                      std::vector<std::string>* errors) {
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(graph6_decode(line));
        } catch (const parse_error& e) {
            std::string msg = "line " + std::to_string(lineno) + ": " + e.what();
            if (!lenient) throw parse_error(msg);
            if (errors) errors->push_back(msg);
        }
    }
    return graphs;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() < 2) return false;
        for (const auto& t : toks)
            for (char c : t)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    }
    return false;
}

}  // namespace

std::vector<Graph> read_graphs(std::istream& in, InputFormat format) {
    std::ostringstream slurp;
    slurp << in.rdbuf();
    std::string text = slurp.str();
    if (format == InputFormat::auto_detect)
        format = looks_like_edge_list(text) ? InputFormat::edge_list : InputFormat::graph6;
    if (format == InputFormat::edge_list) return {parse_edge_list(text)};
    std::istringstream again(text);
    return read_graph6_stream(again);
}

Graph read_graph(std::istream& in, InputFormat format) {
    auto graphs = read_graphs(in, format);
    if (graphs.empty()) throw parse_error("no graph in input");
    return graphs.front();
}

}  // namespace gki
