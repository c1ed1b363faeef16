#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gki/graph.hpp"

namespace gki {

/// Malformed textual input (edge lists, graph6 lines). Distinct from
/// std::invalid_argument so callers can map it to an I/O exit status.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

/// Header-less graph6 (6-bit encoding of the upper triangle, columns
/// (0,1),(0,2),(1,2),(0,3),... per the nauty format).
Graph graph6_decode(const std::string& line);
std::string graph6_encode(const Graph& g);

/// Decodes one graph per line, skipping blank lines. A malformed line
/// raises parse_error naming the line number; in lenient mode the line is
/// skipped and the message collected instead.
std::vector<Graph> read_graph6_stream(std::istream& in, bool lenient = false,
                                      std::vector<std::string>* errors = nullptr);

std::string to_dot(const Graph& g);

enum class InputFormat { auto_detect, edge_list, graph6 };

/// Reads a single graph; auto-detection treats input whose first
/// significant line is whitespace-separated integers as an edge list.
Graph read_graph(std::istream& in, InputFormat format = InputFormat::auto_detect);

/// Reads one or more graphs (edge-list input carries exactly one).
std::vector<Graph> read_graphs(std::istream& in, InputFormat format = InputFormat::auto_detect);

}  // namespace gki
