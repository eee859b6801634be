#pragma once

#include <string>
#include <vector>

#include "domenum/graph.hpp"
#include "domenum/hypergraph.hpp"

namespace domenum {

/// Edge-list text format: one "u v" pair per line; a line with a single
/// token declares an isolated vertex; '#' starts a comment; blank lines are
/// ignored.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);
std::string emit_edge_list(const Graph& g);

/// Hypergraph text format: one edge per line, whitespace-separated vertex
/// ids; '#' comments and blank lines ignored.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph read_hypergraph_file(const std::string& path);
std::string emit_hypergraph(const Hypergraph& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// One solution as space-separated sorted ids.
std::string format_solution(const std::vector<std::string>& ids);
/// JSON-lines record: {"solution":[...],"index":k,"work":w}
std::string format_solution_jsonl(const std::vector<std::string>& ids, std::uint64_t index,
                                  std::uint64_t work);

}  // namespace domenum
