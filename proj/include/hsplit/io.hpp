#ifndef HSPLIT_IO_HPP
#define HSPLIT_IO_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsplit/element_instance.hpp"
#include "hsplit/flow.hpp"
#include "hsplit/hypergraph.hpp"
#include "hsplit/reduction.hpp"

namespace hsplit::io {

enum class Format { Json, Text };

/// `.json` is JSON, anything else is the line-text format.
Format detect_format(const std::filesystem::path& path);

// JSON: {"vertices": [...], "hyperedges": [[...], ...]}. Hyperedge ids follow
// file order. Names used in hyperedges but not listed are appended in order
// of first use.
Hypergraph parse_hypergraph_json(std::string_view text);
std::string write_hypergraph_json(const Hypergraph& h);

// Text: one hyperedge per line, whitespace-separated names. A `#vertices:`
// line declares vertices (isolated ones included); other `#` lines are comments.
Hypergraph parse_hypergraph_text(std::string_view text);
std::string write_hypergraph_text(const Hypergraph& h);

Hypergraph parse_hypergraph(std::string_view text, Format format);
std::string write_hypergraph(const Hypergraph& h, Format format);

// {"nodes": [...], "terminals": [...], "edges": [[a, b], ...]}
ElementConnInstance parse_element_instance(std::string_view text);
std::string write_element_instance(const ElementConnInstance& inst);

/**
 * Operation log:
 *
 *   {"split_vertex": "s",
 *    "hyperedges": [{"id": 0, "vertices": ["a", "s"]}, ...],
 *    "ops": [{"op": "merge", "keep": 0, "absorb": 1}, {"op": "trim", "edge": 0}]}
 *
 * `hyperedges` is the header binding ids to hyperedges, listed in id order.
 * For a freshly parsed file, id i is the i-th hyperedge of the file.
 */
std::string write_op_log(const Hypergraph& h, VertexId s, const std::vector<SplitOffOp>& log);

struct OpLog {
  std::string split_vertex;
  std::vector<std::pair<HyperedgeId, std::vector<std::string>>> header;
  std::vector<SplitOffOp> ops;
};

OpLog parse_op_log(std::string_view text);

/// Throws ParseError unless the header describes exactly the hyperedges of `h`.
void check_op_log_header(const OpLog& log, const Hypergraph& h);

std::string write_trace(const ElementConnInstance& original, const ElementConnInstance& reduced,
                        const MinorTrace& trace);

/// Table as {"pairs": [{"u": ..., "v": ..., "value": ...}]}, names from `name_of`.
std::string write_table(const ConnTable& table,
                        const std::function<std::string(std::uint32_t)>& name_of);

/// Incidence graph in DOT: vertices as boxes, hyperedges as circles.
std::string write_incidence_dot(const Hypergraph& h);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace hsplit::io

#endif  // HSPLIT_IO_HPP
