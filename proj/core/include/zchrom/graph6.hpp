#pragma once

#include <stdexcept>
#include <string>

#include "zchrom/graph.hpp"
#include "zchrom/roles.hpp"

namespace zchrom {

// Raised on malformed serialized input (graph6, coloring and role files).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6 codec.  Short form: one header byte 63+n for n <= 62.  Long form:
// '~' followed by three bytes carrying n as 18 bits, 6 per byte, each
// offset by 63 (supported up to n = 258047; larger graphs are rejected).
// The body packs the upper triangle of the adjacency matrix column by
// column, 6 bits per byte, most significant bit first, offset by 63.
std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

// Graphviz export; role labels are attached when a role map is supplied.
std::string to_dot(const Graph& g, const RoleMap* roles = nullptr);

}  // namespace zchrom
