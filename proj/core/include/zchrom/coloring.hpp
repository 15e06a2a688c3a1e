#pragma once

#include <string>
#include <vector>

#include "zchrom/graph.hpp"

namespace zchrom {

// Total vertex coloring with colors 1..k.  Well-formedness (every vertex
// colored, colors in range, no empty class) is a separate check so that
// file input can be loaded first and rejected with a precise message.
struct Coloring {
    int k = 0;
    std::vector<int> colors;  // indexed by vertex id

    int color(int v) const { return colors[v]; }

    // Throws std::invalid_argument on: size mismatch with g (partial
    // coloring), a color outside 1..k, an empty color class, or k < 1.
    void check_well_formed(const Graph& g) const;

    // Color classes as sorted id lists; class j is at index j-1.
    std::vector<std::vector<int>> classes() const;

    bool operator==(const Coloring&) const = default;
};

// File format: "k=<int>" header line, then one "<vertex> <color>" line per
// vertex.  Emission orders vertices ascending; parsing accepts any order
// but rejects duplicates and non-numeric junk.
std::string emit_coloring(const Coloring& c);
Coloring parse_coloring(const std::string& text);

// Edge coloring, indexed by position in Graph::edges().
struct EdgeColoring {
    std::vector<int> colors;

    bool operator==(const EdgeColoring&) const = default;
};

// File format: one "<u> <v> <color>" line per edge of g.
std::string emit_edge_coloring(const Graph& g, const EdgeColoring& c);
EdgeColoring parse_edge_coloring(const Graph& g, const std::string& text);

}  // namespace zchrom
