#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zchrom/coloring.hpp"
#include "zchrom/graph.hpp"

namespace zchrom {

// First property violation found, reported with enough context to locate
// it: a monochromatic edge (vertex/other), a vertex missing some lower
// color in its neighborhood (vertex/color), a class without a dominating
// vertex (color), or the absence of a witness tuple.
struct Violation {
    std::string kind;
    int vertex = -1;
    int other = -1;
    int color = -1;

    std::string to_string() const;
};

struct CheckResult {
    bool ok = false;
    std::optional<Violation> violation;
};

// Witness for a z-coloring with k classes: witness[j-1] lies in class j,
// every witness vertex has a neighbor in every other class, and the class-k
// witness (the nice vertex) is adjacent to all the others.
struct ZCertificate {
    std::vector<int> witness;
    int nice_vertex = -1;
};

struct ZCheckResult {
    bool ok = false;
    std::optional<ZCertificate> certificate;
    std::optional<Violation> violation;
};

struct BCheckResult {
    bool ok = false;
    std::optional<Violation> violation;
};

// Properness: adjacent vertices get distinct colors.  Throws
// std::invalid_argument when the coloring is not well-formed for g.
CheckResult is_proper(const Graph& g, const Coloring& c);

// Greedy-style condition: every vertex of color j has, for each i < j, at
// least one neighbor of color i.  Throws on an improper coloring.
CheckResult is_grundy(const Graph& g, const Coloring& c);

// Vertices of class j adjacent to at least one vertex of every other
// class, ascending id.  Throws on an improper coloring or j outside 1..k.
std::vector<int> dominating_vertices(const Graph& g, const Coloring& c, int j);

// Every color class contains a dominating vertex.
BCheckResult is_b_coloring(const Graph& g, const Coloring& c);

// The full z-coloring check: the coloring must satisfy the greedy
// condition, and some witness tuple as in ZCertificate must exist.
// Candidate nice vertices are scanned in ascending id; for each color the
// smallest-id dominating neighbor is chosen, so certificates are
// deterministic.  A single validation runs in O(|V|+|E|) per color.
ZCheckResult is_z_coloring(const Graph& g, const Coloring& c);

// Re-derives every certificate condition from scratch (no shared state
// with is_z_coloring); used to cross-check emitted certificates.
bool certificate_valid(const Graph& g, const Coloring& c, const ZCertificate& cert);

// All four checks in one pass.  Never throws on a well-formed coloring:
// an improper coloring yields all-false flags plus the violation.
struct ValidationReport {
    bool proper = false;
    bool grundy = false;
    bool b = false;
    bool z = false;
    std::optional<ZCertificate> certificate;
    std::optional<Violation> violation;
};

ValidationReport validate_all(const Graph& g, const Coloring& c);

// JSON-style rendering of a certificate for CLI output.
std::string emit_certificate(const Coloring& c, const ZCertificate& cert);

}  // namespace zchrom
