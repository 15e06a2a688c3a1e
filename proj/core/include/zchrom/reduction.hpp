#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "zchrom/coloring.hpp"
#include "zchrom/graph.hpp"
#include "zchrom/roles.hpp"

namespace zchrom {

// Thrown when an input that passed its own validity checks drives a
// transformation outside its guaranteed range.  For the instances built
// here that can only mean the construction's promise was broken, so tests
// treat a contract_error as a hard failure, not as bad input.
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// Eight-vertex pendant tree hung off the attachment vertex f (id 0).
// Shaped so that f's three tree neighbors can take colors 1, 2, 3 with
// the rest of the tree staying consistent, whatever color f itself needs.
struct FGadget {
    Graph graph;
    int f;
};

FGadget synth_f_gadget();

// Block gadget T_i used once per source vertex: a complete bipartite graph
// on sides of size n+2 minus a perfect matching, with the pendant tree
// attached to the n-1 matched-side vertices u_j^i.  The v_side vertices
// are the external attachment points.  v_side/u_side are ordered by
// ascending j with j = i skipped; x,y,q complete the attachment side and
// a,b,c the matched side.
struct TGadget {
    Graph graph;
    RoleMap roles;
    std::vector<int> v_side;
    std::vector<int> u_side;
    int x = -1, y = -1, q = -1;
    int a = -1, b = -1, c = -1;
    int f = -1;
    std::vector<int> f_tree;  // f's three tree neighbors, then the deeper four
};

// Requires n >= 3 and 1 <= i <= n.
TGadget build_t_gadget(int n, int i);

struct TBlockIds {
    std::vector<int> v_side;
    std::vector<int> u_side;
    int x = -1, y = -1, q = -1;
    int a = -1, b = -1, c = -1;
    int f = -1;
    std::vector<int> f_tree;
};

// Decision instance built from a 3-regular source graph G with n vertices
// and m edges.  Layout, in id order: source vertices v_i (0..n-1), edge
// vertices e_j (n..n+m-1, in source edge order), five fresh vertices per
// small block (the edge vertex doubles as a block corner), the hub w,
// three large matched copies each hung on w at a marked vertex, and one
// T block per source vertex, its v_side joined to that vertex.  The
// instance is bipartite by construction and satisfies z = Delta + 1,
// with Delta = n+3, exactly when the source is 3-edge-colorable.
struct HardnessInstance {
    Graph source;
    Graph graph;
    RoleMap roles;
    int n = 0;
    int m = 0;
    int w_id = -1;
    std::vector<int> core_ids;                // v_i at index i
    std::vector<int> edge_ids;                // e_j at index j
    std::vector<std::array<int, 5>> m33_ids;  // per edge: two corner mates of
                                              // e_j, then the three matched-side
                                              // vertices (e_j's partner first)
    std::vector<int> vplus_ids;               // marked vertex of each large copy
    std::vector<std::vector<int>> big_a;      // large copy sides, marked vertex
    std::vector<std::vector<int>> big_b;      //   first in big_a
    std::vector<TBlockIds> t_blocks;
};

// Throws std::invalid_argument unless g is 3-regular.
HardnessInstance build_hardness_instance(const Graph& g);

// Degree and bipartiteness profile the construction promises; every entry
// must hold on every instance, whatever the source graph.
struct StructureFact {
    std::string label;
    bool holds = false;
};

struct StructureFactsReport {
    std::vector<StructureFact> facts;

    bool all_hold() const {
        for (const auto& f : facts)
            if (!f.holds) return false;
        return true;
    }
};

StructureFactsReport verify_structure_facts(const HardnessInstance& inst);

// Turns a proper 3-edge-coloring of the source into a z-coloring of the
// instance with n+4 classes.  Throws std::invalid_argument when theta is
// not a proper 3-edge-coloring with colors in {1,2,3}.
Coloring lift_edge_coloring(const HardnessInstance& inst, const EdgeColoring& theta);

// Reads a proper 3-edge-coloring of the source off a z-coloring of the
// instance with n+4 classes: the color of each edge vertex.  Throws
// std::invalid_argument when c is not a valid z-coloring with exactly n+4
// classes, and contract_error when the extraction leaves {1,2,3} or the
// extracted edge coloring is improper (either would falsify the
// construction's guarantee).
EdgeColoring project_z_coloring(const HardnessInstance& inst, const Coloring& c);

// Gap instance over a connected bipartite source G: a path p1..p4 with p1
// joined to all of G and p4 joined to a fresh clique of size Delta(G).
// Satisfies z(H) = max{z(G), Delta(G)} + 1 while
// chi(H) = max{chi(G), Delta(G)} + 1, so sources with z(G) = Delta(G) + 1
// give z(H) > chi(H).  Ids: G keeps 0..n-1, then p1..p4, then the clique.
struct WellColoredInstance {
    Graph source;
    Graph graph;
    RoleMap roles;
    std::vector<int> path_ids;    // p1, p2, p3, p4
    std::vector<int> clique_ids;
};

// Throws std::invalid_argument unless g is connected, bipartite, and has
// at least one edge.
WellColoredInstance build_wellcolored_instance(const Graph& g);

}  // namespace zchrom
