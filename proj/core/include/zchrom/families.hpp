#pragma once

#include <map>
#include <string>

#include "zchrom/graph.hpp"
#include "zchrom/roles.hpp"

namespace zchrom {

struct FamilyInstance {
    Graph graph;
    RoleMap roles;
    // Target invariant values the construction is designed to hit, keyed
    // by "chi", "gamma", "b", "z"; checked against the solvers in tests.
    std::map<std::string, int> expected;
};

// Clique-core family: an n-clique on core vertices v_1..v_n, an n-clique
// K(v_i) hung on each v_i (v_i identified with the last member), and n-1
// leaves on the first member of each K(v_i).  Ids: cores 0..n-1, then the
// n-1 fresh members of each K(v_i) in block order, then the leaves in
// block order.  Roles: core:i, cliq:i.j (member v_j^i of K(v_i)),
// leaf:i.t (t-th leaf hanging off v_1^i).  Requires n >= 3.
FamilyInstance build_gn(int n);

// Binary leaf-growth trees: A_1 is a single vertex and A_{k+1} grows one
// leaf on every vertex of A_k, so |V(A_k)| = 2^{k-1}.  Existing ids are
// stable across levels; the leaf grown on p at level step k gets id
// 2^{k-1} + p.  Roles: atom:l for the level at which the vertex appeared.
// Requires k >= 1.
FamilyInstance build_tree_atom(int k);

// Closed form for the z-value of the k-th atom: ceil((k+1)/2).
int tree_atom_z_value(int k);

// Incidence graph: vertices of g keep their ids (role v:i), edge j of
// g.edges() becomes vertex n+j (role e:j+1) adjacent to its endpoints.
struct IncidenceInstance {
    Graph graph;
    RoleMap roles;
};

IncidenceInstance incidence_graph(const Graph& g);

}  // namespace zchrom
