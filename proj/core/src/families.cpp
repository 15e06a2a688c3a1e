#include "zchrom/families.hpp"

#include <stdexcept>

namespace zchrom {

FamilyInstance build_gn(int n) {
    if (n < 3) throw std::invalid_argument("build_gn requires n >= 3");
    int total = n * (2 * n - 1);
    RoleMap roles;
    roles.roles.resize(total);
    std::vector<std::pair<int, int>> edges;

    for (int i = 1; i <= n; ++i) roles[i - 1] = Role{"core", i};
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i - 1, j - 1);

    int clique_base = n;
    int leaf_base = n + n * (n - 1);
    for (int i = 1; i <= n; ++i) {
        // K(v_i): fresh members v_1^i..v_{n-1}^i plus the core vertex.
        std::vector<int> block;
        for (int j = 1; j <= n - 1; ++j) {
            int id = clique_base + (i - 1) * (n - 1) + (j - 1);
            roles[id] = Role{"cliq", i, j};
            block.push_back(id);
        }
        block.push_back(i - 1);
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                edges.emplace_back(block[a], block[b]);
        // n-1 leaves on v_1^i.
        int v1 = clique_base + (i - 1) * (n - 1);
        for (int t = 1; t <= n - 1; ++t) {
            int id = leaf_base + (i - 1) * (n - 1) + (t - 1);
            roles[id] = Role{"leaf", i, t};
            edges.emplace_back(v1, id);
        }
    }

    FamilyInstance inst{Graph::from_edges(total, std::move(edges)), std::move(roles), {}};
    inst.expected = {{"chi", n}, {"z", n}, {"gamma", 2 * n - 1}, {"b", 2 * n - 1}};
    return inst;
}

FamilyInstance build_tree_atom(int k) {
    if (k < 1) throw std::invalid_argument("build_tree_atom requires k >= 1");
    RoleMap roles;
    roles.roles.push_back(Role{"atom", 1});
    std::vector<std::pair<int, int>> edges;
    int size = 1;
    for (int level = 2; level <= k; ++level) {
        for (int p = 0; p < size; ++p) {
            edges.emplace_back(p, size + p);
            roles.roles.push_back(Role{"atom", level});
        }
        size *= 2;
    }
    FamilyInstance inst{Graph::from_edges(size, std::move(edges)), std::move(roles), {}};
    inst.expected = {{"gamma", k}, {"z", tree_atom_z_value(k)}};
    return inst;
}

int tree_atom_z_value(int k) {
    if (k < 1) throw std::invalid_argument("tree_atom_z_value requires k >= 1");
    return (k + 2) / 2;
}

IncidenceInstance incidence_graph(const Graph& g) {
    int n = g.vertex_count();
    RoleMap roles;
    roles.roles.resize(n + g.edge_count());
    for (int v = 0; v < n; ++v) roles[v] = Role{"v", v + 1};
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < g.edge_count(); ++j) {
        roles[n + j] = Role{"e", j + 1};
        edges.emplace_back(g.edges()[j].first, n + j);
        edges.emplace_back(g.edges()[j].second, n + j);
    }
    return {Graph::from_edges(n + g.edge_count(), std::move(edges)), std::move(roles)};
}

}  // namespace zchrom
