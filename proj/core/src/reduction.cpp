#include "zchrom/reduction.hpp"

#include <algorithm>
#include <utility>

#include "zchrom/validate.hpp"

namespace zchrom {

namespace {

constexpr int kFTreeEdges[7][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 5}, {3, 6}, {6, 7}};

struct TLayout {
    int count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> v_side, u_side;
    std::vector<int> js;  // source index j for position p of v_side/u_side
    int x = -1, y = -1, q = -1;
    int a = -1, b = -1, c = -1;
    int f = -1;
    std::array<int, 7> tree{};
};

// Local ids: attachment side 0..n+1 (v_j^i ascending j skipping i, then
// x, y, q), matched side n+2..2n+3 (u_j^i, then a, b, c), partner pairs at
// equal positions non-adjacent, then f = 2n+4 and its tree through 2n+11.
TLayout t_layout(int n, int i) {
    TLayout t;
    int side = n + 2;
    for (int p = 0; p < n - 1; ++p) {
        t.v_side.push_back(p);
        t.u_side.push_back(side + p);
        t.js.push_back(p + 1 >= i ? p + 2 : p + 1);
    }
    t.x = n - 1;
    t.y = n;
    t.q = n + 1;
    t.a = side + n - 1;
    t.b = side + n;
    t.c = side + n + 1;
    for (int ta = 0; ta < side; ++ta)
        for (int tb = 0; tb < side; ++tb)
            if (ta != tb) t.edges.push_back({ta, side + tb});
    t.f = 2 * side;
    for (int p = 0; p < n - 1; ++p) t.edges.push_back({t.f, t.u_side[p]});
    for (const auto& e : kFTreeEdges) t.edges.push_back({t.f + e[0], t.f + e[1]});
    for (int p = 0; p < 7; ++p) t.tree[p] = t.f + 1 + p;
    t.count = 2 * side + 8;
    return t;
}

// Per-block coloring patterns for the small matched blocks, one corner of
// which is an edge vertex carrying the edge color.  Partner pairs share a
// color (they are non-adjacent); cross pairs always differ; every corner
// sees whatever lower colors its own color requires.
void m33_patterns(int theta, std::array<int, 3>& a_side, std::array<int, 3>& b_side) {
    switch (theta) {
        case 1:
            a_side = {1, 1, 1};
            b_side = {2, 2, 2};
            break;
        case 2:
            a_side = {2, 2, 2};
            b_side = {1, 1, 1};
            break;
        default:
            a_side = {3, 1, 2};
            b_side = {3, 1, 2};
            break;
    }
}

void require_cubic(const Graph& g, const char* who) {
    auto s = graph_stats(g);
    if (!s.regular || *s.regular != 3)
        throw std::invalid_argument(std::string(who) + " requires a 3-regular source graph");
}

// Colors of the source edges incident to each source vertex, for
// properness checks of edge colorings.
void require_proper_three_edge(const Graph& source, const std::vector<int>& theta,
                               bool as_contract) {
    auto fail = [&](const std::string& msg) {
        if (as_contract) throw contract_error(msg);
        throw std::invalid_argument(msg);
    };
    if (static_cast<int>(theta.size()) != source.edge_count())
        fail("edge coloring size does not match the source edge count");
    for (int col : theta)
        if (col < 1 || col > 3) fail("edge color outside {1,2,3}");
    std::vector<int> seen(static_cast<std::size_t>(source.vertex_count()) * 3, -1);
    for (int j = 0; j < source.edge_count(); ++j) {
        auto [u, v] = source.edges()[j];
        for (int end : {u, v}) {
            int& slot = seen[static_cast<std::size_t>(end) * 3 + theta[j] - 1];
            if (slot >= 0)
                fail("edge coloring is improper at source vertex " + std::to_string(end));
            slot = j;
        }
    }
}

}  // namespace

FGadget synth_f_gadget() {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : kFTreeEdges) edges.push_back({e[0], e[1]});
    return FGadget{Graph::from_edges(8, std::move(edges)), 0};
}

TGadget build_t_gadget(int n, int i) {
    if (n < 3) throw std::invalid_argument("build_t_gadget: n must be at least 3");
    if (i < 1 || i > n) throw std::invalid_argument("build_t_gadget: block index out of range");
    TLayout t = t_layout(n, i);
    std::vector<Role> roles(t.count);
    for (int p = 0; p < n - 1; ++p) {
        roles[t.v_side[p]] = Role{"tv", i, t.js[p]};
        roles[t.u_side[p]] = Role{"tu", i, t.js[p]};
    }
    roles[t.x] = Role{"tx", i};
    roles[t.y] = Role{"ty", i};
    roles[t.q] = Role{"tq", i};
    roles[t.a] = Role{"ta", i};
    roles[t.b] = Role{"tb", i};
    roles[t.c] = Role{"tc", i};
    roles[t.f] = Role{"tf", i};
    for (int p = 0; p < 7; ++p) roles[t.tree[p]] = Role{"tfi", i, p + 1};
    return TGadget{Graph::from_edges(t.count, t.edges),
                   RoleMap{std::move(roles)},
                   t.v_side,
                   t.u_side,
                   t.x,
                   t.y,
                   t.q,
                   t.a,
                   t.b,
                   t.c,
                   t.f,
                   std::vector<int>(t.tree.begin(), t.tree.end())};
}

HardnessInstance build_hardness_instance(const Graph& g) {
    require_cubic(g, "build_hardness_instance");
    int n = g.vertex_count();
    int m = g.edge_count();

    std::vector<std::pair<int, int>> edges;
    std::vector<Role> roles;
    int next = 0;
    auto fresh = [&](Role r) {
        roles.push_back(std::move(r));
        return next++;
    };

    std::vector<int> core_ids, edge_ids, vplus_ids;
    for (int i = 0; i < n; ++i) core_ids.push_back(fresh(Role{"v", i + 1}));
    for (int j = 0; j < m; ++j) edge_ids.push_back(fresh(Role{"e", j + 1}));
    for (int j = 0; j < m; ++j) {
        auto [u, v] = g.edges()[j];
        edges.push_back({core_ids[u], edge_ids[j]});
        edges.push_back({core_ids[v], edge_ids[j]});
    }

    std::vector<std::array<int, 5>> m33_ids;
    for (int j = 0; j < m; ++j) {
        std::array<int, 5> ids{};
        for (int t = 0; t < 5; ++t) ids[t] = fresh(Role{"m33", j + 1, t + 1});
        int a_side[3] = {edge_ids[j], ids[0], ids[1]};
        int b_side[3] = {ids[2], ids[3], ids[4]};
        for (int ta = 0; ta < 3; ++ta)
            for (int tb = 0; tb < 3; ++tb)
                if (ta != tb) edges.push_back({a_side[ta], b_side[tb]});
        m33_ids.push_back(ids);
    }

    int w_id = fresh(Role{"w"});
    for (int i = 0; i < n; ++i) edges.push_back({w_id, core_ids[i]});

    std::vector<std::vector<int>> big_a, big_b;
    int side = n + 3;
    for (int cpy = 1; cpy <= 3; ++cpy) {
        std::vector<int> a_ids(side), b_ids(side);
        a_ids[0] = fresh(Role{"vplus", cpy});
        for (int t = 1; t < side; ++t) a_ids[t] = fresh(Role{"mbig", cpy, t});
        for (int t = 0; t < side; ++t) b_ids[t] = fresh(Role{"mbig", cpy, side + t});
        for (int ta = 0; ta < side; ++ta)
            for (int tb = 0; tb < side; ++tb)
                if (ta != tb) edges.push_back({a_ids[ta], b_ids[tb]});
        edges.push_back({w_id, a_ids[0]});
        vplus_ids.push_back(a_ids[0]);
        big_a.push_back(std::move(a_ids));
        big_b.push_back(std::move(b_ids));
    }

    std::vector<TBlockIds> t_blocks;
    for (int i = 1; i <= n; ++i) {
        TLayout t = t_layout(n, i);
        int base = next;
        next += t.count;
        roles.resize(next);
        TBlockIds blk;
        for (int p = 0; p < n - 1; ++p) {
            blk.v_side.push_back(base + t.v_side[p]);
            blk.u_side.push_back(base + t.u_side[p]);
            roles[blk.v_side[p]] = Role{"tv", i, t.js[p]};
            roles[blk.u_side[p]] = Role{"tu", i, t.js[p]};
        }
        blk.x = base + t.x;
        blk.y = base + t.y;
        blk.q = base + t.q;
        blk.a = base + t.a;
        blk.b = base + t.b;
        blk.c = base + t.c;
        blk.f = base + t.f;
        roles[blk.x] = Role{"tx", i};
        roles[blk.y] = Role{"ty", i};
        roles[blk.q] = Role{"tq", i};
        roles[blk.a] = Role{"ta", i};
        roles[blk.b] = Role{"tb", i};
        roles[blk.c] = Role{"tc", i};
        roles[blk.f] = Role{"tf", i};
        for (int p = 0; p < 7; ++p) {
            blk.f_tree.push_back(base + t.tree[p]);
            roles[base + t.tree[p]] = Role{"tfi", i, p + 1};
        }
        for (auto [a2, b2] : t.edges) edges.push_back({base + a2, base + b2});
        for (int v : blk.v_side) edges.push_back({core_ids[i - 1], v});
        t_blocks.push_back(std::move(blk));
    }

    return HardnessInstance{g,
                            Graph::from_edges(next, std::move(edges)),
                            RoleMap{std::move(roles)},
                            n,
                            m,
                            w_id,
                            std::move(core_ids),
                            std::move(edge_ids),
                            std::move(m33_ids),
                            std::move(vplus_ids),
                            std::move(big_a),
                            std::move(big_b),
                            std::move(t_blocks)};
}

StructureFactsReport verify_structure_facts(const HardnessInstance& inst) {
    const Graph& h = inst.graph;
    int n = inst.n;
    StructureFactsReport rep;
    auto add = [&](std::string label, bool holds) {
        rep.facts.push_back({std::move(label), holds});
    };

    bool hub_ok = h.degree(inst.w_id) == n + 3;
    for (int v : inst.core_ids) hub_ok = hub_ok && h.degree(v) == n + 3;
    add("w and every source vertex have degree n+3", hub_ok);

    bool vside_ok = true, uside_ok = true;
    for (const auto& blk : inst.t_blocks) {
        for (int v : blk.v_side) vside_ok = vside_ok && h.degree(v) == n + 2;
        for (int u : blk.u_side) uside_ok = uside_ok && h.degree(u) == n + 2;
    }
    add("every attachment-side block vertex has degree n+2", vside_ok);
    add("every matched-side block vertex has degree n+2", uside_ok);

    bool edge_ok = true;
    for (int e : inst.edge_ids) edge_ok = edge_ok && h.degree(e) == 4;
    add("every edge vertex has degree 4", edge_ok);

    bool corner_ok = true;
    for (const auto& blk : inst.t_blocks) {
        for (int v : {blk.x, blk.y, blk.q, blk.a, blk.b, blk.c})
            corner_ok = corner_ok && h.degree(v) == n + 1;
        corner_ok = corner_ok && h.degree(blk.f) == n + 2;
    }
    for (int v : inst.vplus_ids) corner_ok = corner_ok && h.degree(v) == n + 3;
    add("block corners have degree n+1, f degree n+2, marked copy vertices degree n+3",
        corner_ok);

    bool max_ok = h.max_degree() == n + 3;
    std::vector<char> allowed(h.vertex_count(), 0);
    allowed[inst.w_id] = 1;
    for (int v : inst.core_ids) allowed[v] = 1;
    for (int v : inst.vplus_ids) allowed[v] = 1;
    for (int v = 0; v < h.vertex_count() && max_ok; ++v)
        if (h.degree(v) == n + 3 && !allowed[v]) max_ok = false;
    add("maximum degree n+3 is attained exactly by w, source, and marked copy vertices",
        max_ok);

    add("the instance is bipartite", graph_stats(h).bipartite);
    return rep;
}

Coloring lift_edge_coloring(const HardnessInstance& inst, const EdgeColoring& theta) {
    require_proper_three_edge(inst.source, theta.colors, false);
    int n = inst.n;
    std::vector<int> col(inst.graph.vertex_count(), 0);

    for (int i = 0; i < n; ++i) col[inst.core_ids[i]] = i + 4;
    col[inst.w_id] = n + 4;

    for (int j = 0; j < inst.m; ++j) {
        std::array<int, 3> a_side{}, b_side{};
        m33_patterns(theta.colors[j], a_side, b_side);
        col[inst.edge_ids[j]] = a_side[0];
        col[inst.m33_ids[j][0]] = a_side[1];
        col[inst.m33_ids[j][1]] = a_side[2];
        for (int t = 0; t < 3; ++t) col[inst.m33_ids[j][2 + t]] = b_side[t];
    }

    int side = n + 3;
    for (int cpy = 0; cpy < 3; ++cpy)
        for (int t = 0; t < side; ++t) {
            int c = (t + cpy) % side + 1;  // marked vertex gets color cpy+1
            col[inst.big_a[cpy][t]] = c;
            col[inst.big_b[cpy][t]] = c;
        }

    for (int i = 1; i <= n; ++i) {
        const TBlockIds& blk = inst.t_blocks[i - 1];
        for (int p = 0; p < n - 1; ++p) {
            int j = p + 1 >= i ? p + 2 : p + 1;
            col[blk.v_side[p]] = j + 3;
            col[blk.u_side[p]] = j + 3;
        }
        col[blk.x] = 1;
        col[blk.y] = 2;
        col[blk.q] = 3;
        col[blk.a] = 1;
        col[blk.b] = 2;
        col[blk.c] = 3;
        col[blk.f] = i + 3;
        static constexpr int tree_colors[7] = {1, 2, 3, 1, 1, 2, 1};
        for (int p = 0; p < 7; ++p) col[blk.f_tree[p]] = tree_colors[p];
    }

    return Coloring{n + 4, std::move(col)};
}

EdgeColoring project_z_coloring(const HardnessInstance& inst, const Coloring& c) {
    if (c.k != inst.n + 4)
        throw std::invalid_argument("projection needs a coloring with exactly n+4 classes");
    auto check = is_z_coloring(inst.graph, c);
    if (!check.ok)
        throw std::invalid_argument("projection requires a valid z-coloring of the instance");

    std::vector<int> theta(inst.m);
    for (int j = 0; j < inst.m; ++j) theta[j] = c.colors[inst.edge_ids[j]];
    require_proper_three_edge(inst.source, theta, true);
    return EdgeColoring{std::move(theta)};
}

WellColoredInstance build_wellcolored_instance(const Graph& g) {
    auto s = graph_stats(g);
    if (!s.connected || !s.bipartite || s.max_degree < 1)
        throw std::invalid_argument(
            "build_wellcolored_instance requires a connected bipartite source with an edge");
    int n = g.vertex_count();
    int delta = s.max_degree;

    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<Role> roles(n + 4 + delta);
    for (int v = 0; v < n; ++v) roles[v] = Role{"g", v + 1};

    std::vector<int> path_ids, clique_ids;
    for (int t = 0; t < 4; ++t) {
        path_ids.push_back(n + t);
        roles[n + t] = Role{"p", t + 1};
    }
    for (int t = 0; t < delta; ++t) {
        clique_ids.push_back(n + 4 + t);
        roles[n + 4 + t] = Role{"kdelta", t + 1};
    }

    for (int t = 0; t < 3; ++t) edges.push_back({path_ids[t], path_ids[t + 1]});
    for (int v = 0; v < n; ++v) edges.push_back({path_ids[0], v});
    for (int u : clique_ids) edges.push_back({path_ids[3], u});
    for (int t1 = 0; t1 < delta; ++t1)
        for (int t2 = t1 + 1; t2 < delta; ++t2)
            edges.push_back({clique_ids[t1], clique_ids[t2]});

    return WellColoredInstance{g, Graph::from_edges(n + 4 + delta, std::move(edges)),
                               RoleMap{std::move(roles)}, std::move(path_ids),
                               std::move(clique_ids)};
}

}  // namespace zchrom
