#include "zchrom/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace zchrom {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    Graph g;
    g.n_ = n;
    g.words_ = static_cast<std::size_t>((n + 63) / 64);
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    g.bits_.assign(g.words_ * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.bits_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= 1ull << (v & 63);
        g.bits_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= 1ull << (u & 63);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

Graph standard_graph(const GraphKind& kind) {
    using Tag = GraphKind::Tag;
    switch (kind.tag) {
        case Tag::complete: return complete_graph(kind.a);
        case Tag::complete_bipartite: return complete_bipartite(kind.a, kind.b);
        case Tag::path: return path_graph(kind.a);
        case Tag::cycle: return cycle_graph(kind.a);
        case Tag::star: return star_graph(kind.a);
        case Tag::matched_minus: return matched_minus(kind.a);
    }
    throw std::invalid_argument("unknown graph kind");
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs positive sides");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph::from_edges(a + b, std::move(e));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(e));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, std::move(e));
}

Graph matched_minus(int n) {
    if (n < 1) throw std::invalid_argument("matched_minus needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) e.emplace_back(i, n + j);
    return Graph::from_edges(2 * n, std::move(e));
}

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<std::pair<int, int>> e = g1.edges();
    for (auto [u, v] : g2.edges()) e.emplace_back(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) e.emplace_back(u, n1 + v);
    return Graph::from_edges(n1 + n2, std::move(e));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count();
    std::vector<std::pair<int, int>> e = g1.edges();
    for (auto [u, v] : g2.edges()) e.emplace_back(n1 + u, n1 + v);
    return Graph::from_edges(n1 + g2.vertex_count(), std::move(e));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> newid(g.vertex_count(), -1);
    int next = 0;
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (newid[v] != -1)
            throw std::invalid_argument("induced_subgraph: repeated vertex");
        newid[v] = next++;
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        if (newid[u] != -1 && newid[v] != -1) e.emplace_back(newid[u], newid[v]);
    return Graph::from_edges(next, std::move(e));
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("remove_vertex: vertex out of range");
    std::vector<int> keep;
    keep.reserve(g.vertex_count() - 1);
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.vertices = g.vertex_count();
    s.edge_count = g.edge_count();
    s.degree_sequence.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) s.degree_sequence[v] = g.degree(v);
    std::sort(s.degree_sequence.begin(), s.degree_sequence.end());
    s.max_degree = s.degree_sequence.empty() ? 0 : s.degree_sequence.back();
    s.min_degree = s.degree_sequence.empty() ? 0 : s.degree_sequence.front();

    // One BFS sweep gives 2-colorability and the component count.
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    int components = 0;
    bool bip = true;
    for (int start = 0; start < n; ++start) {
        if (side[start] != -1) continue;
        ++components;
        side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = side[u] ^ 1;
                    q.push(w);
                } else if (side[w] == side[u]) {
                    bip = false;
                }
            }
        }
    }
    s.bipartite = bip;
    s.connected = components <= 1;
    s.forest = g.edge_count() == n - components;
    s.tree = s.connected && s.forest && n >= 1;
    if (n > 0 && s.min_degree == s.max_degree) s.regular = s.max_degree;
    return s;
}

}  // namespace zchrom
