#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zchrom {

// Finite simple undirected graph on vertices 0..n-1.  Instances are
// immutable: every operation that "modifies" a graph returns a new one.
// Adjacency is kept twice: sorted neighbor lists for linear scans, and
// bit rows (one word-packed row per vertex) for O(1) pair queries and
// word-parallel intersections in the solvers.
class Graph {
public:
    // Builds a graph from an edge list.  Throws std::invalid_argument on a
    // loop edge, a duplicate edge (either orientation), or an endpoint
    // outside 0..n-1.  Edge order in the input is irrelevant; edges are
    // stored normalized (u < v) and lexicographically sorted.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) & 1u;
    }

    // Bit row of vertex v: bit u set iff u and v are adjacent.
    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t words_per_row() const { return words_; }

    // Index of normalized edge (u,v) in edges(), if present.
    std::optional<int> edge_index(int u, int v) const;

private:
    Graph() = default;
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

// Parametrized constructors for the standard graphs used throughout the
// test corpus.  `matched_minus` is K_{n,n} minus the canonical perfect
// matching: sides A = 0..n-1 and B = n..2n-1, with i and n+i non-adjacent.
struct GraphKind {
    enum class Tag { complete, complete_bipartite, path, cycle, star, matched_minus };
    Tag tag;
    int a = 0;
    int b = 0;
};

Graph standard_graph(const GraphKind& kind);

// Shorthands for the common cases.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph matched_minus(int n);

// Join: g1 keeps its ids, g2 is shifted by g1.vertex_count(), and every
// cross pair becomes an edge.
Graph join(const Graph& g1, const Graph& g2);

// Disjoint union with the same id convention as join, without cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Subgraph induced on `keep` (ids are renumbered by ascending old id).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Removes one vertex and its incident edges; ids above v shift down by one.
Graph remove_vertex(const Graph& g, int v);

struct GraphStats {
    int vertices = 0;
    int edge_count = 0;
    std::vector<int> degree_sequence;  // ascending
    int max_degree = 0;
    int min_degree = 0;
    bool bipartite = false;
    bool connected = false;
    bool forest = false;
    bool tree = false;
    std::optional<int> regular;  // k if the graph is k-regular
};

GraphStats graph_stats(const Graph& g);

}  // namespace zchrom
