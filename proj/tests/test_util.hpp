#pragma once

#include <random>
#include <utility>
#include <vector>

#include "zchrom/graph.hpp"

namespace test_util {

// Uniform random graph on n vertices with edge probability p.  All
// randomized tests seed their own engine so failures reproduce.
inline zchrom::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.push_back({u, v});
    return zchrom::Graph::from_edges(n, std::move(edges));
}

// Random recursive tree: vertex v attaches to a uniform earlier vertex.
inline zchrom::Graph random_tree(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back({pick(rng), v});
    }
    return zchrom::Graph::from_edges(n, std::move(edges));
}

inline zchrom::Graph petersen() {
    return zchrom::Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},  // outer cycle
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},  // inner pentagram
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

}  // namespace test_util
