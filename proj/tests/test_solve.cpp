#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "zchrom/families.hpp"
#include "zchrom/graph.hpp"
#include "zchrom/solve.hpp"
#include "zchrom/validate.hpp"

using namespace zchrom;

namespace {

struct Four {
    int chi, gamma, b, z;
};

Four all_invariants(const Graph& g) {
    auto c = exact_chromatic(g);
    auto gr = exact_grundy(g);
    auto bb = exact_b(g);
    auto zz = exact_z(g);
    REQUIRE(c.status == SolveStatus::solved);
    REQUIRE(gr.status == SolveStatus::solved);
    REQUIRE(bb.status == SolveStatus::solved);
    REQUIRE(zz.status == SolveStatus::solved);
    return {c.value, gr.value, bb.value, zz.value};
}

bool proper_edge_coloring(const Graph& g, const EdgeColoring& c) {
    if (c.colors.size() != static_cast<std::size_t>(g.edge_count())) return false;
    for (int col : c.colors)
        if (col < 1 || col > 3) return false;
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = i + 1; j < g.edge_count(); ++j) {
            auto [a, b] = g.edges()[i];
            auto [x, y] = g.edges()[j];
            bool incident = a == x || a == y || b == x || b == y;
            if (incident && c.colors[i] == c.colors[j]) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("known invariant values on small graphs") {
    auto p4 = all_invariants(path_graph(4));
    CHECK(p4.chi == 2);
    CHECK(p4.gamma == 3);
    CHECK(p4.b == 2);
    CHECK(p4.z == 2);

    auto c5 = all_invariants(cycle_graph(5));
    CHECK(c5.chi == 3);
    CHECK(c5.gamma == 3);
    CHECK(c5.b == 3);
    CHECK(c5.z == 3);

    auto c6 = all_invariants(cycle_graph(6));
    CHECK(c6.chi == 2);
    CHECK(c6.gamma == 3);
    CHECK(c6.b == 3);
    CHECK(c6.z == 3);

    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        auto kn = all_invariants(complete_graph(n));
        CHECK(kn.chi == n);
        CHECK(kn.gamma == n);
        CHECK(kn.b == n);
        CHECK(kn.z == n);
    }

    auto star = all_invariants(star_graph(4));
    CHECK(star.chi == 2);
    CHECK(star.gamma == 2);
    CHECK(star.b == 2);
    CHECK(star.z == 2);

    auto m44 = all_invariants(matched_minus(4));
    CHECK(m44.chi == 2);
    CHECK(m44.gamma == 4);
    CHECK(m44.b == 4);
    CHECK(m44.z == 4);
}

TEST_CASE("witnesses satisfy the property they were searched for") {
    auto g = cycle_graph(6);

    auto c = exact_chromatic(g);
    REQUIRE(c.witness);
    CHECK(c.witness->k == c.value);
    CHECK(is_proper(g, *c.witness).ok);

    auto gr = exact_grundy(g);
    REQUIRE(gr.witness);
    CHECK(gr.witness->k == gr.value);
    CHECK(is_grundy(g, *gr.witness).ok);

    auto b = exact_b(g);
    REQUIRE(b.witness);
    CHECK(b.witness->k == b.value);
    CHECK(is_b_coloring(g, *b.witness).ok);

    auto z = exact_z(g);
    REQUIRE(z.witness);
    CHECK(z.witness->k == z.value);
    auto zc = is_z_coloring(g, *z.witness);
    CHECK(zc.ok);
    REQUIRE(zc.certificate);
    CHECK(certificate_valid(g, *z.witness, *zc.certificate));
}

TEST_CASE("decision log certifies optimality") {
    auto c = exact_chromatic(cycle_graph(5));
    REQUIRE(c.decisions.size() == 3);
    CHECK(c.decisions[0].colors == 1);
    CHECK(c.decisions[0].outcome == -1);
    CHECK(c.decisions[1].colors == 2);
    CHECK(c.decisions[1].outcome == -1);
    CHECK(c.decisions[2].colors == 3);
    CHECK(c.decisions[2].outcome == 1);

    // downward searches record the infeasible count above the answer
    // whenever the first probe is not already feasible
    auto gr = exact_grundy(cycle_graph(4));
    CHECK(gr.value == 2);
    REQUIRE(gr.decisions.size() == 2);
    CHECK(gr.decisions[0].colors == 3);
    CHECK(gr.decisions[0].outcome == -1);
    CHECK(gr.decisions[1].colors == 2);
    CHECK(gr.decisions[1].outcome == 1);
}

TEST_CASE("no chromatic anomaly across the zoo") {
    for (const Graph& g : {path_graph(4), cycle_graph(5), cycle_graph(6), complete_graph(4),
                           matched_minus(3), matched_minus(4), star_graph(5),
                           complete_bipartite(2, 3), test_util::petersen()}) {
        auto z = exact_z(g);
        REQUIRE(z.status == SolveStatus::solved);
        CHECK_FALSE(z.chi_anomaly);
    }
}

TEST_CASE("invariant sandwich on random graphs") {
    std::mt19937 rng(20260816);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        double p = 0.2 + 0.15 * static_cast<double>(trial % 5);
        auto g = test_util::random_graph(rng, n, p);
        CAPTURE(trial);
        auto inv = all_invariants(g);
        CHECK(inv.chi <= inv.z);
        CHECK(inv.z <= inv.gamma);
        CHECK(inv.z <= inv.b);
        CHECK(inv.gamma <= g.max_degree() + 1);
        CHECK(inv.b <= g.max_degree() + 1);
    }
}

TEST_CASE("solvers agree with the exhaustive oracle") {
    std::mt19937 rng(7);
    std::vector<Graph> zoo = {path_graph(1),  path_graph(2), path_graph(5),
                              cycle_graph(4), cycle_graph(5), complete_graph(4),
                              complete_bipartite(2, 3), star_graph(3), matched_minus(3),
                              Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}})};
    for (int trial = 0; trial < 20; ++trial)
        zoo.push_back(test_util::random_graph(rng, 5 + static_cast<int>(rng() % 3),
                                              0.25 + 0.1 * static_cast<double>(trial % 4)));
    for (std::size_t i = 0; i < zoo.size(); ++i) {
        CAPTURE(i);
        const auto& g = zoo[i];
        auto o = brute_force_oracle(g);
        auto inv = all_invariants(g);
        CHECK(inv.chi == o.chi);
        CHECK(inv.gamma == o.grundy);
        CHECK(inv.b == o.b);
        CHECK(inv.z == o.z);
    }
    CHECK_THROWS_AS(brute_force_oracle(path_graph(11)), std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    auto g = build_gn(3).graph;

    SolveOptions tiny;
    tiny.max_nodes = 1;
    auto starved = exact_z(g, tiny);
    CHECK(starved.status == SolveStatus::budget_exhausted);

    auto starved_gamma = exact_grundy(g, tiny);
    CHECK(starved_gamma.status == SolveStatus::budget_exhausted);
    REQUIRE_FALSE(starved_gamma.decisions.empty());
    CHECK(starved_gamma.decisions.back().outcome == 0);

    auto full = exact_z(g);
    CHECK(full.status == SolveStatus::solved);
    CHECK(full.value == 3);
    CHECK(full.nodes > 1);
}

TEST_CASE("family constructions hit their designed values") {
    auto inst = build_gn(3);
    auto inv = all_invariants(inst.graph);
    CHECK(inv.chi == inst.expected.at("chi"));
    CHECK(inv.gamma == inst.expected.at("gamma"));
    CHECK(inv.b == inst.expected.at("b"));
    CHECK(inv.z == inst.expected.at("z"));

    for (int k = 1; k <= 5; ++k) {
        CAPTURE(k);
        auto atom = build_tree_atom(k);
        CHECK(exact_grundy(atom.graph).value == atom.expected.at("gamma"));
        CHECK(exact_z(atom.graph).value == atom.expected.at("z"));
    }
}

TEST_CASE("achievable class counts can skip a value") {
    auto sp_c4 = z_spectrum(cycle_graph(4));
    CHECK(sp_c4.achievable == std::vector<int>{2});

    auto sp_k4 = z_spectrum(complete_graph(4));
    CHECK(sp_k4.achievable == std::vector<int>{4});

    auto sp_m3 = z_spectrum(matched_minus(3));
    CHECK(sp_m3.achievable == std::vector<int>{2, 3});

    // first point of discontinuity in the family: 3 is skipped
    auto sp_m4 = z_spectrum(matched_minus(4));
    CHECK(sp_m4.achievable == std::vector<int>{2, 4});
}

TEST_CASE("cubic edge colorings are enumerated lexicographically") {
    auto k4 = complete_graph(4);
    auto all = enumerate_three_edge_colorings(k4, 100);
    REQUIRE(all.size() == 6);
    for (const auto& c : all) CHECK(proper_edge_coloring(k4, c));
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const EdgeColoring& x, const EdgeColoring& y) {
                             return x.colors < y.colors;
                         }));
    auto first = three_edge_coloring(k4);
    REQUIRE(first);
    CHECK(*first == all.front());
    CHECK(enumerate_three_edge_colorings(k4, 2).size() == 2);

    auto k33 = complete_bipartite(3, 3);
    CHECK(enumerate_three_edge_colorings(k33, 100).size() == 12);

    CHECK_FALSE(three_edge_coloring(test_util::petersen()));
    CHECK(enumerate_three_edge_colorings(test_util::petersen(), 100).empty());

    CHECK_THROWS_AS(three_edge_coloring(cycle_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(three_edge_coloring(complete_graph(5)), std::invalid_argument);
}

TEST_CASE("acyclic graphs are continuous and monotone") {
    for (int k = 1; k <= 5; ++k) {
        CAPTURE(k);
        auto atom = build_tree_atom(k);
        CHECK(verify_tree_continuity(atom.graph));
        CHECK(verify_monotonicity(atom.graph));
    }
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        auto t = test_util::random_tree(rng, 5 + static_cast<int>(rng() % 8));
        CAPTURE(trial);
        CHECK(verify_tree_continuity(t));
        CHECK(verify_monotonicity(t));
    }
    CHECK_THROWS_AS(verify_tree_continuity(cycle_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(verify_monotonicity(cycle_graph(3)), std::invalid_argument);
}

TEST_CASE("degenerate inputs") {
    auto edgeless = Graph::from_edges(3, {});
    auto inv = all_invariants(edgeless);
    CHECK(inv.chi == 1);
    CHECK(inv.gamma == 1);
    CHECK(inv.b == 1);
    CHECK(inv.z == 1);
    CHECK(z_spectrum(edgeless).achievable == std::vector<int>{1});

    auto empty = Graph::from_edges(0, {});
    CHECK_THROWS_AS(exact_chromatic(empty), std::invalid_argument);
    CHECK_THROWS_AS(exact_z(empty), std::invalid_argument);
    CHECK_THROWS_AS(z_spectrum(empty), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_oracle(empty), std::invalid_argument);
    CHECK_THROWS_AS(three_edge_coloring(empty), std::invalid_argument);
}
