#include <stdexcept>

#include "doctest.h"
#include "zchrom/graph.hpp"
#include "zchrom/graph6.hpp"
#include "zchrom/validate.hpp"

using namespace zchrom;

namespace {

// Triangle 0-1-2 plus a pendant vertex 3 on vertex 0.
Graph paw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("properness and its violation report") {
    auto g = path_graph(4);
    CHECK(is_proper(g, Coloring{2, {1, 2, 1, 2}}).ok);
    auto bad = is_proper(g, Coloring{2, {1, 1, 2, 1}});
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.violation);
    CHECK(bad.violation->kind == "monochromatic-edge");
    CHECK(bad.violation->vertex == 0);
    CHECK(bad.violation->other == 1);
    CHECK(bad.violation->to_string() == "monochromatic-edge vertex=0 other=1 color=1");
}

TEST_CASE("grundy holds while b fails: greedy coloring of a path") {
    auto g = path_graph(4);
    Coloring c{3, {1, 2, 3, 1}};
    CHECK(is_grundy(g, c).ok);
    auto b = is_b_coloring(g, c);
    REQUIRE_FALSE(b.ok);
    CHECK(b.violation->kind == "class-without-dominating-vertex");
    CHECK(b.violation->color == 1);
    auto z = is_z_coloring(g, c);
    REQUIRE_FALSE(z.ok);
    CHECK_FALSE(z.certificate);
    CHECK(z.violation->kind == "no-witness-tuple");
}

TEST_CASE("b holds while grundy fails: pendant colored too high") {
    auto g = paw();
    Coloring c{3, {1, 2, 3, 3}};
    CHECK(is_b_coloring(g, c).ok);
    auto gr = is_grundy(g, c);
    REQUIRE_FALSE(gr.ok);
    CHECK(gr.violation->kind == "missing-lower-color");
    CHECK(gr.violation->vertex == 3);
    CHECK(gr.violation->color == 2);
    // z inherits the greedy defect
    auto z = is_z_coloring(g, c);
    REQUIRE_FALSE(z.ok);
    CHECK(z.violation->kind == "missing-lower-color");
}

TEST_CASE("grundy and b together still do not force z") {
    // 8-vertex graph where the 4-coloring satisfies the greedy condition
    // and every class has a dominating vertex, yet no witness tuple exists.
    auto g = parse_graph6("G\\ZaaW");
    Coloring c{4, {2, 4, 3, 4, 1, 1, 1, 2}};
    CHECK(is_grundy(g, c).ok);
    CHECK(is_b_coloring(g, c).ok);
    auto z = is_z_coloring(g, c);
    REQUIRE_FALSE(z.ok);
    CHECK(z.violation->kind == "no-witness-tuple");

    auto r = validate_all(g, c);
    CHECK(r.proper);
    CHECK(r.grundy);
    CHECK(r.b);
    CHECK_FALSE(r.z);
    CHECK_FALSE(r.certificate);
    REQUIRE(r.violation);
    CHECK(r.violation->kind == "no-witness-tuple");
}

TEST_CASE("alternating path satisfies all four properties") {
    auto g = path_graph(4);
    Coloring c{2, {1, 2, 1, 2}};
    auto r = validate_all(g, c);
    CHECK(r.proper);
    CHECK(r.grundy);
    CHECK(r.b);
    CHECK(r.z);
    REQUIRE(r.certificate);
    CHECK(r.certificate->witness == std::vector<int>{0, 1});
    CHECK(r.certificate->nice_vertex == 1);
    CHECK(certificate_valid(g, c, *r.certificate));
    CHECK(emit_certificate(c, *r.certificate) ==
          "{\"k\": 2, \"witness\": [0, 1], \"nice_vertex\": 1}");
}

TEST_CASE("certificate cross-check rejects mutations") {
    auto g = path_graph(4);
    Coloring c{2, {1, 2, 1, 2}};
    auto z = is_z_coloring(g, c);
    REQUIRE(z.ok);
    auto cert = *z.certificate;
    CHECK(certificate_valid(g, c, cert));

    auto wrong_class = cert;
    wrong_class.witness[0] = 1;
    CHECK_FALSE(certificate_valid(g, c, wrong_class));

    auto not_adjacent = cert;
    not_adjacent.witness[1] = 3;
    not_adjacent.nice_vertex = 3;
    CHECK_FALSE(certificate_valid(g, c, not_adjacent));

    auto mismatched_nice = cert;
    mismatched_nice.nice_vertex = 3;
    CHECK_FALSE(certificate_valid(g, c, mismatched_nice));

    auto short_witness = cert;
    short_witness.witness.pop_back();
    CHECK_FALSE(certificate_valid(g, c, short_witness));
}

TEST_CASE("single vertex with one color is a z-coloring") {
    auto g = complete_graph(1);
    Coloring c{1, {1}};
    auto z = is_z_coloring(g, c);
    REQUIRE(z.ok);
    CHECK(z.certificate->witness == std::vector<int>{0});
    CHECK(z.certificate->nice_vertex == 0);
    CHECK(certificate_valid(g, c, *z.certificate));
}

TEST_CASE("dominating vertices per class") {
    auto g = path_graph(4);
    Coloring c{2, {1, 2, 1, 2}};
    CHECK(dominating_vertices(g, c, 1) == std::vector<int>{0, 2});
    CHECK(dominating_vertices(g, c, 2) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(dominating_vertices(g, c, 0), std::invalid_argument);
    CHECK_THROWS_AS(dominating_vertices(g, c, 3), std::invalid_argument);
}

TEST_CASE("checks beyond properness refuse improper input") {
    auto g = path_graph(3);
    Coloring improper{2, {1, 1, 2}};
    CHECK_THROWS_AS(is_grundy(g, improper), std::invalid_argument);
    CHECK_THROWS_AS(is_b_coloring(g, improper), std::invalid_argument);
    CHECK_THROWS_AS(is_z_coloring(g, improper), std::invalid_argument);
    CHECK_THROWS_AS(dominating_vertices(g, improper, 1), std::invalid_argument);
    // validate_all reports instead of throwing
    auto r = validate_all(g, improper);
    CHECK_FALSE(r.proper);
    CHECK_FALSE(r.z);
    REQUIRE(r.violation);
    CHECK(r.violation->kind == "monochromatic-edge");
    CHECK_FALSE(certificate_valid(g, improper, ZCertificate{{0, 2}, 2}));
}
