#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "zchrom/graph.hpp"
#include "zchrom/graph6.hpp"

using namespace zchrom;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(ZCHROM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    CliResult r;
    r.out = out;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path work_dir() {
    auto dir = fs::temp_directory_path() / "zchrom_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string file_in_work(const std::string& name) { return (work_dir() / name).string(); }

void put_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("gen writes graph6, with a role sidecar for labeled families") {
    auto r = run_cli("gen --family path --param 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == emit_graph6(path_graph(4)) + "\n");

    auto g3 = file_in_work("g3.g6");
    auto gen = run_cli("gen --family gn --param 3 --out " + g3);
    CHECK(gen.exit_code == 0);
    auto parsed = parse_graph6(slurp(g3));
    CHECK(parsed.vertex_count() == 15);
    auto roles = parse_roles(slurp(g3 + ".roles"));
    CHECK(roles.size() == 15);
    CHECK(roles[0] == Role{"core", 1});

    CHECK(run_cli("gen --family nosuch --param 3").exit_code == 2);
    CHECK(run_cli("gen --family gn --param 2").exit_code == 2);
}

TEST_CASE("solve prints the exact value and honors budgets") {
    auto g3 = file_in_work("g3.g6");
    run_cli("gen --family gn --param 3 --out " + g3);

    auto z = run_cli("solve --in " + g3 + " --invariant z");
    CHECK(z.exit_code == 0);
    CHECK(z.out == "3\n");
    auto gamma = run_cli("solve --in " + g3 + " --invariant grundy");
    CHECK(gamma.out == "5\n");

    auto atom4 = file_in_work("atom4.g6");
    run_cli("gen --family atom --param 4 --out " + atom4);
    CHECK(run_cli("solve --in " + atom4 + " --invariant grundy").out == "4\n");
    CHECK(run_cli("solve --in " + atom4 + " --invariant z").out == "3\n");

    auto starved = run_cli("solve --in " + g3 + " --invariant z --budget-nodes 1");
    CHECK(starved.exit_code == 3);
    CHECK(starved.out.empty());

    CHECK(run_cli("solve --in " + g3 + " --invariant nosuch").exit_code == 2);
    CHECK(run_cli("solve --in " + file_in_work("absent.g6") + " --invariant z").exit_code == 2);

    auto truncated = file_in_work("truncated.g6");
    put_file(truncated, "C");
    CHECK(run_cli("solve --in " + truncated + " --invariant z").exit_code == 2);
}

TEST_CASE("spectrum output lists achievable class counts") {
    auto m44 = file_in_work("m44.g6");
    run_cli("gen --family matched_minus --param 4 --out " + m44);
    auto r = run_cli("solve --in " + m44 + " --invariant zspectrum");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2 4\n");
}

TEST_CASE("witness files written by solve re-validate") {
    auto c6 = file_in_work("c6.g6");
    run_cli("gen --family cycle --param 6 --out " + c6);
    auto witness = file_in_work("c6_z.coloring");
    auto solved = run_cli("solve --in " + c6 + " --invariant z --out " + witness +
                          " --certificate");
    CHECK(solved.exit_code == 0);
    auto out_lines = lines_of(solved.out);
    REQUIRE(out_lines.size() == 2);
    CHECK(out_lines[0] == "3");
    CHECK(out_lines[1].front() == '{');

    auto check = run_cli("validate --in " + c6 + " --coloring " + witness + " --kind z");
    CHECK(check.exit_code == 0);
    CHECK(check.out.front() == '{');
    for (const char* kind : {"proper", "grundy", "b"}) {
        auto again = run_cli("validate --in " + c6 + " --coloring " + witness + " --kind " +
                             kind);
        CHECK(again.exit_code == 0);
        CHECK(again.out == "valid\n");
    }
}

TEST_CASE("validate reports violations with exit 1") {
    auto p4 = file_in_work("p4.g6");
    run_cli("gen --family path --param 4 --out " + p4);
    auto greedy = file_in_work("p4_greedy.coloring");
    put_file(greedy, "k=3\n0 1\n1 2\n2 3\n3 1\n");

    auto b = run_cli("validate --in " + p4 + " --coloring " + greedy + " --kind b");
    CHECK(b.exit_code == 1);
    CHECK(b.out.find("class-without-dominating-vertex") != std::string::npos);
    CHECK(b.out.find("color=1") != std::string::npos);
    CHECK(run_cli("validate --in " + p4 + " --coloring " + greedy + " --kind grundy")
              .exit_code == 0);

    auto partial = file_in_work("p4_partial.coloring");
    put_file(partial, "k=2\n0 1\n1 2\n");
    CHECK(run_cli("validate --in " + p4 + " --coloring " + partial + " --kind z").exit_code ==
          2);
    CHECK(run_cli("validate --in " + p4 + " --coloring " + file_in_work("nope.coloring") +
                  " --kind z")
              .exit_code == 2);
    CHECK(run_cli("validate --in " + p4 + " --coloring " + greedy + " --kind nosuch")
              .exit_code == 2);
}

TEST_CASE("sweep emits the fixed CSV header and exact rows") {
    auto r = run_cli("sweep --family gn --range 3..3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "param,vertices,max_degree,chi,gamma,b,z\n3,15,4,3,5,5,3\n");

    auto atoms = run_cli("sweep --family atom --range 1..5");
    CHECK(atoms.exit_code == 0);
    auto rows = lines_of(atoms.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "param,vertices,max_degree,chi,gamma,b,z");
    CHECK(rows[1] == "1,1,0,1,1,1,1");
    CHECK(rows[3] == "3,4,2,2,3,2,2");
    CHECK(rows[5] == "5,16,4,2,5,4,3");

    CHECK(run_cli("sweep --family nosuch --range 1..3").exit_code == 2);
    CHECK(run_cli("sweep --family atom --range 5..1").exit_code == 2);
    CHECK(run_cli("sweep --family atom --range x..y").exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
    auto first = run_cli("sweep --family atom --range 1..4");
    auto second = run_cli("sweep --family atom --range 1..4");
    CHECK(first.out == second.out);
    auto concurrent = run_cli("sweep --family atom --range 1..4 --deterministic off");
    CHECK(concurrent.exit_code == 0);
    CHECK(concurrent.out == first.out);

    auto c5 = file_in_work("c5.g6");
    run_cli("gen --family cycle --param 5 --out " + c5);
    auto a = run_cli("solve --in " + c5 + " --invariant z --certificate");
    auto b = run_cli("solve --in " + c5 + " --invariant z --certificate");
    CHECK(a.out == b.out);
}

TEST_CASE("reduce, lift, and project through files") {
    auto k4 = file_in_work("k4.g6");
    put_file(k4, emit_graph6(complete_graph(4)) + "\n");

    auto inst = file_in_work("k4_hardness.g6");
    auto reduced = run_cli("reduce --in " + k4 + " --kind hardness --out " + inst);
    CHECK(reduced.exit_code == 0);
    auto rlines = lines_of(reduced.out);
    REQUIRE(rlines.size() == 8);
    CHECK(rlines[0] == "vertices=163 edges=353");
    for (std::size_t i = 1; i < rlines.size(); ++i)
        CHECK(rlines[i].rfind("ok", 0) == 0);
    CHECK(parse_graph6(slurp(inst)).vertex_count() == 163);
    CHECK(parse_roles(slurp(inst + ".roles")).size() == 163);

    auto lifted = file_in_work("k4_lift.coloring");
    auto lift = run_cli("lift --in " + k4 + " --out " + lifted);
    CHECK(lift.exit_code == 0);
    CHECK(lift.out == "8\n");

    auto check = run_cli("validate --in " + inst + " --coloring " + lifted + " --kind z");
    CHECK(check.exit_code == 0);

    auto theta = file_in_work("k4_theta.ec");
    auto projected = run_cli("project --in " + k4 + " --coloring " + lifted + " --out " + theta);
    CHECK(projected.exit_code == 0);

    auto relift = file_in_work("k4_relift.coloring");
    auto lift2 = run_cli("lift --in " + k4 + " --theta " + theta + " --out " + relift);
    CHECK(lift2.exit_code == 0);
    CHECK(slurp(relift) == slurp(lifted));

    // corrupt class count: header k=9 leaves class 9 empty
    auto broken = file_in_work("k4_broken.coloring");
    auto text = slurp(lifted);
    REQUIRE(text.rfind("k=8", 0) == 0);
    put_file(broken, "k=9" + text.substr(3));
    CHECK(run_cli("project --in " + k4 + " --coloring " + broken).exit_code == 2);

    auto gap = file_in_work("p4_gap.g6");
    auto p4 = file_in_work("p4.g6");
    run_cli("gen --family path --param 4 --out " + p4);
    auto well = run_cli("reduce --in " + p4 + " --kind wellcolored --out " + gap);
    CHECK(well.exit_code == 0);
    CHECK(lines_of(well.out)[0] == "vertices=10 edges=13");
    CHECK(run_cli("solve --in " + gap + " --invariant z").out == "3\n");

    CHECK(run_cli("reduce --in " + p4 + " --kind hardness").exit_code == 2);
    CHECK(run_cli("reduce --in " + k4 + " --kind nosuch").exit_code == 2);
    CHECK(run_cli("reduce --in " + k4 + " --kind wellcolored").exit_code == 2);
}

TEST_CASE("lift reports sources without a 3-edge-coloring") {
    auto pet = file_in_work("petersen.g6");
    put_file(pet, emit_graph6(test_util::petersen()) + "\n");
    auto r = run_cli("lift --in " + pet);
    CHECK(r.exit_code == 1);
    CHECK(r.out == "no 3-edge-coloring\n");
}

TEST_CASE("argument surface rejects malformed invocations") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("solve --invariant z").exit_code == 2);        // missing --in
    CHECK(run_cli("solve --in x --invariant z --bogus").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
