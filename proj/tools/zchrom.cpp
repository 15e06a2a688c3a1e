#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "zchrom/coloring.hpp"
#include "zchrom/families.hpp"
#include "zchrom/graph.hpp"
#include "zchrom/graph6.hpp"
#include "zchrom/reduction.hpp"
#include "zchrom/roles.hpp"
#include "zchrom/solve.hpp"
#include "zchrom/validate.hpp"

namespace {

using namespace zchrom;

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kInputError = 2;
constexpr int kBudgetExhausted = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

struct Generated {
    Graph graph;
    RoleMap roles;
    bool has_roles = false;
};

Generated make_family(const std::string& family, int p) {
    if (family == "gn") {
        auto inst = build_gn(p);
        return {std::move(inst.graph), std::move(inst.roles), true};
    }
    if (family == "atom") {
        auto inst = build_tree_atom(p);
        return {std::move(inst.graph), std::move(inst.roles), true};
    }
    if (family == "path") return {path_graph(p), {}, false};
    if (family == "cycle") return {cycle_graph(p), {}, false};
    if (family == "complete") return {complete_graph(p), {}, false};
    if (family == "star") return {star_graph(p), {}, false};
    if (family == "matched_minus") return {matched_minus(p), {}, false};
    throw std::invalid_argument("unknown family: " + family);
}

int run_gen(const std::string& family, int param, const std::string& out) {
    auto gen = make_family(family, param);
    emit(out, emit_graph6(gen.graph) + "\n");
    if (gen.has_roles && !out.empty()) write_file(out + ".roles", emit_roles(gen.roles));
    return kOk;
}

void report_run(const char* what, std::uint64_t nodes, double seconds) {
    std::cerr << what << ": nodes=" << nodes << " seconds=" << seconds << "\n";
}

int run_solve(const std::string& in, const std::string& invariant, const SolveOptions& opt,
              const std::string& out, bool want_certificate) {
    auto g = parse_graph6(read_file(in));

    if (invariant == "zspectrum") {
        auto r = z_spectrum(g, opt);
        report_run("zspectrum", r.nodes, r.seconds);
        if (r.status == SolveStatus::budget_exhausted) {
            std::cerr << "budget exhausted\n";
            return kBudgetExhausted;
        }
        std::ostringstream line;
        for (std::size_t i = 0; i < r.achievable.size(); ++i) {
            if (i > 0) line << ' ';
            line << r.achievable[i];
        }
        std::cout << line.str() << "\n";
        return kOk;
    }

    SolveResult r;
    if (invariant == "chi")
        r = exact_chromatic(g, opt);
    else if (invariant == "grundy")
        r = exact_grundy(g, opt);
    else if (invariant == "b")
        r = exact_b(g, opt);
    else if (invariant == "z")
        r = exact_z(g, opt);
    else
        throw std::invalid_argument("unknown invariant: " + invariant);

    report_run(invariant.c_str(), r.nodes, r.seconds);
    if (r.status == SolveStatus::budget_exhausted) {
        std::cerr << "budget exhausted\n";
        return kBudgetExhausted;
    }
    std::cout << r.value << "\n";
    if (want_certificate && invariant == "z" && r.witness) {
        auto z = is_z_coloring(g, *r.witness);
        if (z.ok && z.certificate)
            std::cout << emit_certificate(*r.witness, *z.certificate) << "\n";
    }
    if (r.chi_anomaly)
        std::cerr << "warning: no z-coloring with exactly the chromatic number of classes\n";
    if (!out.empty() && r.witness) write_file(out, emit_coloring(*r.witness));
    return kOk;
}

int run_validate(const std::string& in, const std::string& coloring_path,
                 const std::string& kind) {
    auto g = parse_graph6(read_file(in));
    auto c = parse_coloring(read_file(coloring_path));
    c.check_well_formed(g);

    auto p = is_proper(g, c);
    if (!p.ok) {
        std::cout << "invalid: " << p.violation->to_string() << "\n";
        return kPropertyFails;
    }
    if (kind == "proper") {
        std::cout << "valid\n";
        return kOk;
    }
    if (kind == "grundy" || kind == "b") {
        auto gr = kind == "grundy" ? is_grundy(g, c) : CheckResult{};
        auto bc = kind == "b" ? is_b_coloring(g, c) : BCheckResult{};
        bool ok = kind == "grundy" ? gr.ok : bc.ok;
        if (!ok) {
            const auto& v = kind == "grundy" ? gr.violation : bc.violation;
            std::cout << "invalid: " << v->to_string() << "\n";
            return kPropertyFails;
        }
        std::cout << "valid\n";
        return kOk;
    }
    if (kind == "z") {
        auto r = is_z_coloring(g, c);
        if (!r.ok) {
            std::cout << "invalid: " << r.violation->to_string() << "\n";
            return kPropertyFails;
        }
        std::cout << emit_certificate(c, *r.certificate) << "\n";
        return kOk;
    }
    throw std::invalid_argument("unknown kind: " + kind);
}

int run_reduce(const std::string& in, const std::string& kind, const std::string& out) {
    auto g = parse_graph6(read_file(in));
    if (kind == "hardness") {
        auto inst = build_hardness_instance(g);
        if (!out.empty()) {
            write_file(out, emit_graph6(inst.graph) + "\n");
            write_file(out + ".roles", emit_roles(inst.roles));
        }
        std::cout << "vertices=" << inst.graph.vertex_count()
                  << " edges=" << inst.graph.edge_count() << "\n";
        auto facts = verify_structure_facts(inst);
        for (const auto& f : facts.facts)
            std::cout << (f.holds ? "ok   " : "FAIL ") << f.label << "\n";
        return facts.all_hold() ? kOk : kPropertyFails;
    }
    if (kind == "wellcolored") {
        auto inst = build_wellcolored_instance(g);
        if (!out.empty()) {
            write_file(out, emit_graph6(inst.graph) + "\n");
            write_file(out + ".roles", emit_roles(inst.roles));
        }
        std::cout << "vertices=" << inst.graph.vertex_count()
                  << " edges=" << inst.graph.edge_count() << "\n";
        return kOk;
    }
    throw std::invalid_argument("unknown reduction kind: " + kind);
}

int run_lift(const std::string& in, const std::string& theta_path, const std::string& out) {
    auto src = parse_graph6(read_file(in));
    auto inst = build_hardness_instance(src);

    EdgeColoring theta;
    if (!theta_path.empty()) {
        theta = parse_edge_coloring(src, read_file(theta_path));
    } else {
        auto found = three_edge_coloring(src);
        if (!found) {
            std::cout << "no 3-edge-coloring\n";
            return kPropertyFails;
        }
        theta = *found;
    }

    auto c = lift_edge_coloring(inst, theta);
    auto z = is_z_coloring(inst.graph, c);
    if (!z.ok) throw contract_error("lifted coloring failed validation: " +
                                    z.violation->to_string());
    std::cout << c.k << "\n";
    if (!out.empty()) write_file(out, emit_coloring(c));
    return kOk;
}

int run_project(const std::string& in, const std::string& coloring_path,
                const std::string& out) {
    auto src = parse_graph6(read_file(in));
    auto inst = build_hardness_instance(src);
    auto c = parse_coloring(read_file(coloring_path));
    auto theta = project_z_coloring(inst, c);
    emit(out, emit_edge_coloring(src, theta));
    return kOk;
}

std::pair<int, int> parse_range(const std::string& range) {
    auto dots = range.find("..");
    int lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(range);
        } else {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range: " + range);
    }
    if (lo > hi) throw std::invalid_argument("empty range: " + range);
    return {lo, hi};
}

struct SweepRow {
    bool exhausted = false;
    std::string csv;
};

SweepRow sweep_row(const std::string& family, int p, const SolveOptions& opt) {
    auto gen = make_family(family, p);
    const auto& g = gen.graph;
    auto chi = exact_chromatic(g, opt);
    auto gamma = exact_grundy(g, opt);
    auto b = exact_b(g, opt);
    auto z = exact_z(g, opt);
    if (chi.status != SolveStatus::solved || gamma.status != SolveStatus::solved ||
        b.status != SolveStatus::solved || z.status != SolveStatus::solved)
        return {true, {}};
    std::ostringstream row;
    row << p << ',' << g.vertex_count() << ',' << g.max_degree() << ',' << chi.value << ','
        << gamma.value << ',' << b.value << ',' << z.value << '\n';
    return {false, row.str()};
}

bool known_family(const std::string& family) {
    for (const char* name : {"gn", "atom", "path", "cycle", "complete", "star", "matched_minus"})
        if (family == name) return true;
    return false;
}

int run_sweep(const std::string& family, const std::string& range, const std::string& out,
              bool deterministic, const SolveOptions& opt) {
    if (!known_family(family)) throw std::invalid_argument("unknown family: " + family);
    auto [lo, hi] = parse_range(range);

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(hi - lo + 1));
    if (deterministic) {
        for (int p = lo; p <= hi; ++p) rows.push_back(sweep_row(family, p, opt));
    } else {
        std::vector<std::future<SweepRow>> futures;
        for (int p = lo; p <= hi; ++p)
            futures.push_back(std::async(std::launch::async, sweep_row, family, p, opt));
        for (auto& f : futures) rows.push_back(f.get());
    }

    std::ostringstream csv;
    csv << "param,vertices,max_degree,chi,gamma,b,z\n";
    for (const auto& r : rows) {
        if (r.exhausted) {
            std::cerr << "budget exhausted\n";
            return kBudgetExhausted;
        }
        csv << r.csv;
    }
    emit(out, csv.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for z-colorings of graphs"};
    app.require_subcommand(1);

    std::string in, out, coloring, theta, invariant, kind, family, range;
    std::string deterministic = "on";
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0.0;
    bool certificate = false;
    int param = 0;

    auto* gen = app.add_subcommand("gen", "generate a family member as graph6");
    gen->add_option("--family", family, "gn|atom|path|cycle|complete|star|matched_minus")
        ->required();
    gen->add_option("--param", param, "family parameter")->required();
    gen->add_option("--out", out, "output file (default stdout); role sidecar at <out>.roles");

    auto* solve = app.add_subcommand("solve", "compute an exact invariant");
    solve->add_option("--in", in, "graph6 input file")->required();
    solve->add_option("--invariant", invariant, "chi|grundy|b|z|zspectrum")->required();
    solve->add_option("--out", out, "witness coloring output file");
    solve->add_option("--budget-nodes", budget_nodes, "node budget (0 = unlimited)");
    solve->add_option("--budget-seconds", budget_seconds, "time budget (0 = unlimited)");
    solve->add_flag("--certificate", certificate, "print the witness tuple for z");

    auto* validate = app.add_subcommand("validate", "check a coloring file against a graph");
    validate->add_option("--in", in, "graph6 input file")->required();
    validate->add_option("--coloring", coloring, "coloring file")->required();
    validate->add_option("--kind", kind, "proper|grundy|b|z")->required();

    auto* reduce = app.add_subcommand("reduce", "build a decision or gap instance");
    reduce->add_option("--in", in, "graph6 source file")->required();
    reduce->add_option("--kind", kind, "hardness|wellcolored")->required();
    reduce->add_option("--out", out, "instance output file; role sidecar at <out>.roles");

    auto* lift = app.add_subcommand("lift", "lift a 3-edge-coloring onto the decision instance");
    lift->add_option("--in", in, "graph6 source file (cubic)")->required();
    lift->add_option("--theta", theta, "edge coloring file (solved if omitted)");
    lift->add_option("--out", out, "lifted coloring output file");

    auto* project = app.add_subcommand("project", "read an edge coloring off an instance coloring");
    project->add_option("--in", in, "graph6 source file (cubic)")->required();
    project->add_option("--coloring", coloring, "instance coloring file")->required();
    project->add_option("--out", out, "edge coloring output file (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "tabulate invariants over a family range");
    sweep->add_option("--family", family, "gn|atom|path|cycle|complete|star|matched_minus")
        ->required();
    sweep->add_option("--range", range, "parameter range a..b")->required();
    sweep->add_option("--out", out, "CSV output file (default stdout)");
    sweep->add_option("--budget-nodes", budget_nodes, "per-solver node budget");
    sweep->add_option("--budget-seconds", budget_seconds, "per-solver time budget");
    sweep->add_option("--deterministic", deterministic,
                      "on|off; off may solve rows concurrently")
        ->check(CLI::IsMember({"on", "off"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    SolveOptions opt{budget_nodes, budget_seconds};
    try {
        if (*gen) return run_gen(family, param, out);
        if (*solve) return run_solve(in, invariant, opt, out, certificate);
        if (*validate) return run_validate(in, coloring, kind);
        if (*reduce) return run_reduce(in, kind, out);
        if (*lift) return run_lift(in, theta, out);
        if (*project) return run_project(in, coloring, out);
        if (*sweep) return run_sweep(family, range, out, deterministic == "on", opt);
    } catch (const contract_error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return kPropertyFails;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
