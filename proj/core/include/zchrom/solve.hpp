#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zchrom/coloring.hpp"
#include "zchrom/graph.hpp"

namespace zchrom {

// Node and wall-clock budgets for the exact searches; zero means
// unlimited.  A budgeted run that cannot finish reports
// SolveStatus::budget_exhausted, which is distinct from "infeasible".
struct SolveOptions {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
};

enum class SolveStatus { solved, budget_exhausted };

// One fixed-k decision inside a solver run: +1 feasible, -1 infeasible,
// 0 aborted on budget.
struct DecisionRecord {
    int colors = 0;
    int outcome = 0;
    std::uint64_t nodes = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::solved;
    int value = 0;                    // meaningful only when solved
    std::optional<Coloring> witness;  // optimal coloring of the right kind
    std::uint64_t nodes = 0;          // total search nodes across decisions
    double seconds = 0.0;
    std::vector<DecisionRecord> decisions;
    // Set by exact_z when no z-coloring with exactly chi(g) colors exists;
    // such a graph would contradict the expected invariant chain and
    // deserves a close look.
    bool chi_anomaly = false;
};

struct SpectrumResult {
    SolveStatus status = SolveStatus::solved;
    std::vector<int> achievable;  // ascending class counts admitting a z-coloring
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// Exact invariants by branch-and-bound over class assignments.  Colors are
// assigned vertex by vertex in a fixed order (descending degree, ascending
// id), under properness plus per-kind feasibility filters; searches are
// deterministic and single-threaded.  chi is found upward from k = 1; the
// maximization solvers search downward from a sound upper bound (Delta+1
// for grundy, the degree-rank bound for b, min(gamma, b) for z) and stop
// at the first feasible k, so maximality is certified by the recorded
// infeasible run above it.
SolveResult exact_chromatic(const Graph& g, const SolveOptions& opt = {});
SolveResult exact_grundy(const Graph& g, const SolveOptions& opt = {});
SolveResult exact_b(const Graph& g, const SolveOptions& opt = {});
SolveResult exact_z(const Graph& g, const SolveOptions& opt = {});

// Every class count in 1..min(gamma, b) admitting a z-coloring.  Membership
// of chi is reported, never assumed; gaps are legitimate.
SpectrumResult z_spectrum(const Graph& g, const SolveOptions& opt = {});

// Proper 3-edge-coloring of a cubic graph by exhaustive backtracking over
// edges, or nullopt when none exists.  Throws unless g is 3-regular.
std::optional<EdgeColoring> three_edge_coloring(const Graph& g);

// All proper 3-edge-colorings of a cubic graph, lexicographically by edge
// color vector, capped at `limit`.
std::vector<EdgeColoring> enumerate_three_edge_colorings(const Graph& g, std::size_t limit);

// Independent ground truth for graphs with at most 10 vertices: enumerates
// every surjective color assignment for each k up to Delta+1 and applies
// the validators directly, sharing no pruning with the solvers above.
// The grundy value is additionally recomputed from scratch by greedy
// coloring along every vertex ordering; disagreement throws.
struct OracleResult {
    int chi = 0;
    int grundy = 0;
    int b = 0;
    int z = 0;
};

OracleResult brute_force_oracle(const Graph& g);

// Checks z-continuity of an acyclic graph: every class count between
// chi(g) and z(g) is achievable.  Throws on a graph with a cycle.
bool verify_tree_continuity(const Graph& g);

// Checks that deleting any single vertex never increases the z-value.
// Throws on a graph with a cycle.
bool verify_monotonicity(const Graph& g);

}  // namespace zchrom
