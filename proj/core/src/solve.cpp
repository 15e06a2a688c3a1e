#include "zchrom/solve.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "zchrom/validate.hpp"

namespace zchrom {

namespace {

using Clock = std::chrono::steady_clock;

enum class Mode { proper, grundy, b, z };
enum class Outcome { feasible, infeasible, aborted };

struct BudgetState {
    std::uint64_t max_nodes = 0;
    bool timed = false;
    Clock::time_point deadline;
    std::uint64_t nodes = 0;

    bool spent() const {
        if (max_nodes && nodes > max_nodes) return true;
        if (timed && (nodes & 1023) == 0 && Clock::now() > deadline) return true;
        return false;
    }
};

BudgetState make_budget(const SolveOptions& opt) {
    BudgetState b;
    b.max_nodes = opt.max_nodes;
    if (opt.max_seconds > 0) {
        b.timed = true;
        b.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(opt.max_seconds));
    }
    return b;
}

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require_nonempty(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("solver requires a graph with at least one vertex");
}

// Fixed-k decision search over class assignments.  Vertices are colored in
// a static order (degree descending, id ascending), so runs are
// deterministic.  All filters are one-sided: they only ever discard partial
// assignments that provably cannot extend to a valid coloring of the
// requested kind, and a surviving leaf is confirmed by the validators.
class Search {
public:
    Search(const Graph& g, Mode mode, int k, BudgetState& budget)
        : g_(g), budget_(budget), mode_(mode), k_(k), n_(g.vertex_count()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        color_.assign(n_, 0);
        cnt_.assign(static_cast<std::size_t>(n_) * k_, 0);
        unc_.resize(n_);
        for (int v = 0; v < n_; ++v) unc_[v] = g.degree(v);
        miss_.assign(n_, 0);
        class_size_.assign(k_ + 1, 0);
        deg_hist_.assign(g.max_degree() + 1, 0);
        for (int v = 0; v < n_; ++v) ++deg_hist_[g.degree(v)];
        remaining_ = n_;
    }

    Outcome run(Coloring* out) {
        out_ = out;
        bool found = dfs(0);
        if (aborted_) return Outcome::aborted;
        return found ? Outcome::feasible : Outcome::infeasible;
    }

private:
    std::size_t idx(int v, int c) const {
        return static_cast<std::size_t>(v) * k_ + (c - 1);
    }
    bool lower_filtered() const { return mode_ == Mode::grundy || mode_ == Mode::z; }

    bool dfs(int depth) {
        ++budget_.nodes;
        if (budget_.spent()) {
            aborted_ = true;
            return false;
        }
        if (depth == n_) return leaf();
        int v = order_[depth];
        // Classes are interchangeable only when no condition references
        // class order, so first-use canonization applies to proper and b.
        int cap = (mode_ == Mode::proper || mode_ == Mode::b)
                      ? std::min(k_, used_classes_ + 1)
                      : k_;
        for (int c = 1; c <= cap; ++c) {
            if (cnt_[idx(v, c)] != 0) continue;
            if (lower_filtered() && g_.degree(v) < c - 1) continue;
            bool ok = assign(v, c);
            if (ok && prunes_ok()) {
                if (dfs(depth + 1)) {
                    unassign(v, c);
                    return true;
                }
                if (aborted_) {
                    unassign(v, c);
                    return false;
                }
            }
            unassign(v, c);
        }
        return false;
    }

    bool leaf() {
        for (int j = 1; j <= k_; ++j)
            if (class_size_[j] == 0) return false;
        Coloring c{k_, color_};
        bool ok = false;
        switch (mode_) {
            case Mode::proper: ok = is_proper(g_, c).ok; break;
            case Mode::grundy: ok = is_grundy(g_, c).ok; break;
            case Mode::b: ok = is_b_coloring(g_, c).ok; break;
            case Mode::z: ok = is_z_coloring(g_, c).ok; break;
        }
        if (ok && out_) *out_ = std::move(c);
        return ok;
    }

    // Applies the assignment unconditionally (the caller always unassigns)
    // and reports whether some already-colored vertex is now short of
    // uncolored neighbors for its missing lower colors.
    bool assign(int v, int c) {
        color_[v] = c;
        if (++class_size_[c] == 1) {
            ++nonempty_;
            if (mode_ == Mode::proper || mode_ == Mode::b) ++used_classes_;
        }
        --remaining_;
        --deg_hist_[g_.degree(v)];
        int m = 0;
        if (lower_filtered())
            for (int i = 1; i < c; ++i)
                if (cnt_[idx(v, i)] == 0) ++m;
        miss_[v] = m;
        bool ok = true;
        for (int u : g_.neighbors(v)) {
            if (++cnt_[idx(u, c)] == 1 && lower_filtered() && color_[u] > c) --miss_[u];
            --unc_[u];
            if (lower_filtered() && color_[u] != 0 && miss_[u] > unc_[u]) ok = false;
        }
        if (lower_filtered() && m > unc_[v]) ok = false;
        return ok;
    }

    void unassign(int v, int c) {
        for (int u : g_.neighbors(v)) {
            if (--cnt_[idx(u, c)] == 0 && lower_filtered() && color_[u] > c) ++miss_[u];
            ++unc_[u];
        }
        miss_[v] = 0;
        ++deg_hist_[g_.degree(v)];
        ++remaining_;
        if (--class_size_[c] == 0) {
            --nonempty_;
            if (mode_ == Mode::proper || mode_ == Mode::b) --used_classes_;
        }
        color_[v] = 0;
    }

    bool prunes_ok() {
        if (remaining_ < k_ - nonempty_) return false;
        if (lower_filtered() && !degree_cascade_ok()) return false;
        if ((mode_ == Mode::b || mode_ == Mode::z) && !domination_alive()) return false;
        return true;
    }

    // Each still-empty class c needs a future member of degree >= c-1, and
    // distinct classes need distinct members: walking the empty classes
    // from the most demanding down, the t-th one needs at least t uncolored
    // vertices of sufficient degree.
    bool degree_cascade_ok() {
        int maxd = static_cast<int>(deg_hist_.size()) - 1;
        scratch_.assign(maxd + 2, 0);
        for (int d = maxd; d >= 0; --d) scratch_[d] = scratch_[d + 1] + deg_hist_[d];
        int t = 0;
        for (int c = k_; c >= 1; --c) {
            if (class_size_[c] > 0) continue;
            ++t;
            int need = c - 1;
            int have = need <= maxd ? scratch_[need] : 0;
            if (have < t) return false;
        }
        return true;
    }

    // A class stays alive while some vertex could still end up dominating
    // in it: either a member whose missing classes fit into its uncolored
    // neighborhood, or an uncolored vertex of degree >= k-1 that can still
    // join the class.  Classes without a live candidate kill the branch
    // (both b- and z-colorings need a dominating vertex per class).
    bool domination_alive() {
        alive_.assign(k_ + 1, 0);
        int found = 0;
        for (int v = 0; v < n_ && found < k_; ++v) {
            const int* row = &cnt_[idx(v, 1)];
            int m0 = 0;
            for (int i = 0; i < k_; ++i)
                if (row[i] == 0) ++m0;
            if (color_[v] != 0) {
                if (m0 - 1 <= unc_[v] && !alive_[color_[v]]) {
                    alive_[color_[v]] = 1;
                    ++found;
                }
            } else {
                if (g_.degree(v) < k_ - 1 || m0 - 1 > unc_[v]) continue;
                for (int j = 1; j <= k_; ++j)
                    if (!alive_[j] && row[j - 1] == 0) {
                        alive_[j] = 1;
                        ++found;
                    }
            }
        }
        return found == k_;
    }

    const Graph& g_;
    BudgetState& budget_;
    Mode mode_;
    int k_;
    int n_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<int> cnt_;
    std::vector<int> unc_;
    std::vector<int> miss_;
    std::vector<int> class_size_;
    std::vector<int> deg_hist_;
    std::vector<int> scratch_;
    std::vector<char> alive_;
    int remaining_ = 0;
    int nonempty_ = 0;
    int used_classes_ = 0;
    Coloring* out_ = nullptr;
    bool aborted_ = false;
};

Outcome decide(const Graph& g, Mode mode, int k, BudgetState& budget, Coloring* out,
               std::vector<DecisionRecord>* log) {
    std::uint64_t before = budget.nodes;
    Outcome o;
    if (k > g.vertex_count()) {
        o = Outcome::infeasible;  // every class must be nonempty
    } else {
        Search s(g, mode, k, budget);
        o = s.run(out);
    }
    if (log)
        log->push_back({k, o == Outcome::feasible ? 1 : (o == Outcome::infeasible ? -1 : 0),
                        budget.nodes - before});
    return o;
}

std::optional<int> upward_first_feasible(const Graph& g, Mode mode, BudgetState& budget,
                                         Coloring* out, std::vector<DecisionRecord>* log) {
    for (int k = 1; k <= g.vertex_count(); ++k) {
        Outcome o = decide(g, mode, k, budget, out, log);
        if (o == Outcome::aborted) return std::nullopt;
        if (o == Outcome::feasible) return k;
    }
    return 0;  // unreachable: k = n is always proper
}

std::optional<int> downward_first_feasible(const Graph& g, Mode mode, int ub,
                                           BudgetState& budget, Coloring* out,
                                           std::vector<DecisionRecord>* log) {
    for (int k = std::min(ub, g.vertex_count()); k >= 1; --k) {
        Outcome o = decide(g, mode, k, budget, out, log);
        if (o == Outcome::aborted) return std::nullopt;
        if (o == Outcome::feasible) return k;
    }
    return 0;  // no feasible class count at all
}

// Degree-rank bound: the largest k such that at least k vertices have
// degree >= k-1.  A b-coloring with k classes needs k dominating vertices
// of degree >= k-1, so this caps the downward search.
int degree_rank_bound(const Graph& g) {
    std::vector<int> degs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
    std::sort(degs.rbegin(), degs.rend());
    int m = 1;
    for (int i = 1; i <= g.vertex_count(); ++i)
        if (degs[i - 1] >= i - 1) m = i;
    return m;
}

}  // namespace

SolveResult exact_chromatic(const Graph& g, const SolveOptions& opt) {
    require_nonempty(g);
    auto t0 = Clock::now();
    BudgetState budget = make_budget(opt);
    SolveResult r;
    Coloring w;
    auto value = upward_first_feasible(g, Mode::proper, budget, &w, &r.decisions);
    if (!value) {
        r.status = SolveStatus::budget_exhausted;
    } else {
        r.value = *value;
        r.witness = std::move(w);
    }
    r.nodes = budget.nodes;
    r.seconds = elapsed(t0);
    return r;
}

SolveResult exact_grundy(const Graph& g, const SolveOptions& opt) {
    require_nonempty(g);
    auto t0 = Clock::now();
    BudgetState budget = make_budget(opt);
    SolveResult r;
    Coloring w;
    int ub = std::min(g.max_degree() + 1, g.vertex_count());
    auto value = downward_first_feasible(g, Mode::grundy, ub, budget, &w, &r.decisions);
    if (!value) {
        r.status = SolveStatus::budget_exhausted;
    } else {
        r.value = *value;
        r.witness = std::move(w);
    }
    r.nodes = budget.nodes;
    r.seconds = elapsed(t0);
    return r;
}

SolveResult exact_b(const Graph& g, const SolveOptions& opt) {
    require_nonempty(g);
    auto t0 = Clock::now();
    BudgetState budget = make_budget(opt);
    SolveResult r;
    Coloring w;
    auto value =
        downward_first_feasible(g, Mode::b, degree_rank_bound(g), budget, &w, &r.decisions);
    if (!value) {
        r.status = SolveStatus::budget_exhausted;
    } else {
        r.value = *value;
        r.witness = std::move(w);
    }
    r.nodes = budget.nodes;
    r.seconds = elapsed(t0);
    return r;
}

SolveResult exact_z(const Graph& g, const SolveOptions& opt) {
    require_nonempty(g);
    auto t0 = Clock::now();
    BudgetState budget = make_budget(opt);
    SolveResult r;

    auto finish_exhausted = [&] {
        r.status = SolveStatus::budget_exhausted;
        r.nodes = budget.nodes;
        r.seconds = elapsed(t0);
        return r;
    };

    auto gamma = downward_first_feasible(
        g, Mode::grundy, std::min(g.max_degree() + 1, g.vertex_count()), budget, nullptr, nullptr);
    if (!gamma) return finish_exhausted();
    auto b = downward_first_feasible(g, Mode::b, degree_rank_bound(g), budget, nullptr, nullptr);
    if (!b) return finish_exhausted();

    Coloring w;
    auto value =
        downward_first_feasible(g, Mode::z, std::min(*gamma, *b), budget, &w, &r.decisions);
    if (!value) return finish_exhausted();
    r.value = *value;
    if (*value == 0) {
        r.chi_anomaly = true;  // no z-coloring at any class count
    } else {
        r.witness = std::move(w);
        // The chain chi <= z is checked, not assumed: a z-coloring with
        // exactly chi colors should exist, and its absence is flagged.
        auto chi = upward_first_feasible(g, Mode::proper, budget, nullptr, nullptr);
        if (!chi) return finish_exhausted();
        if (*chi != r.value) {
            Outcome probe = decide(g, Mode::z, *chi, budget, nullptr, &r.decisions);
            if (probe == Outcome::aborted) return finish_exhausted();
            r.chi_anomaly = probe == Outcome::infeasible;
        }
    }
    r.nodes = budget.nodes;
    r.seconds = elapsed(t0);
    return r;
}

SpectrumResult z_spectrum(const Graph& g, const SolveOptions& opt) {
    require_nonempty(g);
    auto t0 = Clock::now();
    BudgetState budget = make_budget(opt);
    SpectrumResult r;

    auto gamma = downward_first_feasible(
        g, Mode::grundy, std::min(g.max_degree() + 1, g.vertex_count()), budget, nullptr, nullptr);
    auto b = gamma ? downward_first_feasible(g, Mode::b, degree_rank_bound(g), budget, nullptr,
                                             nullptr)
                   : std::nullopt;
    if (!gamma || !b) {
        r.status = SolveStatus::budget_exhausted;
    } else {
        int ub = std::min(*gamma, *b);
        for (int k = 1; k <= ub; ++k) {
            Outcome o = decide(g, Mode::z, k, budget, nullptr, nullptr);
            if (o == Outcome::aborted) {
                r.status = SolveStatus::budget_exhausted;
                break;
            }
            if (o == Outcome::feasible) r.achievable.push_back(k);
        }
    }
    r.nodes = budget.nodes;
    r.seconds = elapsed(t0);
    return r;
}

namespace {

bool edge_colorings_rec(const Graph& g, const std::vector<std::vector<int>>& conflicts,
                        std::vector<int>& col, std::size_t i, std::size_t limit,
                        std::vector<EdgeColoring>& out) {
    if (i == col.size()) {
        out.push_back(EdgeColoring{col});
        return out.size() >= limit;
    }
    for (int c = 1; c <= 3; ++c) {
        bool ok = true;
        for (int j : conflicts[i])
            if (static_cast<std::size_t>(j) < i && col[j] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        col[i] = c;
        if (edge_colorings_rec(g, conflicts, col, i + 1, limit, out)) return true;
        col[i] = 0;
    }
    return false;
}

std::vector<std::vector<int>> edge_conflicts(const Graph& g) {
    std::vector<std::vector<int>> at(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        at[g.edges()[i].first].push_back(i);
        at[g.edges()[i].second].push_back(i);
    }
    std::vector<std::vector<int>> conflicts(g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int a : at[v])
            for (int b : at[v])
                if (a != b) conflicts[a].push_back(b);
    return conflicts;
}

}  // namespace

std::vector<EdgeColoring> enumerate_three_edge_colorings(const Graph& g, std::size_t limit) {
    auto s = graph_stats(g);
    if (!s.regular || *s.regular != 3)
        throw std::invalid_argument("three_edge_coloring requires a 3-regular graph");
    std::vector<EdgeColoring> out;
    if (limit == 0) return out;
    std::vector<int> col(g.edge_count(), 0);
    auto conflicts = edge_conflicts(g);
    edge_colorings_rec(g, conflicts, col, 0, limit, out);
    return out;
}

std::optional<EdgeColoring> three_edge_coloring(const Graph& g) {
    auto found = enumerate_three_edge_colorings(g, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

OracleResult brute_force_oracle(const Graph& g) {
    int n = g.vertex_count();
    require_nonempty(g);
    if (n > 10)
        throw std::invalid_argument("brute_force_oracle: graph too large (max 10 vertices)");

    OracleResult r;
    int ub = std::min(g.max_degree() + 1, n);
    std::vector<char> used;
    for (int k = 1; k <= ub; ++k) {
        bool fp = false, fg = false, fb = false, fz = false;
        std::vector<int> a(n, 1);
        for (;;) {
            used.assign(k + 1, 0);
            int distinct = 0;
            for (int v = 0; v < n; ++v)
                if (!used[a[v]]) {
                    used[a[v]] = 1;
                    ++distinct;
                }
            if (distinct == k) {
                bool proper = true;
                for (auto [u, v] : g.edges())
                    if (a[u] == a[v]) {
                        proper = false;
                        break;
                    }
                if (proper) {
                    fp = true;
                    Coloring c{k, a};
                    if (!fg && is_grundy(g, c).ok) fg = true;
                    if (!fb && is_b_coloring(g, c).ok) fb = true;
                    if (!fz && is_z_coloring(g, c).ok) fz = true;
                }
            }
            int i = 0;
            while (i < n && a[i] == k) a[i++] = 1;
            if (i == n) break;
            ++a[i];
        }
        if (fp && r.chi == 0) r.chi = k;
        if (fg) r.grundy = k;
        if (fb) r.b = k;
        if (fz) r.z = k;
    }

    // Second, structurally unrelated route to the grundy value: greedy
    // coloring along every vertex ordering.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> col(n);
    int by_orders = 0;
    do {
        std::fill(col.begin(), col.end(), 0);
        int high = 0;
        for (int v : perm) {
            std::vector<char> taken(n + 2, 0);
            for (int u : g.neighbors(v))
                if (col[u]) taken[col[u]] = 1;
            int c = 1;
            while (taken[c]) ++c;
            col[v] = c;
            high = std::max(high, c);
        }
        by_orders = std::max(by_orders, high);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (by_orders != r.grundy)
        throw std::logic_error("oracle disagreement: greedy orderings give " +
                               std::to_string(by_orders) + ", enumeration gives " +
                               std::to_string(r.grundy));
    return r;
}

bool verify_tree_continuity(const Graph& g) {
    require_nonempty(g);
    if (!graph_stats(g).forest)
        throw std::invalid_argument("verify_tree_continuity requires an acyclic graph");
    int chi = exact_chromatic(g).value;
    int z = exact_z(g).value;
    auto spec = z_spectrum(g);
    for (int k = chi; k <= z; ++k)
        if (!std::binary_search(spec.achievable.begin(), spec.achievable.end(), k)) return false;
    return true;
}

bool verify_monotonicity(const Graph& g) {
    require_nonempty(g);
    if (!graph_stats(g).forest)
        throw std::invalid_argument("verify_monotonicity requires an acyclic graph");
    if (g.vertex_count() == 1) return true;
    int z0 = exact_z(g).value;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (exact_z(remove_vertex(g, v)).value > z0) return false;
    return true;
}

}  // namespace zchrom
