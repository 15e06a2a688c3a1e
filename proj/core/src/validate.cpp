#include "zchrom/validate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zchrom {

std::string Violation::to_string() const {
    std::ostringstream out;
    out << kind;
    if (vertex >= 0) out << " vertex=" << vertex;
    if (other >= 0) out << " other=" << other;
    if (color >= 0) out << " color=" << color;
    return out.str();
}

CheckResult is_proper(const Graph& g, const Coloring& c) {
    c.check_well_formed(g);
    for (auto [u, v] : g.edges()) {
        if (c.colors[u] == c.colors[v]) {
            return {false, Violation{"monochromatic-edge", u, v, c.colors[u]}};
        }
    }
    return {true, std::nullopt};
}

namespace {

void require_proper(const Graph& g, const Coloring& c, const char* who) {
    auto p = is_proper(g, c);
    if (!p.ok)
        throw std::invalid_argument(std::string(who) + " requires a proper coloring; " +
                                    p.violation->to_string());
}

// grundy_defect scans vertices in ascending id and reports the first
// vertex whose neighborhood misses one of its lower colors.
std::optional<Violation> grundy_defect(const Graph& g, const Coloring& c) {
    std::vector<int> stamp(c.k + 1, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int cv = c.colors[v];
        if (cv == 1) continue;
        for (int u : g.neighbors(v)) stamp[c.colors[u]] = v;
        for (int i = 1; i < cv; ++i)
            if (stamp[i] != v) return Violation{"missing-lower-color", v, -1, i};
    }
    return std::nullopt;
}

// dominating[v] = v has at least one neighbor in every class but its own.
std::vector<char> dominating_flags(const Graph& g, const Coloring& c) {
    std::vector<char> dom(g.vertex_count(), 0);
    std::vector<int> stamp(c.k + 1, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int covered = 0;
        for (int u : g.neighbors(v)) {
            int cu = c.colors[u];
            if (stamp[cu] != v && cu != c.colors[v]) {
                stamp[cu] = v;
                ++covered;
            }
        }
        dom[v] = covered == c.k - 1;
    }
    return dom;
}

}  // namespace

CheckResult is_grundy(const Graph& g, const Coloring& c) {
    require_proper(g, c, "is_grundy");
    if (auto d = grundy_defect(g, c)) return {false, d};
    return {true, std::nullopt};
}

std::vector<int> dominating_vertices(const Graph& g, const Coloring& c, int j) {
    require_proper(g, c, "dominating_vertices");
    if (j < 1 || j > c.k)
        throw std::invalid_argument("dominating_vertices: class " + std::to_string(j) +
                                    " outside 1.." + std::to_string(c.k));
    auto dom = dominating_flags(g, c);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] == j && dom[v]) out.push_back(v);
    return out;
}

BCheckResult is_b_coloring(const Graph& g, const Coloring& c) {
    require_proper(g, c, "is_b_coloring");
    auto dom = dominating_flags(g, c);
    std::vector<char> has(c.k + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dom[v]) has[c.colors[v]] = 1;
    for (int j = 1; j <= c.k; ++j)
        if (!has[j]) return {false, Violation{"class-without-dominating-vertex", -1, -1, j}};
    return {true, std::nullopt};
}

ZCheckResult is_z_coloring(const Graph& g, const Coloring& c) {
    require_proper(g, c, "is_z_coloring");
    if (auto d = grundy_defect(g, c)) return {false, std::nullopt, d};

    int k = c.k;
    if (k == 1) {
        // Edgeless by properness; the witness conditions are vacuous.
        ZCertificate cert;
        cert.witness = {0};
        cert.nice_vertex = 0;
        return {true, cert, std::nullopt};
    }

    auto dom = dominating_flags(g, c);
    // Scan candidate nice vertices in ascending id; for each color pick the
    // smallest-id dominating neighbor, so the certificate is deterministic.
    std::vector<int> pick(k + 1, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.colors[v] != k) continue;
        std::fill(pick.begin(), pick.end(), -1);
        int covered = 0;
        for (int u : g.neighbors(v)) {
            int cu = c.colors[u];
            if (cu == k || !dom[u]) continue;
            if (pick[cu] == -1) {
                pick[cu] = u;
                ++covered;
            } else if (u < pick[cu]) {
                pick[cu] = u;
            }
        }
        if (covered == k - 1) {
            ZCertificate cert;
            cert.witness.resize(k);
            for (int j = 1; j < k; ++j) cert.witness[j - 1] = pick[j];
            cert.witness[k - 1] = v;
            cert.nice_vertex = v;
            return {true, cert, std::nullopt};
        }
    }
    return {false, std::nullopt, Violation{"no-witness-tuple", -1, -1, k}};
}

bool certificate_valid(const Graph& g, const Coloring& c, const ZCertificate& cert) {
    try {
        c.check_well_formed(g);
    } catch (const std::invalid_argument&) {
        return false;
    }
    int k = c.k;
    if (static_cast<int>(cert.witness.size()) != k) return false;
    if (cert.nice_vertex != cert.witness[k - 1]) return false;
    for (int j = 1; j <= k; ++j) {
        int u = cert.witness[j - 1];
        if (u < 0 || u >= g.vertex_count() || c.colors[u] != j) return false;
    }
    // Properness and the greedy condition, from scratch.
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> seen(k + 1, 0);
        for (int u : g.neighbors(v)) seen[c.colors[u]] = 1;
        for (int i = 1; i < c.colors[v]; ++i)
            if (!seen[i]) return false;
    }
    // The nice vertex is adjacent to every other witness vertex.
    for (int j = 1; j < k; ++j)
        if (!g.adjacent(cert.nice_vertex, cert.witness[j - 1])) return false;
    // Every witness vertex has a neighbor in every other class.
    for (int j = 1; j <= k; ++j) {
        int u = cert.witness[j - 1];
        std::vector<char> seen(k + 1, 0);
        for (int w : g.neighbors(u)) seen[c.colors[w]] = 1;
        for (int i = 1; i <= k; ++i)
            if (i != j && !seen[i]) return false;
    }
    return true;
}

ValidationReport validate_all(const Graph& g, const Coloring& c) {
    ValidationReport r;
    auto p = is_proper(g, c);
    if (!p.ok) {
        r.violation = p.violation;
        return r;
    }
    r.proper = true;
    auto gr = is_grundy(g, c);
    r.grundy = gr.ok;
    auto b = is_b_coloring(g, c);
    r.b = b.ok;
    auto z = is_z_coloring(g, c);
    r.z = z.ok;
    r.certificate = z.certificate;
    if (!z.ok)
        r.violation = z.violation;
    else if (!gr.ok)
        r.violation = gr.violation;
    else if (!b.ok)
        r.violation = b.violation;
    return r;
}

std::string emit_certificate(const Coloring& c, const ZCertificate& cert) {
    std::ostringstream out;
    out << "{\"k\": " << c.k << ", \"witness\": [";
    for (std::size_t i = 0; i < cert.witness.size(); ++i) {
        if (i > 0) out << ", ";
        out << cert.witness[i];
    }
    out << "], \"nice_vertex\": " << cert.nice_vertex << "}";
    return out.str();
}

}  // namespace zchrom
