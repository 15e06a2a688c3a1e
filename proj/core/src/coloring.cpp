#include "zchrom/coloring.hpp"

#include <sstream>
#include <stdexcept>

#include "zchrom/graph6.hpp"

namespace zchrom {

void Coloring::check_well_formed(const Graph& g) const {
    if (k < 1) throw std::invalid_argument("coloring needs k >= 1");
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw std::invalid_argument("partial coloring: " + std::to_string(colors.size()) +
                                    " colored vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    std::vector<int> count(k, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = colors[v];
        if (c < 1 || c > k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                        std::to_string(c) + " outside 1.." + std::to_string(k));
        ++count[c - 1];
    }
    for (int j = 0; j < k; ++j)
        if (count[j] == 0)
            throw std::invalid_argument("color class " + std::to_string(j + 1) + " is empty");
}

std::vector<std::vector<int>> Coloring::classes() const {
    std::vector<std::vector<int>> cls(k);
    for (int v = 0; v < static_cast<int>(colors.size()); ++v)
        if (colors[v] >= 1 && colors[v] <= k) cls[colors[v] - 1].push_back(v);
    return cls;
}

std::string emit_coloring(const Coloring& c) {
    std::ostringstream out;
    out << "k=" << c.k << '\n';
    for (int v = 0; v < static_cast<int>(c.colors.size()); ++v)
        out << v << ' ' << c.colors[v] << '\n';
    return out.str();
}

Coloring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("k=", 0) != 0)
        throw parse_error("coloring file must start with a k=<int> header");
    Coloring c;
    try {
        c.k = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        throw parse_error("bad coloring header: " + line);
    }
    std::vector<std::pair<int, int>> entries;
    int max_v = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int v, col;
        if (!(ls >> v >> col)) throw parse_error("bad coloring line: " + line);
        std::string extra;
        if (ls >> extra) throw parse_error("trailing tokens in coloring line: " + line);
        if (v < 0) throw parse_error("negative vertex in coloring file");
        entries.emplace_back(v, col);
        max_v = std::max(max_v, v);
    }
    c.colors.assign(max_v + 1, 0);
    std::vector<bool> seen(max_v + 1, false);
    for (auto [v, col] : entries) {
        if (seen[v]) throw parse_error("duplicate vertex in coloring file");
        seen[v] = true;
        c.colors[v] = col;
    }
    for (int v = 0; v <= max_v; ++v)
        if (!seen[v]) throw parse_error("missing vertex " + std::to_string(v) + " in coloring file");
    return c;
}

std::string emit_edge_coloring(const Graph& g, const EdgeColoring& c) {
    if (c.colors.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("edge coloring size mismatch");
    std::ostringstream out;
    for (int i = 0; i < g.edge_count(); ++i)
        out << g.edges()[i].first << ' ' << g.edges()[i].second << ' ' << c.colors[i] << '\n';
    return out.str();
}

EdgeColoring parse_edge_coloring(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    EdgeColoring c;
    c.colors.assign(g.edge_count(), 0);
    std::vector<bool> seen(g.edge_count(), false);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v, col;
        if (!(ls >> u >> v >> col)) throw parse_error("bad edge coloring line: " + line);
        std::string extra;
        if (ls >> extra) throw parse_error("trailing tokens in edge coloring line: " + line);
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            throw parse_error("edge endpoint out of range in edge coloring");
        auto idx = g.edge_index(u, v);
        if (!idx) throw parse_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") not in graph");
        if (seen[*idx]) throw parse_error("duplicate edge in edge coloring file");
        seen[*idx] = true;
        c.colors[*idx] = col;
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (!seen[i]) throw parse_error("missing edge in edge coloring file");
    return c;
}

}  // namespace zchrom
