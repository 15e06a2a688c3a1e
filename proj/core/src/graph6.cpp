#include "zchrom/graph6.hpp"

#include <sstream>

namespace zchrom {

namespace {

constexpr int kMaxLongForm = 258047;  // 2^18 - 1

// Strips one trailing newline (LF or CRLF); anything else must be payload.
std::string strip_eol(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxLongForm)
        throw std::invalid_argument("graph too large for graph6 emitter");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_graph6(const std::string& text) {
    std::string s = strip_eol(text);
    if (s.empty()) throw parse_error("empty graph6 input");
    for (char c : s)
        if (c < 63 || c > 126)
            throw parse_error("graph6 byte out of range");

    std::size_t pos = 0;
    long long n;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw parse_error("graph6 sizes above 258047 are not supported");
        if (s.size() < 4) throw parse_error("truncated graph6 header");
        n = ((static_cast<long long>(s[1] - 63)) << 12) |
            ((static_cast<long long>(s[2] - 63)) << 6) |
            (static_cast<long long>(s[3] - 63));
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }

    long long nbits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != body)
        throw parse_error("graph6 body length mismatch: expected " +
                          std::to_string(body) + " bytes, got " +
                          std::to_string(s.size() - pos));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // Padding bits beyond the triangle must be zero.
    for (; bit < static_cast<long long>(body) * 6; ++bit) {
        int byte = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
        if ((byte >> (5 - bit % 6)) & 1)
            throw parse_error("nonzero padding bits in graph6 body");
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string to_dot(const Graph& g, const RoleMap* roles) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (roles && v < roles->size())
            out << " [label=\"" << v << ' ' << roles->roles[v].to_string() << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace zchrom
