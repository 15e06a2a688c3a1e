#include "zchrom/roles.hpp"

#include <sstream>
#include <stdexcept>

namespace zchrom {

std::string Role::to_string() const {
    std::string s = kind;
    if (a >= 0) {
        s += ":" + std::to_string(a);
        if (b >= 0) s += "." + std::to_string(b);
    }
    return s;
}

Role Role::parse(const std::string& token) {
    Role r;
    auto colon = token.find(':');
    if (colon == std::string::npos) {
        r.kind = token;
        return r;
    }
    r.kind = token.substr(0, colon);
    std::string rest = token.substr(colon + 1);
    auto dot = rest.find('.');
    try {
        if (dot == std::string::npos) {
            r.a = std::stoi(rest);
        } else {
            r.a = std::stoi(rest.substr(0, dot));
            r.b = std::stoi(rest.substr(dot + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad role token: " + token);
    }
    if (r.kind.empty() || r.a < 0 || (dot != std::string::npos && r.b < 0))
        throw std::invalid_argument("bad role token: " + token);
    return r;
}

std::string emit_roles(const RoleMap& m) {
    std::ostringstream out;
    for (int v = 0; v < m.size(); ++v)
        out << v << ' ' << m.roles[v].to_string() << '\n';
    return out.str();
}

RoleMap parse_roles(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, Role>> entries;
    int max_v = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int v;
        std::string token;
        if (!(ls >> v >> token))
            throw std::invalid_argument("bad role line: " + line);
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("trailing tokens in role line: " + line);
        if (v < 0) throw std::invalid_argument("negative vertex in role line: " + line);
        entries.emplace_back(v, Role::parse(token));
        max_v = std::max(max_v, v);
    }
    RoleMap m;
    m.roles.resize(max_v + 1);
    std::vector<bool> seen(max_v + 1, false);
    for (auto& [v, r] : entries) {
        if (seen[v]) throw std::invalid_argument("duplicate vertex in role file");
        seen[v] = true;
        m.roles[v] = std::move(r);
    }
    for (int v = 0; v <= max_v; ++v)
        if (!seen[v]) throw std::invalid_argument("missing vertex in role file: " + std::to_string(v));
    return m;
}

}  // namespace zchrom
