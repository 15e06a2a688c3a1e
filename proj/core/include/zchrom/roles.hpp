#pragma once

#include <string>
#include <vector>

namespace zchrom {

// Per-vertex role annotation used by the generators and reductions, so
// constructed instances stay auditable.  A role is a short kind tag plus
// up to two integer indices; the textual form is "kind", "kind:a" or
// "kind:a.b" (indices are 1-based, matching the usual naming of family
// members).
struct Role {
    std::string kind;
    int a = -1;
    int b = -1;

    std::string to_string() const;
    static Role parse(const std::string& token);

    bool operator==(const Role&) const = default;
};

struct RoleMap {
    std::vector<Role> roles;  // indexed by vertex id

    int size() const { return static_cast<int>(roles.size()); }
    const Role& operator[](int v) const { return roles[v]; }
    Role& operator[](int v) { return roles[v]; }
};

// Sidecar file format: one "<vertex> <role>" line per vertex.
std::string emit_roles(const RoleMap& m);
RoleMap parse_roles(const std::string& text);

}  // namespace zchrom
