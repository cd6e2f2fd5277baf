#include "dmag/reachability.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace dmag {

namespace {

void check_pair_query(const MixedGraph& g, int a, int b, std::uint64_t z) {
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count()) {
        throw std::invalid_argument("vertex index out of range");
    }
    if (a == b) throw std::invalid_argument("query endpoints must differ");
    if (z & (bit(a) | bit(b))) {
        throw std::invalid_argument("query endpoint inside conditioning set");
    }
}

std::vector<Role> roles_along(const MixedGraph& g, const std::vector<int>& path) {
    std::vector<Role> roles;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        bool coll = g.mark_at(path[i], path[i - 1]) == Mark::Arrowhead &&
                    g.mark_at(path[i], path[i + 1]) == Mark::Arrowhead;
        roles.push_back(coll ? Role::Collider : Role::NonCollider);
    }
    return roles;
}

// Depth-first search for a simple active path. Interior conditions are
// checked as soon as a vertex gains both of its path edges, so dead
// branches are cut early.
bool active_path_dfs(const MixedGraph& g, int b, std::uint64_t z, std::uint64_t anz,
                     std::vector<int>& path, std::uint64_t on_path) {
    int v = path.back();
    for (int u = 0; u < g.vertex_count(); ++u) {
        if ((on_path & bit(u)) || u == v || !g.adjacent(u, v)) continue;
        if (path.size() >= 2) {
            int prev = path[path.size() - 2];
            bool coll = g.mark_at(v, prev) == Mark::Arrowhead &&
                        g.mark_at(v, u) == Mark::Arrowhead;
            if (coll ? !(anz & bit(v)) : (z & bit(v)) != 0) continue;
        }
        if (u == b) {
            path.push_back(u);
            return true;
        }
        path.push_back(u);
        if (active_path_dfs(g, b, z, anz, path, on_path | bit(u))) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::vector<std::string> PathWitness::vertex_names(const MixedGraph& g) const {
    std::vector<std::string> out;
    out.reserve(vertices.size());
    for (int v : vertices) out.push_back(g.name(v));
    return out;
}

std::string format_path(const MixedGraph& g, const std::vector<int>& vertices) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0) {
            Mark near = g.mark_at(vertices[i - 1], vertices[i]);
            Mark far = g.mark_at(vertices[i], vertices[i - 1]);
            out << (near == Mark::Tail ? " -> " : (far == Mark::Tail ? " <- " : " <-> "));
        }
        out << g.name(vertices[i]);
    }
    return out.str();
}

bool m_connected(const MixedGraph& g, int a, int b, std::uint64_t z) {
    check_pair_query(g, a, b, z);
    std::uint64_t anz = g.ancestor_mask(z);

    // state = vertex index * 2 + (arrival mark == Arrowhead)
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()) * 2, false);
    std::vector<int> stack;
    auto push = [&](int v, Mark arrival) {
        std::size_t s = static_cast<std::size_t>(v) * 2 + (arrival == Mark::Arrowhead);
        if (!seen[s]) {
            seen[s] = true;
            stack.push_back(static_cast<int>(s));
        }
    };
    for (int u : g.neighbors(a)) push(u, g.mark_at(u, a));
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        int v = s / 2;
        Mark in = (s % 2) ? Mark::Arrowhead : Mark::Tail;
        if (v == b) return true;
        for (int u : g.neighbors(v)) {
            bool coll = in == Mark::Arrowhead && g.mark_at(v, u) == Mark::Arrowhead;
            if (coll ? !(anz & bit(v)) : (z & bit(v)) != 0) continue;
            push(u, g.mark_at(u, v));
        }
    }
    return false;
}

std::optional<PathWitness> m_connecting_path(const MixedGraph& g, int a, int b, std::uint64_t z) {
    if (!m_connected(g, a, b, z)) return std::nullopt;
    // A connecting walk exists, hence a simple connecting path does; dig it
    // out explicitly for the witness.
    std::uint64_t anz = g.ancestor_mask(z);
    std::vector<int> path{a};
    bool found = active_path_dfs(g, b, z, anz, path, bit(a));
    if (!found) throw std::logic_error("active walk exists but no active path was found");
    return PathWitness{path, roles_along(g, path)};
}

std::optional<PathWitness> m_connecting_path(const MixedGraph& g, std::string_view a,
                                             std::string_view b,
                                             const std::vector<std::string>& z) {
    return m_connecting_path(g, g.index_of(a), g.index_of(b), vertex_mask(g, z));
}

bool m_separated(const MixedGraph& g, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    if (x == 0 || y == 0) throw std::invalid_argument("query sets X and Y must be nonempty");
    if ((x & y) || (x & z) || (y & z)) {
        throw std::invalid_argument("query sets must be pairwise disjoint");
    }
    for (int a : mask_to_indices(x)) {
        for (int b : mask_to_indices(y)) {
            if (m_connected(g, a, b, z)) return false;
        }
    }
    return true;
}

bool m_separated(const MixedGraph& g, const SeparationQuery& q) {
    return m_separated(g, vertex_mask(g, q.x), vertex_mask(g, q.y), vertex_mask(g, q.z));
}

bool has_inducing_path(const MixedGraph& g, int a, int b) {
    if (a == b) throw std::invalid_argument("query endpoints must differ");
    if (g.adjacent(a, b)) return true;
    std::uint64_t anab = g.ancestor_mask(a) | g.ancestor_mask(b);
    std::uint64_t seen = 0;
    std::vector<int> stack;
    for (int u : g.neighbors(a)) {
        if (g.mark_at(u, a) == Mark::Arrowhead && !(seen & bit(u))) {
            seen |= bit(u);
            stack.push_back(u);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!(anab & bit(v))) continue;  // interior vertices must be endpoint ancestors
        for (int u : g.neighbors(v)) {
            if (g.mark_at(v, u) != Mark::Arrowhead) continue;  // v must be a collider
            if (u == b) return true;
            if (g.mark_at(u, v) == Mark::Arrowhead && !(seen & bit(u))) {
                seen |= bit(u);
                stack.push_back(u);
            }
        }
    }
    return false;
}

std::optional<PathWitness> inducing_path(const MixedGraph& g, int a, int b) {
    Verdict anc = is_ancestral(g);
    if (!anc.holds) {
        throw std::invalid_argument("inducing paths are defined on ancestral graphs only (" +
                                    anc.witnesses.front().tag + " fails)");
    }
    if (a == b) throw std::invalid_argument("query endpoints must differ");
    if (g.adjacent(a, b)) {
        return PathWitness{{a, b}, {}};
    }
    // Breadth-first over vertices with arrowhead arrival; the level-order
    // guarantee makes the predecessor chain a shortest, hence simple, path.
    std::uint64_t anab = g.ancestor_mask(a) | g.ancestor_mask(b);
    std::vector<int> pred(static_cast<std::size_t>(g.vertex_count()), -1);
    std::uint64_t seen = 0;
    std::deque<int> queue;
    auto finish = [&](int last_interior) {
        std::vector<int> path{b, last_interior};
        for (int v = pred[static_cast<std::size_t>(last_interior)]; v != -1;
             v = (v == a) ? -1 : pred[static_cast<std::size_t>(v)]) {
            path.push_back(v);
        }
        std::reverse(path.begin(), path.end());
        return PathWitness{path, roles_along(g, path)};
    };
    for (int u : g.neighbors(a)) {
        if (g.mark_at(u, a) == Mark::Arrowhead && !(seen & bit(u))) {
            seen |= bit(u);
            pred[static_cast<std::size_t>(u)] = a;
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!(anab & bit(v))) continue;
        for (int u : g.neighbors(v)) {
            if (g.mark_at(v, u) != Mark::Arrowhead) continue;
            if (u == b) return finish(v);
            if (g.mark_at(u, v) == Mark::Arrowhead && !(seen & bit(u))) {
                seen |= bit(u);
                pred[static_cast<std::size_t>(u)] = v;
                queue.push_back(u);
            }
        }
    }
    return std::nullopt;
}

Verdict is_maximal(const MixedGraph& g) {
    Verdict anc = is_ancestral(g);
    if (!anc.holds) {
        throw std::invalid_argument("maximality is defined on ancestral graphs only");
    }
    Verdict v;
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int b = a + 1; b < g.vertex_count(); ++b) {
            if (g.adjacent(a, b)) continue;
            if (auto path = inducing_path(g, a, b)) {
                v.holds = false;
                Witness w{"maximality", path->vertex_names(g),
                          g.name(a) + " and " + g.name(b) +
                              " are not adjacent but cannot be m-separated by any set"};
                v.witnesses.push_back(std::move(w));
            }
        }
    }
    return v;
}

Verdict is_dmag(const MixedGraph& g) {
    Verdict anc = is_ancestral(g);
    if (!anc.holds) return anc;
    return is_maximal(g);
}

std::uint64_t vertex_mask(const MixedGraph& g, const std::vector<std::string>& names) {
    std::uint64_t m = 0;
    for (const auto& nm : names) m |= bit(g.index_of(nm));
    return m;
}

}  // namespace dmag
