#include "dmag/equivalence.hpp"

#include <algorithm>
#include <sstream>

namespace dmag {

namespace {

std::string witness_text(const Verdict& v) {
    if (v.holds || v.witnesses.empty()) return "";
    const Witness& w = v.witnesses.front();
    std::string out = w.tag;
    if (!w.detail.empty()) out += ": " + w.detail;
    return out;
}

void require_dmag(const MixedGraph& g, const char* which) {
    Verdict v = is_dmag(g);
    if (!v.holds) {
        throw std::invalid_argument(std::string(which) + " is not a DMAG (" + witness_text(v) + ")");
    }
}

bool is_collider_at(const MixedGraph& g, int prev, int v, int next) {
    return g.mark_at(v, prev) == Mark::Arrowhead && g.mark_at(v, next) == Mark::Arrowhead;
}

bool is_parent_of(const MixedGraph& g, int p, int child) {
    return g.adjacent(p, child) && g.mark_at(p, child) == Mark::Tail &&
           g.mark_at(child, p) == Mark::Arrowhead;
}

/// Re-checks Definition 6 for a concrete vertex sequence in graph g.
bool discriminating_in(const MixedGraph& g, const std::vector<int>& path) {
    if (path.size() < 4) return false;
    int y = path.back();
    if (g.adjacent(path.front(), y)) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.adjacent(path[i], path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 2 < path.size(); ++i) {  // strictly between X and V
        if (!is_collider_at(g, path[i - 1], path[i], path[i + 1])) return false;
        if (!is_parent_of(g, path[i], y)) return false;
    }
    return true;
}

}  // namespace

std::vector<UnshieldedTriple> unshielded_colliders(const MixedGraph& g) {
    std::vector<UnshieldedTriple> out;
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int c = a + 1; c < g.vertex_count(); ++c) {
            if (g.adjacent(a, c)) continue;
            for (int b = 0; b < g.vertex_count(); ++b) {
                if (b == a || b == c || !g.adjacent(a, b) || !g.adjacent(b, c)) continue;
                if (g.mark_at(b, a) == Mark::Arrowhead && g.mark_at(b, c) == Mark::Arrowhead) {
                    out.push_back({a, b, c, true});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const UnshieldedTriple& l, const UnshieldedTriple& r) {
        return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c);
    });
    return out;
}

std::vector<DiscriminatingPath> discriminating_paths_for(const MixedGraph& g, int v, int y) {
    if (!g.adjacent(v, y)) {
        throw std::invalid_argument("discriminating paths require " + g.name(v) + " and " +
                                    g.name(y) + " to be adjacent");
    }
    std::vector<DiscriminatingPath> out;
    // Backward growth from v: rev = <v, w1, ..., wk>, wk the current front.
    // Vertices w1..w_{k-1} already satisfy the collider-and-parent-of-y
    // condition; wk's collider status is only checkable once both of its
    // path edges are fixed, i.e. when extending past it.
    std::vector<int> rev{v};
    std::uint64_t used = bit(v) | bit(y);
    auto grow = [&](auto&& self) -> void {
        int front = rev.back();
        int prev = rev.size() >= 2 ? rev[rev.size() - 2] : y;
        for (int x = 0; x < g.vertex_count(); ++x) {
            if ((used & bit(x)) || !g.adjacent(x, front)) continue;
            if (front != v) {
                if (!is_collider_at(g, prev, front, x)) continue;
                if (!is_parent_of(g, front, y)) continue;
            }
            rev.push_back(x);
            used |= bit(x);
            if (rev.size() >= 3 && !g.adjacent(x, y)) {
                std::vector<int> path(rev.rbegin(), rev.rend());
                path.push_back(y);
                bool coll = is_collider_at(g, path[path.size() - 3], v, y);
                out.push_back({std::move(path), v, coll});
            }
            self(self);
            used &= ~bit(x);
            rev.pop_back();
        }
    };
    grow(grow);
    return out;
}

Verdict markov_equivalent(const MixedGraph& g1, const MixedGraph& g2) {
    if (!g1.same_vertices(g2)) {
        throw std::invalid_argument("graphs are over different vertex sets");
    }
    require_dmag(g1, "first graph");
    require_dmag(g2, "second graph");

    // e1: same adjacencies
    for (int a = 0; a < g1.vertex_count(); ++a) {
        for (int b = a + 1; b < g1.vertex_count(); ++b) {
            if (g1.adjacent(a, b) != g2.adjacent(a, b)) {
                return Verdict::fail({"e1",
                                      {g1.name(a), g1.name(b)},
                                      "adjacent in exactly one of the graphs"});
            }
        }
    }

    // e2: same unshielded colliders
    auto u1 = unshielded_colliders(g1);
    auto u2 = unshielded_colliders(g2);
    if (u1 != u2) {
        std::vector<UnshieldedTriple> diff;
        std::set_symmetric_difference(
            u1.begin(), u1.end(), u2.begin(), u2.end(), std::back_inserter(diff),
            [](const UnshieldedTriple& l, const UnshieldedTriple& r) {
                return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c);
            });
        const UnshieldedTriple& t = diff.front();
        return Verdict::fail({"e2",
                              {g1.name(t.a), g1.name(t.b), g1.name(t.c)},
                              "unshielded collider in exactly one of the graphs"});
    }

    // e3: paths discriminating for a vertex in both graphs must agree on its
    // collider status
    for (int v = 0; v < g1.vertex_count(); ++v) {
        for (int y = 0; y < g1.vertex_count(); ++y) {
            if (y == v || !g1.adjacent(v, y)) continue;
            for (const auto& dp : discriminating_paths_for(g1, v, y)) {
                if (!discriminating_in(g2, dp.vertices)) continue;
                bool coll2 = is_collider_at(g2, dp.vertices[dp.vertices.size() - 3], v, y);
                if (dp.collider_at_v != coll2) {
                    Witness w{"e3", {}, "collider status of " + g1.name(v) +
                                            " differs on a shared discriminating path"};
                    for (int u : dp.vertices) w.vertices.push_back(g1.name(u));
                    return Verdict::fail(std::move(w));
                }
            }
        }
    }
    return Verdict::pass();
}

bool markov_equivalent_oracle(const MixedGraph& g1, const MixedGraph& g2) {
    return !distinguishing_query(g1, g2).has_value();
}

std::optional<std::string> distinguishing_query(const MixedGraph& g1, const MixedGraph& g2) {
    if (!g1.same_vertices(g2)) {
        throw std::invalid_argument("graphs are over different vertex sets");
    }
    int n = g1.vertex_count();
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            std::uint64_t rest = all & ~(bit(a) | bit(b));
            std::uint64_t z = 0;
            while (true) {
                bool c1 = m_connected(g1, a, b, z);
                if (c1 != m_connected(g2, a, b, z)) {
                    std::ostringstream msg;
                    msg << g1.name(a) << " and " << g1.name(b) << " given {";
                    bool first = true;
                    for (int u : mask_to_indices(z)) {
                        if (!first) msg << ", ";
                        msg << g1.name(u);
                        first = false;
                    }
                    msg << "}: " << (c1 ? "m-connected" : "m-separated")
                        << " in the first graph only";
                    return msg.str();
                }
                if (z == rest) break;
                z = (z - rest) & rest;  // next subset of rest
            }
        }
    }
    return std::nullopt;
}

}  // namespace dmag
