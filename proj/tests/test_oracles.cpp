#include "test_oracles.hpp"

#include <functional>

namespace dmag::testing {

namespace {

// Reflexive ancestor mask obtained by following directed simple paths only;
// shared by the oracles below but written from the definition (no reuse of
// the library's traversal).
std::uint64_t path_ancestors(const MixedGraph& g, int v) {
    std::uint64_t anc = bit(v);
    std::function<void(int, std::uint64_t)> walk = [&](int w, std::uint64_t visited) {
        for (int u = 0; u < g.vertex_count(); ++u) {
            if ((visited & bit(u)) || !g.adjacent(u, w)) continue;
            if (g.mark_at(u, w) == Mark::Tail && g.mark_at(w, u) == Mark::Arrowhead) {
                anc |= bit(u);
                walk(u, visited | bit(u));
            }
        }
    };
    walk(v, bit(v));
    return anc;
}

}  // namespace

std::vector<std::vector<int>> all_simple_paths(const MixedGraph& g, int a, int b) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{a};
    std::function<void(std::uint64_t)> extend = [&](std::uint64_t visited) {
        int v = path.back();
        if (v == b) {
            out.push_back(path);
            return;
        }
        for (int u = 0; u < g.vertex_count(); ++u) {
            if ((visited & bit(u)) || u == v || !g.adjacent(u, v)) continue;
            path.push_back(u);
            extend(visited | bit(u));
            path.pop_back();
        }
    };
    extend(bit(a));
    return out;
}

bool oracle_path_active(const MixedGraph& g, const std::vector<int>& path, std::uint64_t z) {
    std::uint64_t anz = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (z & bit(v)) anz |= path_ancestors(g, v);
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        int v = path[i];
        bool collider = g.mark_at(v, path[i - 1]) == Mark::Arrowhead &&
                        g.mark_at(v, path[i + 1]) == Mark::Arrowhead;
        if (collider ? !(anz & bit(v)) : (z & bit(v)) != 0) return false;
    }
    return true;
}

bool oracle_m_connected(const MixedGraph& g, int a, int b, std::uint64_t z) {
    for (const auto& path : all_simple_paths(g, a, b)) {
        if (oracle_path_active(g, path, z)) return true;
    }
    return false;
}

std::vector<std::vector<int>> oracle_inducing_paths(const MixedGraph& g, int a, int b) {
    std::uint64_t anab = path_ancestors(g, a) | path_ancestors(g, b);
    std::vector<std::vector<int>> out;
    for (const auto& path : all_simple_paths(g, a, b)) {
        bool ok = true;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            int v = path[i];
            bool collider = g.mark_at(v, path[i - 1]) == Mark::Arrowhead &&
                            g.mark_at(v, path[i + 1]) == Mark::Arrowhead;
            if (!collider || !(anab & bit(v))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(path);
    }
    return out;
}

bool oracle_separable(const MixedGraph& g, int a, int b) {
    int n = g.vertex_count();
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : bit(n) - 1;
    std::uint64_t rest = all & ~(bit(a) | bit(b));
    std::uint64_t z = 0;
    while (true) {
        if (!oracle_m_connected(g, a, b, z)) return true;
        if (z == rest) break;
        z = (z - rest) & rest;
    }
    return false;
}

bool oracle_is_ancestral(const MixedGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t anc = path_ancestors(g, v) & ~bit(v);
        // a1: a proper ancestor that is also a descendant closes a cycle
        for (int u : mask_to_indices(anc)) {
            if (path_ancestors(g, u) & bit(v)) return false;
        }
    }
    for (auto [a, b] : g.bidirected_edges()) {
        if (path_ancestors(g, b) & bit(a)) return false;
        if (path_ancestors(g, a) & bit(b)) return false;
    }
    return true;
}

bool oracle_d_separated_moral(const MixedGraph& dag, int x, int y, std::uint64_t z) {
    std::uint64_t relevant = path_ancestors(dag, x) | path_ancestors(dag, y);
    for (int v : mask_to_indices(z)) relevant |= path_ancestors(dag, v);

    int n = dag.vertex_count();
    std::vector<std::vector<bool>> undirected(static_cast<std::size_t>(n),
                                              std::vector<bool>(static_cast<std::size_t>(n), false));
    auto connect = [&](int u, int v) {
        undirected[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        undirected[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    };
    for (auto [from, to] : dag.directed_edges()) {
        if ((relevant & bit(from)) && (relevant & bit(to))) connect(from, to);
    }
    // marry parents of every retained child
    for (int c : mask_to_indices(relevant)) {
        auto parents = dag.parents(c);
        for (std::size_t i = 0; i < parents.size(); ++i) {
            for (std::size_t j = i + 1; j < parents.size(); ++j) {
                if ((relevant & bit(parents[i])) && (relevant & bit(parents[j]))) {
                    connect(parents[i], parents[j]);
                }
            }
        }
    }

    std::uint64_t seen = bit(x);
    std::vector<int> stack{x};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == y) return false;
        for (int u = 0; u < n; ++u) {
            if (!undirected[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) continue;
            if ((seen & bit(u)) || (z & bit(u))) continue;
            seen |= bit(u);
            stack.push_back(u);
        }
    }
    return true;
}

}  // namespace dmag::testing
