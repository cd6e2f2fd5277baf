#include "dmag/mixed_graph.hpp"

#include <algorithm>
#include <utility>

namespace dmag {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(std::move(message)), line_(line), column_(column) {}

CapExceeded::CapExceeded(std::size_t cap)
    : std::runtime_error("equivalence class enumeration exceeded cap of " + std::to_string(cap)),
      cap_(cap) {}

namespace {
const std::vector<std::string> kNoNames;
}

MixedGraph::MixedGraph() : names_(std::make_shared<const std::vector<std::string>>()), n_(0) {}

MixedGraph::MixedGraph(std::vector<std::string> vertex_names) {
    std::sort(vertex_names.begin(), vertex_names.end());
    for (std::size_t i = 0; i + 1 < vertex_names.size(); ++i) {
        if (vertex_names[i] == vertex_names[i + 1]) {
            throw std::invalid_argument("duplicate vertex name: " + vertex_names[i]);
        }
    }
    if (vertex_names.size() > 64) {
        throw std::invalid_argument("at most 64 vertices are supported");
    }
    for (const auto& nm : vertex_names) {
        if (nm.empty()) throw std::invalid_argument("vertex names must be nonempty");
    }
    n_ = static_cast<int>(vertex_names.size());
    names_ = std::make_shared<const std::vector<std::string>>(std::move(vertex_names));
    states_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, EdgeKind::None);
}

std::optional<int> MixedGraph::find(std::string_view name) const noexcept {
    auto it = std::lower_bound(names_->begin(), names_->end(), name);
    if (it != names_->end() && *it == name) {
        return static_cast<int>(it - names_->begin());
    }
    return std::nullopt;
}

int MixedGraph::index_of(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw std::invalid_argument("unknown vertex: " + std::string(name));
}

void MixedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

int MixedGraph::pair_index(int x, int y) const {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw std::invalid_argument("self loop");
    if (x > y) std::swap(x, y);
    return x * (2 * n_ - x - 1) / 2 + (y - x - 1);
}

bool MixedGraph::adjacent(int x, int y) const {
    return states_[static_cast<std::size_t>(pair_index(x, y))] != EdgeKind::None;
}

EdgeKind MixedGraph::edge_kind(int x, int y) const {
    return states_[static_cast<std::size_t>(pair_index(x, y))];
}

Mark MixedGraph::mark_at(int x, int y) const {
    EdgeKind k = edge_kind(x, y);
    if (k == EdgeKind::None) {
        throw std::invalid_argument("no edge between " + name(x) + " and " + name(y));
    }
    if (k == EdgeKind::Bidirected) return Mark::Arrowhead;
    bool x_is_lo = x < y;
    bool tail_at_lo = (k == EdgeKind::LoToHi);
    return (x_is_lo == tail_at_lo) ? Mark::Tail : Mark::Arrowhead;
}

void MixedGraph::add_edge(int x, int y, Mark at_x, Mark at_y) {
    int idx = pair_index(x, y);
    if (states_[static_cast<std::size_t>(idx)] != EdgeKind::None) {
        throw std::invalid_argument("duplicate edge between " + name(x) + " and " + name(y));
    }
    if (at_x == Mark::Tail && at_y == Mark::Tail) {
        throw std::invalid_argument("two-tail edge between " + name(x) + " and " + name(y) +
                                    " is unrepresentable");
    }
    EdgeKind k;
    if (at_x == Mark::Arrowhead && at_y == Mark::Arrowhead) {
        k = EdgeKind::Bidirected;
    } else {
        // tail end is the origin
        int origin = (at_x == Mark::Tail) ? x : y;
        k = (origin == std::min(x, y)) ? EdgeKind::LoToHi : EdgeKind::HiToLo;
    }
    states_[static_cast<std::size_t>(idx)] = k;
}

void MixedGraph::add_edge(std::string_view x, std::string_view y, Mark at_x, Mark at_y) {
    add_edge(index_of(x), index_of(y), at_x, at_y);
}

std::vector<int> MixedGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u) {
        if (u != v && adjacent(u, v)) out.push_back(u);
    }
    return out;
}

std::vector<int> MixedGraph::parents(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u) {
        if (u == v || !adjacent(u, v)) continue;
        if (mark_at(u, v) == Mark::Tail && mark_at(v, u) == Mark::Arrowhead) out.push_back(u);
    }
    return out;
}

std::vector<int> MixedGraph::children(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u) {
        if (u == v || !adjacent(u, v)) continue;
        if (mark_at(v, u) == Mark::Tail && mark_at(u, v) == Mark::Arrowhead) out.push_back(u);
    }
    return out;
}

std::vector<int> MixedGraph::spouses(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u) {
        if (u != v && edge_kind(u, v) == EdgeKind::Bidirected) out.push_back(u);
    }
    return out;
}

std::uint64_t MixedGraph::ancestor_mask(int v) const {
    check_vertex(v);
    std::uint64_t seen = bit(v);
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int p : parents(w)) {
            if (!(seen & bit(p))) {
                seen |= bit(p);
                stack.push_back(p);
            }
        }
    }
    return seen;
}

std::uint64_t MixedGraph::descendant_mask(int v) const {
    check_vertex(v);
    std::uint64_t seen = bit(v);
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int c : children(w)) {
            if (!(seen & bit(c))) {
                seen |= bit(c);
                stack.push_back(c);
            }
        }
    }
    return seen;
}

std::uint64_t MixedGraph::ancestor_mask(std::uint64_t vertices) const {
    std::uint64_t out = 0;
    for (int v = 0; v < n_; ++v) {
        if (vertices & bit(v)) out |= ancestor_mask(v);
    }
    return out;
}

std::vector<std::string> MixedGraph::ancestors(std::string_view v) const {
    std::uint64_t m = ancestor_mask(index_of(v));
    std::vector<std::string> out;
    for (int u = 0; u < n_; ++u) {
        if (m & bit(u)) out.push_back(name(u));
    }
    return out;
}

std::vector<MixedGraph::Edge> MixedGraph::edges() const {
    std::vector<Edge> out;
    for (int x = 0; x < n_; ++x) {
        for (int y = x + 1; y < n_; ++y) {
            if (adjacent(x, y)) out.push_back({x, y, mark_at(x, y), mark_at(y, x)});
        }
    }
    return out;
}

std::vector<std::pair<int, int>> MixedGraph::directed_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x) {
        for (int y = x + 1; y < n_; ++y) {
            EdgeKind k = edge_kind(x, y);
            if (k == EdgeKind::LoToHi) out.emplace_back(x, y);
            else if (k == EdgeKind::HiToLo) out.emplace_back(y, x);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> MixedGraph::bidirected_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x) {
        for (int y = x + 1; y < n_; ++y) {
            if (edge_kind(x, y) == EdgeKind::Bidirected) out.emplace_back(x, y);
        }
    }
    return out;
}

int MixedGraph::edge_count() const {
    int c = 0;
    for (EdgeKind k : states_) c += (k != EdgeKind::None);
    return c;
}

int MixedGraph::bidirected_count() const {
    int c = 0;
    for (EdgeKind k : states_) c += (k == EdgeKind::Bidirected);
    return c;
}

std::vector<bool> MixedGraph::skeleton() const {
    std::vector<bool> out(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) out[i] = states_[i] != EdgeKind::None;
    return out;
}

bool MixedGraph::same_vertices(const MixedGraph& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
}

bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.same_vertices(b) && a.states_ == b.states_;
}

MixedGraph MixedGraph::with_state(int x, int y, EdgeKind k) const {
    MixedGraph out = *this;
    out.states_[static_cast<std::size_t>(pair_index(x, y))] = k;
    return out;
}

MixedGraph apply_mark_change(const MixedGraph& g, const MarkChange& c) {
    if (c.at != c.x && c.at != c.y) {
        throw std::invalid_argument("mark change endpoint is not on the edge");
    }
    EdgeKind k = g.edge_kind(c.x, c.y);
    if (k == EdgeKind::None) {
        throw std::invalid_argument("no edge between " + g.name(c.x) + " and " + g.name(c.y));
    }
    int other = (c.at == c.x) ? c.y : c.x;
    if (c.to == Mark::Tail && g.mark_at(other, c.at) == Mark::Tail) {
        throw std::invalid_argument("mark change would produce a two-tail edge between " +
                                    g.name(c.x) + " and " + g.name(c.y));
    }
    Mark far = g.mark_at(other, c.at);
    EdgeKind nk;
    if (c.to == Mark::Arrowhead && far == Mark::Arrowhead) {
        nk = EdgeKind::Bidirected;
    } else {
        int origin = (c.to == Mark::Tail) ? c.at : other;
        nk = (origin == std::min(c.x, c.y)) ? EdgeKind::LoToHi : EdgeKind::HiToLo;
    }
    return g.with_state(c.x, c.y, nk);
}

namespace {

// Directed-cycle search; on failure fills `cycle` with the closed walk
// (first vertex repeated at the end).
bool acyclic_dfs(const MixedGraph& g, int v, std::vector<int>& color, std::vector<int>& stack,
                 std::vector<int>& cycle) {
    color[static_cast<std::size_t>(v)] = 1;
    stack.push_back(v);
    for (int c : g.children(v)) {
        if (color[static_cast<std::size_t>(c)] == 1) {
            auto it = std::find(stack.begin(), stack.end(), c);
            cycle.assign(it, stack.end());
            cycle.push_back(c);
            return false;
        }
        if (color[static_cast<std::size_t>(c)] == 0 && !acyclic_dfs(g, c, color, stack, cycle)) {
            return false;
        }
    }
    stack.pop_back();
    color[static_cast<std::size_t>(v)] = 2;
    return true;
}

}  // namespace

Verdict is_ancestral(const MixedGraph& g) {
    Verdict v;
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack, cycle;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)] == 0 && !acyclic_dfs(g, s, color, stack, cycle)) {
            Witness w{"a1", {}, "directed cycle"};
            for (int u : cycle) w.vertices.push_back(g.name(u));
            v.holds = false;
            v.witnesses.push_back(std::move(w));
            break;
        }
    }
    for (auto [a, b] : g.bidirected_edges()) {
        // reflexive masks: proper ancestry needs the bit of the *other* vertex
        if (g.ancestor_mask(b) & bit(a)) {
            v.holds = false;
            v.witnesses.push_back({"a2",
                                   {g.name(a), g.name(b)},
                                   g.name(a) + " is a spouse and a proper ancestor of " + g.name(b)});
        } else if (g.ancestor_mask(a) & bit(b)) {
            v.holds = false;
            v.witnesses.push_back({"a2",
                                   {g.name(b), g.name(a)},
                                   g.name(b) + " is a spouse and a proper ancestor of " + g.name(a)});
        }
    }
    return v;
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v) {
        if (mask & bit(v)) out.push_back(v);
    }
    return out;
}

}  // namespace dmag
