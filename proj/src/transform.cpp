#include "dmag/transform.hpp"

#include <algorithm>
#include <deque>
#include <map>

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

bool is_parent_of(const MixedGraph& g, int p, int child) {
    return g.adjacent(p, child) && g.mark_at(p, child) == Mark::Tail &&
           g.mark_at(child, p) == Mark::Arrowhead;
}

// Shortest directed path from a to b of length >= 2, for the t1 witness.
std::vector<int> directed_detour(const MixedGraph& g, int a, int b) {
    std::vector<int> pred(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue;
    for (int c : g.children(a)) {
        if (c == b) continue;
        pred[static_cast<std::size_t>(c)] = a;
        queue.push_back(c);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int c : g.children(v)) {
            if (pred[static_cast<std::size_t>(c)] != -1 || c == a) continue;
            pred[static_cast<std::size_t>(c)] = v;
            if (c == b) {
                std::vector<int> path{b};
                for (int u = v; u != a; u = pred[static_cast<std::size_t>(u)]) path.push_back(u);
                path.push_back(a);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(c);
        }
    }
    return {};
}

// Lemma-1 conditions for turning the directed edge a -> b into a <-> b,
// evaluated in the graph given (which holds a -> b).
std::vector<Witness> lemma1_failures(const MixedGraph& g, int a, int b) {
    std::vector<Witness> out;

    // t1: no directed path from a to b other than the edge itself
    for (int c : g.children(a)) {
        if (c != b && (g.descendant_mask(c) & bit(b))) {
            auto path = directed_detour(g, a, b);
            Witness w{"t1", {}, "directed path from " + g.name(a) + " to " + g.name(b) +
                                    " other than the edge"};
            for (int u : path) w.vertices.push_back(g.name(u));
            out.push_back(std::move(w));
            break;
        }
    }

    // t2: parents of a are parents of b; spouses of a are parents or spouses of b
    for (int c : g.parents(a)) {
        if (!is_parent_of(g, c, b)) {
            out.push_back({"t2",
                           {g.name(c), g.name(a), g.name(b)},
                           g.name(c) + " -> " + g.name(a) + " but " + g.name(c) + " -> " +
                               g.name(b) + " is missing"});
        }
    }
    for (int d : g.spouses(a)) {
        bool ok = is_parent_of(g, d, b) ||
                  (g.adjacent(d, b) && g.edge_kind(d, b) == EdgeKind::Bidirected);
        if (!ok) {
            out.push_back({"t2",
                           {g.name(d), g.name(a), g.name(b)},
                           g.name(d) + " <-> " + g.name(a) + " but " + g.name(d) +
                               " is neither a parent nor a spouse of " + g.name(b)});
        }
    }

    // t3: no discriminating path for a with b the adjacent endpoint
    auto dps = discriminating_paths_for(g, a, b);
    if (!dps.empty()) {
        Witness w{"t3", {}, "discriminating path for " + g.name(a) + " ending at " + g.name(b)};
        for (int u : dps.front().vertices) w.vertices.push_back(g.name(u));
        out.push_back(std::move(w));
    }
    return out;
}

// Core legitimacy check; assumes g is a DMAG and the change is applicable.
Verdict legitimacy_unchecked(const MixedGraph& g, const MarkChange& c) {
    int other = (c.at == c.x) ? c.y : c.x;
    Mark current = g.mark_at(c.at, other);
    if (current == c.to) return Verdict::pass();  // no-op change

    Verdict v;
    if (c.to == Mark::Arrowhead) {
        // adding: the edge is at -> other; conditions hold in g
        v.witnesses = lemma1_failures(g, c.at, other);
    } else {
        // dropping: the candidate result holds at -> other; conditions hold there
        MixedGraph candidate = apply_mark_change(g, c);
        v.witnesses = lemma1_failures(candidate, c.at, other);
    }
    v.holds = v.witnesses.empty();
    return v;
}

void validate_change(const MixedGraph& g, const MarkChange& c) {
    if (c.at != c.x && c.at != c.y) {
        throw std::invalid_argument("mark change endpoint is not on the edge");
    }
    if (g.edge_kind(c.x, c.y) == EdgeKind::None) {
        throw std::invalid_argument("no edge between " + g.name(c.x) + " and " + g.name(c.y));
    }
    int other = (c.at == c.x) ? c.y : c.x;
    if (c.to == Mark::Tail && g.mark_at(other, c.at) == Mark::Tail) {
        throw std::invalid_argument("mark change would produce a two-tail edge between " +
                                    g.name(c.x) + " and " + g.name(c.y));
    }
}

std::vector<MarkChange> candidate_changes(const MixedGraph& g) {
    std::vector<MarkChange> out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        for (int y = x + 1; y < g.vertex_count(); ++y) {
            switch (g.edge_kind(x, y)) {
                case EdgeKind::None:
                    break;
                case EdgeKind::LoToHi:
                    out.push_back({x, y, x, Mark::Arrowhead});
                    break;
                case EdgeKind::HiToLo:
                    out.push_back({x, y, y, Mark::Arrowhead});
                    break;
                case EdgeKind::Bidirected:
                    out.push_back({x, y, x, Mark::Tail});
                    out.push_back({x, y, y, Mark::Tail});
                    break;
            }
        }
    }
    return out;
}

std::vector<MixedGraph> successors_unchecked(const MixedGraph& g) {
    std::vector<MixedGraph> out;
    for (const MarkChange& c : candidate_changes(g)) {
        if (legitimacy_unchecked(g, c).holds) out.push_back(apply_mark_change(g, c));
    }
    return out;
}

bool covered_pair_condition(const MixedGraph& g, int a, int b) {
    std::vector<int> pa_b = g.parents(b);
    std::vector<int> pa_a = g.parents(a);
    pa_a.insert(std::lower_bound(pa_a.begin(), pa_a.end(), a), a);
    return pa_b == pa_a && g.spouses(b) == g.spouses(a);
}

struct DiffPick {
    int a, b;  // the edge a -> b to change next
};

// Shared selection rule of Theorems 1 and 2: among differing heads pick the
// one without a proper ancestor among them, then among its differing tails
// the one without a proper descendant among them; least index on ties.
std::optional<DiffPick> pick_difference(const MixedGraph& cur,
                                        const std::vector<std::pair<int, int>>& diff_edges) {
    if (diff_edges.empty()) return std::nullopt;
    std::uint64_t heads = 0;
    for (auto [x, y] : diff_edges) heads |= bit(y);
    int b = -1;
    for (int v : mask_to_indices(heads)) {
        if (((cur.ancestor_mask(v) & ~bit(v)) & heads) == 0) {
            b = v;
            break;
        }
    }
    if (b < 0) throw std::logic_error("no ancestor-minimal difference head (input graph cyclic?)");
    std::uint64_t tails = 0;
    for (auto [x, y] : diff_edges) {
        if (y == b) tails |= bit(x);
    }
    for (int v : mask_to_indices(tails)) {
        if (((cur.descendant_mask(v) & ~bit(v)) & tails) == 0) {
            return DiffPick{v, b};
        }
    }
    throw std::logic_error("no descendant-minimal difference tail (input graph cyclic?)");
}

void require_same_vertices(const MixedGraph& g1, const MixedGraph& g2) {
    if (!g1.same_vertices(g2)) {
        throw std::invalid_argument("graphs are over different vertex sets");
    }
}

void require_same_skeleton(const MixedGraph& g1, const MixedGraph& g2, const char* what) {
    for (int x = 0; x < g1.vertex_count(); ++x) {
        for (int y = x + 1; y < g1.vertex_count(); ++y) {
            if (g1.adjacent(x, y) != g2.adjacent(x, y)) {
                throw std::invalid_argument(std::string(what) + ": pair " + g1.name(x) + ", " +
                                            g1.name(y) + " is adjacent in exactly one graph");
            }
        }
    }
}

std::vector<MarkChange> cancel_adjacent_inverses(const std::vector<MarkChange>& changes) {
    std::vector<MarkChange> out;
    for (const MarkChange& c : changes) {
        if (!out.empty()) {
            const MarkChange& t = out.back();
            bool same_edge = std::minmax(t.x, t.y) == std::minmax(c.x, c.y);
            if (same_edge && t.at == c.at && t.to != c.to) {
                out.pop_back();
                continue;
            }
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

Verdict mark_change_legitimate(const MixedGraph& g, const MarkChange& c) {
    require_dmag(g, "input graph");
    validate_change(g, c);
    return legitimacy_unchecked(g, c);
}

Verdict reversal_legitimate(const MixedGraph& g, int a, int b) {
    require_dmag(g, "input graph");
    if (!g.adjacent(a, b) || g.mark_at(a, b) != Mark::Tail || g.mark_at(b, a) != Mark::Arrowhead) {
        throw std::invalid_argument("no directed edge " + g.name(a) + " -> " + g.name(b));
    }
    bool holds = covered_pair_condition(g, a, b);

    // Cross-check against the two constituent mark changes.
    Verdict add = legitimacy_unchecked(g, {a, b, a, Mark::Arrowhead});
    Verdict drop;
    if (add.holds) {
        MixedGraph mid = apply_mark_change(g, {a, b, a, Mark::Arrowhead});
        drop = legitimacy_unchecked(mid, {a, b, b, Mark::Tail});
    } else {
        drop.holds = false;
    }
    if ((add.holds && drop.holds) != holds) {
        throw std::logic_error("reversal condition disagrees with its constituent mark changes");
    }
    if (holds) return Verdict::pass();

    Verdict v;
    v.holds = false;
    v.witnesses = add.holds ? drop.witnesses : add.witnesses;
    return v;
}

std::vector<MarkChange> legitimate_changes(const MixedGraph& g) {
    require_dmag(g, "input graph");
    std::vector<MarkChange> out;
    for (const MarkChange& c : candidate_changes(g)) {
        if (legitimacy_unchecked(g, c).holds) out.push_back(c);
    }
    return out;
}

int mark_difference_count(const MixedGraph& g1, const MixedGraph& g2) {
    require_same_vertices(g1, g2);
    require_same_skeleton(g1, g2, "mark difference requires equal skeletons");
    int count = 0;
    for (int x = 0; x < g1.vertex_count(); ++x) {
        for (int y = x + 1; y < g1.vertex_count(); ++y) {
            if (!g1.adjacent(x, y)) continue;
            count += g1.mark_at(x, y) != g2.mark_at(x, y);
            count += g1.mark_at(y, x) != g2.mark_at(y, x);
        }
    }
    return count;
}

TransformationSequence replay(const MixedGraph& start, const std::vector<MarkChange>& changes,
                              bool check) {
    TransformationSequence seq;
    seq.start_digest = digest(start);
    MixedGraph cur = start;
    for (const MarkChange& c : changes) {
        if (check) {
            validate_change(cur, c);
            if (!legitimacy_unchecked(cur, c).holds) {
                throw std::logic_error("replayed sequence contains an illegitimate mark change");
            }
        }
        cur = apply_mark_change(cur, c);
        seq.steps.push_back({c, digest(cur)});
    }
    return seq;
}

TransformationSequence transform_theorem1(const MixedGraph& g, const MixedGraph& g2) {
    require_same_vertices(g, g2);
    require_dmag(g, "first graph");
    require_dmag(g2, "second graph");
    require_same_skeleton(g, g2, "transformation requires equal skeletons");
    for (int x = 0; x < g.vertex_count(); ++x) {
        for (int y = x + 1; y < g.vertex_count(); ++y) {
            EdgeKind k1 = g.edge_kind(x, y), k2 = g2.edge_kind(x, y);
            if (k1 == k2) continue;
            bool directed_to_bidirected =
                (k1 == EdgeKind::LoToHi || k1 == EdgeKind::HiToLo) && k2 == EdgeKind::Bidirected;
            if (!directed_to_bidirected) {
                throw std::invalid_argument("edge " + g.name(x) + ", " + g.name(y) +
                                            " is not a directed-to-bi-directed difference");
            }
        }
    }

    std::vector<MarkChange> changes;
    MixedGraph cur = g;
    while (true) {
        std::vector<std::pair<int, int>> diffs;
        for (auto [x, y] : cur.directed_edges()) {
            if (g2.edge_kind(x, y) == EdgeKind::Bidirected) diffs.emplace_back(x, y);
        }
        auto pick = pick_difference(cur, diffs);
        if (!pick) break;
        MarkChange c{pick->a, pick->b, pick->a, Mark::Arrowhead};
        Verdict legit = legitimacy_unchecked(cur, c);
        if (!legit.holds) {
            throw std::invalid_argument("graphs are not Markov equivalent (" +
                                        witness_text(legit) + ")");
        }
        cur = apply_mark_change(cur, c);
        changes.push_back(c);
    }
    return replay(g, changes);
}

TransformationSequence transform_theorem2(const MixedGraph& g, const MixedGraph& g2,
                                          std::size_t cap) {
    require_same_vertices(g, g2);
    require_dmag(g, "first graph");
    require_dmag(g2, "second graph");
    require_same_skeleton(g, g2, "transformation requires equal skeletons");
    for (int x = 0; x < g.vertex_count(); ++x) {
        for (int y = x + 1; y < g.vertex_count(); ++y) {
            EdgeKind k1 = g.edge_kind(x, y), k2 = g2.edge_kind(x, y);
            if ((k1 == EdgeKind::Bidirected) != (k2 == EdgeKind::Bidirected)) {
                throw std::invalid_argument("edge " + g.name(x) + ", " + g.name(y) +
                                            " is bi-directed in exactly one graph");
            }
        }
    }
    ClassSummary summary = enumerate_class(g, cap);
    for (auto [x, y] : g.bidirected_edges()) {
        bool invariant = std::find(summary.invariant_bidirected.begin(),
                                   summary.invariant_bidirected.end(),
                                   std::pair{x, y}) != summary.invariant_bidirected.end();
        if (!invariant) {
            throw std::invalid_argument("bi-directed edge " + g.name(x) + " <-> " + g.name(y) +
                                        " is not invariant in the equivalence class");
        }
    }

    std::vector<MarkChange> changes;
    MixedGraph cur = g;
    while (true) {
        std::vector<std::pair<int, int>> diffs;
        for (auto [x, y] : cur.directed_edges()) {
            EdgeKind k2 = g2.edge_kind(x, y);
            bool reversed_in_g2 = (x < y) ? k2 == EdgeKind::HiToLo : k2 == EdgeKind::LoToHi;
            if (reversed_in_g2) diffs.emplace_back(x, y);
        }
        auto pick = pick_difference(cur, diffs);
        if (!pick) break;
        int a = pick->a, b = pick->b;
        if (!covered_pair_condition(cur, a, b)) {
            throw std::invalid_argument("graphs are not Markov equivalent (reversal of " +
                                        cur.name(a) + " -> " + cur.name(b) + " is not legitimate)");
        }
        changes.push_back({a, b, a, Mark::Arrowhead});
        changes.push_back({a, b, b, Mark::Tail});
        cur = apply_mark_change(cur, changes[changes.size() - 2]);
        cur = apply_mark_change(cur, changes.back());
    }
    return replay(g, changes);
}

ClassSummary enumerate_class(const MixedGraph& g, std::size_t cap) {
    require_dmag(g, "input graph");
    std::map<std::string, MixedGraph> members;
    std::deque<MixedGraph> frontier;
    members.emplace(serialize_graph(g), g);
    frontier.push_back(g);
    while (!frontier.empty()) {
        MixedGraph cur = frontier.front();
        frontier.pop_front();
        for (MixedGraph& next : successors_unchecked(cur)) {
            std::string key = serialize_graph(next);
            if (members.emplace(std::move(key), next).second) {
                if (members.size() > cap) throw CapExceeded(cap);
                frontier.push_back(std::move(next));
            }
        }
    }

    ClassSummary out;
    for (auto& [key, member] : members) out.members.push_back(member);

    const MixedGraph& first = out.members.front();
    for (int x = 0; x < first.vertex_count(); ++x) {
        for (int y = x + 1; y < first.vertex_count(); ++y) {
            if (!first.adjacent(x, y)) continue;
            for (int at : {x, y}) {
                int other = (at == x) ? y : x;
                bool all_arrow = true, all_tail = true;
                for (const MixedGraph& m : out.members) {
                    (m.mark_at(at, other) == Mark::Arrowhead ? all_tail : all_arrow) = false;
                }
                if (all_arrow) out.invariant_arrowheads.push_back({x, y, at});
                if (all_tail) out.invariant_tails.push_back({x, y, at});
            }
            bool all_bidirected = true;
            for (const MixedGraph& m : out.members) {
                if (m.edge_kind(x, y) != EdgeKind::Bidirected) {
                    all_bidirected = false;
                    break;
                }
            }
            if (all_bidirected) out.invariant_bidirected.emplace_back(x, y);
        }
    }
    return out;
}

MixedGraph find_leg(const MixedGraph& g, std::size_t cap) {
    ClassSummary summary = enumerate_class(g, cap);
    auto directed = g.directed_edges();
    for (const MixedGraph& h : summary.members) {
        bool loyal = true;
        for (auto [x, y] : h.bidirected_edges()) {
            if (std::find(summary.invariant_bidirected.begin(), summary.invariant_bidirected.end(),
                          std::pair{x, y}) == summary.invariant_bidirected.end()) {
                loyal = false;
                break;
            }
        }
        if (!loyal) continue;
        for (auto [x, y] : directed) {
            EdgeKind k = h.edge_kind(x, y);
            bool same = (x < y) ? k == EdgeKind::LoToHi : k == EdgeKind::HiToLo;
            if (!same) {
                loyal = false;
                break;
            }
        }
        if (loyal) return h;
    }
    throw std::logic_error("no loyal equivalent graph found; this contradicts Proposition 2");
}

TransformationSequence transform_full(const MixedGraph& g, const MixedGraph& g2, std::size_t cap) {
    require_same_vertices(g, g2);
    require_dmag(g, "first graph");
    require_dmag(g2, "second graph");
    if (auto q = distinguishing_query(g, g2)) {
        throw std::invalid_argument("graphs are not Markov equivalent: " + *q);
    }

    MixedGraph leg1 = find_leg(g, cap);
    MixedGraph leg2 = find_leg(g2, cap);

    // s1: g to its LEG, as the inverse of the arrowhead additions LEG -> g
    std::vector<MarkChange> changes;
    {
        TransformationSequence fwd = transform_theorem1(leg1, g);
        for (auto it = fwd.steps.rbegin(); it != fwd.steps.rend(); ++it) {
            MarkChange inv = it->change;
            inv.to = Mark::Tail;
            changes.push_back(inv);
        }
    }
    for (const auto& step : transform_theorem2(leg1, leg2, cap).steps) changes.push_back(step.change);
    for (const auto& step : transform_theorem1(leg2, g2).steps) changes.push_back(step.change);

    changes = cancel_adjacent_inverses(changes);
    TransformationSequence seq = replay(g, changes, /*check=*/true);

    MixedGraph final_graph = g;
    for (const MarkChange& c : changes) final_graph = apply_mark_change(final_graph, c);
    if (!(final_graph == g2)) {
        throw std::logic_error("transformation did not reach the target graph");
    }
    return seq;
}

TransformationSequence shortest_transform(const MixedGraph& g, const MixedGraph& g2,
                                          std::size_t cap) {
    require_same_vertices(g, g2);
    require_dmag(g, "first graph");
    require_dmag(g2, "second graph");
    if (auto q = distinguishing_query(g, g2)) {
        throw std::invalid_argument("graphs are not Markov equivalent: " + *q);
    }

    std::string target = serialize_graph(g2);
    std::string start = serialize_graph(g);
    if (start == target) return replay(g, {});

    struct Origin {
        std::string from;
        MarkChange via;
    };
    std::map<std::string, Origin> origin;
    std::map<std::string, MixedGraph> known;
    known.emplace(start, g);
    std::deque<MixedGraph> frontier{g};
    while (!frontier.empty()) {
        MixedGraph cur = frontier.front();
        frontier.pop_front();
        std::string cur_key = serialize_graph(cur);
        for (const MarkChange& c : candidate_changes(cur)) {
            if (!legitimacy_unchecked(cur, c).holds) continue;
            MixedGraph next = apply_mark_change(cur, c);
            std::string key = serialize_graph(next);
            if (known.count(key)) continue;
            if (known.size() >= cap) throw CapExceeded(cap);
            known.emplace(key, next);
            origin.emplace(key, Origin{cur_key, c});
            if (key == target) {
                std::vector<MarkChange> changes;
                for (std::string at = key; at != start; at = origin.at(at).from) {
                    changes.push_back(origin.at(at).via);
                }
                std::reverse(changes.begin(), changes.end());
                return replay(g, changes);
            }
            frontier.push_back(next);
        }
    }
    throw std::logic_error("equivalent graph not reachable by legitimate mark changes");
}

}  // namespace dmag
