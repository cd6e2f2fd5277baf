#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmag {

/// The symbol at one end of an edge. There is no third mark: undirected
/// edges are outside the scope of this library and are rejected at parse
/// time.
enum class Mark : std::uint8_t { Arrowhead, Tail };

/// Orientation of the edge stored for an unordered vertex pair (lo < hi).
enum class EdgeKind : std::uint8_t { None = 0, LoToHi, HiToLo, Bidirected };

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Thrown when a class enumeration exceeds its member cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(std::size_t cap);
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

struct Witness {
    std::string tag;                    // a1, a2, maximality, t1..t3, e1..e3
    std::vector<std::string> vertices;  // meaning depends on the tag
    std::string detail;
};

/// Boolean decision plus machine-readable evidence. holds == true implies
/// witnesses is empty; holds == false implies at least one witness.
struct Verdict {
    bool holds = true;
    std::vector<Witness> witnesses;

    explicit operator bool() const noexcept { return holds; }

    static Verdict pass() { return {}; }
    static Verdict fail(Witness w) { return {false, {std::move(w)}}; }
};

/// A graph over named vertices whose edges are directed (one arrowhead, one
/// tail) or bi-directed (two arrowheads). At most one edge per vertex pair,
/// no self loops; an edge with two tails is unrepresentable.
///
/// Vertices are kept in lexicographic name order and addressed by index;
/// every set-valued result is emitted in that order. Values are cheap to
/// copy (the name table is shared) and immutable in normal use: all
/// operations are const and transformation produces new graphs.
class MixedGraph {
public:
    MixedGraph();
    explicit MixedGraph(std::vector<std::string> vertex_names);

    int vertex_count() const noexcept { return n_; }
    const std::string& name(int v) const { return (*names_)[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    std::optional<int> find(std::string_view name) const noexcept;
    int index_of(std::string_view name) const;  // throws on unknown vertex

    bool adjacent(int x, int y) const;
    EdgeKind edge_kind(int x, int y) const;  // None when not adjacent
    /// Mark at x on the edge between x and y; the edge must exist.
    Mark mark_at(int x, int y) const;

    /// Construction-time mutation. Rejects self loops, duplicate edges and
    /// two-tail edges.
    void add_edge(int x, int y, Mark at_x, Mark at_y);
    void add_edge(std::string_view x, std::string_view y, Mark at_x, Mark at_y);

    std::vector<int> neighbors(int v) const;
    std::vector<int> parents(int v) const;
    std::vector<int> children(int v) const;
    std::vector<int> spouses(int v) const;

    /// Ancestors of v including v itself (the reflexive convention used
    /// throughout), as a bit mask over vertex indices.
    std::uint64_t ancestor_mask(int v) const;
    std::uint64_t descendant_mask(int v) const;
    /// Union of reflexive ancestor sets over a set of vertices.
    std::uint64_t ancestor_mask(std::uint64_t vertices) const;

    /// Name-level view of ancestor_mask, canonical order.
    std::vector<std::string> ancestors(std::string_view v) const;

    struct Edge {
        int x, y;  // x < y
        Mark at_x, at_y;
    };
    std::vector<Edge> edges() const;
    std::vector<std::pair<int, int>> directed_edges() const;    // (tail end, head)
    std::vector<std::pair<int, int>> bidirected_edges() const;  // (lo, hi)
    int edge_count() const;
    int bidirected_count() const;

    /// Adjacency structure with all marks erased: one EdgeKind::None /
    /// non-None flag per pair, usable as an equality key.
    std::vector<bool> skeleton() const;

    bool same_vertices(const MixedGraph& other) const;
    friend bool operator==(const MixedGraph& a, const MixedGraph& b);

    // Internal pair-state access used by the combinatorial modules.
    int pair_index(int x, int y) const;
    EdgeKind state_at(int pair_idx) const { return states_[static_cast<std::size_t>(pair_idx)]; }
    MixedGraph with_state(int x, int y, EdgeKind k) const;

private:
    void check_vertex(int v) const;

    std::shared_ptr<const std::vector<std::string>> names_;
    std::vector<EdgeKind> states_;  // triangular, pair (x,y) with x < y
    int n_ = 0;
};

/// One endpoint of one edge plus the new mark; the atomic transformation
/// step. `at` must be one of the edge's endpoints.
struct MarkChange {
    int x, y;  // the edge, any order
    int at;    // endpoint whose mark changes
    Mark to;
};

/// Returns a copy of g with the single mark changed. Throws when the edge is
/// missing or the change would produce a two-tail edge.
MixedGraph apply_mark_change(const MixedGraph& g, const MarkChange& c);

/// Definition of ancestral: (a1) no directed cycle, (a2) no spouse pair
/// A <-> B with A a proper ancestor of B. Witnesses carry the cycle (a1) or
/// the (spouse, ancestor) pair (a2).
Verdict is_ancestral(const MixedGraph& g);

// --- text format ------------------------------------------------------
//
// One edge per line, "X -> Y" or "X <-> Y"; an optional line
// "vertices: V1 V2 ..." declares the vertex set (required for isolated
// vertices); '#' starts a comment; vertex names match [A-Za-z0-9_.]+.

MixedGraph parse_graph(std::string_view text);
std::string serialize_graph(const MixedGraph& g);

/// DOT export; directed edges as -> with arrowhead=normal/arrowtail=none,
/// bi-directed edges with both arrowheads.
std::string to_dot(const MixedGraph& g, std::string_view graph_name = "g");

/// Stable content hash (FNV-1a 64) of the canonical serialization, as 16
/// hex digits. Equal graphs always digest equally.
std::string digest(const MixedGraph& g);

// mask helpers shared by the query modules
inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
std::vector<int> mask_to_indices(std::uint64_t mask);

}  // namespace dmag
