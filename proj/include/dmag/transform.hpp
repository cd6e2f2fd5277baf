#pragma once

#include "dmag/equivalence.hpp"
#include "dmag/mixed_graph.hpp"

namespace dmag {

struct TransformationStep {
    MarkChange change;
    std::string digest;  // canonical-form digest of the graph after the step
};

/// An ordered list of single mark changes; replaying them from the start
/// graph reproduces each step digest, and for sequences produced by this
/// module every intermediate graph is a Markov equivalent DMAG.
struct TransformationSequence {
    std::string start_digest;
    std::vector<TransformationStep> steps;
};

/// (edge, endpoint) position of one mark.
struct MarkPosition {
    int x, y;  // x < y
    int at;

    friend bool operator==(const MarkPosition&, const MarkPosition&) = default;
};

/// A Markov equivalence class obtained by closure under legitimate mark
/// changes, with the marks shared by every member.
struct ClassSummary {
    std::vector<MixedGraph> members;  // canonical order (by serialization)
    std::vector<MarkPosition> invariant_arrowheads;
    std::vector<MarkPosition> invariant_tails;
    std::vector<std::pair<int, int>> invariant_bidirected;
};

inline constexpr std::size_t kDefaultClassCap = 100000;

/// Whether a single mark change preserves DMAG-ness and Markov equivalence.
///
/// Adding an arrowhead (A -> B becomes A <-> B) is legitimate iff, in g:
///   (t1) no directed path from A to B other than the edge itself;
///   (t2) every parent of A is a parent of B, and every spouse of A is a
///        parent or spouse of B;
///   (t3) no discriminating path for A on which B is the endpoint adjacent
///        to A.
/// Dropping an arrowhead (A <-> B becomes A -> B) is legitimate iff t1-t3
/// hold for A -> B in the candidate result graph, so that re-adding the
/// arrowhead would be legitimate there.
Verdict mark_change_legitimate(const MixedGraph& g, const MarkChange& c);

/// Reversal of A -> B (two consecutive mark changes) is legitimate iff
/// Pa(B) = Pa(A) + {A} and Sp(B) = Sp(A).
Verdict reversal_legitimate(const MixedGraph& g, int a, int b);

/// All mark changes of g that are legitimate, in canonical order.
std::vector<MarkChange> legitimate_changes(const MixedGraph& g);

/// Number of (edge, endpoint) positions at which the marks differ; the
/// graphs must share vertex set and skeleton.
int mark_difference_count(const MixedGraph& g1, const MixedGraph& g2);

/// Constructive sequence for equivalent DMAGs whose differing edges are all
/// directed in g and bi-directed in g2: one legitimate arrowhead addition
/// per differing edge. Picks the head B among differing heads with no
/// proper ancestor among them, then the tail A among B's differing parents
/// with no proper descendant among them; ties go to the least vertex.
TransformationSequence transform_theorem1(const MixedGraph& g, const MixedGraph& g2);

/// Constructive sequence for equivalent DMAGs whose bi-directed edges all
/// coincide with the class-invariant ones: one legitimate edge reversal
/// (two mark changes) per oppositely oriented directed edge, selected by
/// the same rule as transform_theorem1.
TransformationSequence transform_theorem2(const MixedGraph& g, const MixedGraph& g2,
                                          std::size_t cap = kDefaultClassCap);

/// Breadth-first closure of g under legitimate single mark changes, with
/// invariant marks computed by intersection over the members. Throws
/// CapExceeded when the class grows past the cap.
ClassSummary enumerate_class(const MixedGraph& g, std::size_t cap = kDefaultClassCap);

/// A member of g's class whose bi-directed edges are all invariant and
/// which keeps every directed edge of g; ties broken to the least canonical
/// form. Such a member always exists.
MixedGraph find_leg(const MixedGraph& g, std::size_t cap = kDefaultClassCap);

/// Full pipeline between equivalent DMAGs: g to its LEG (dropping
/// arrowheads), LEG to LEG (reversals), LEG to g2 (adding arrowheads), with
/// adjacent mutually-inverse steps pruned after concatenation.
TransformationSequence transform_full(const MixedGraph& g, const MixedGraph& g2,
                                      std::size_t cap = kDefaultClassCap);

/// Minimum-length sequence, by breadth-first search over the class graph
/// restricted to legitimate moves.
TransformationSequence shortest_transform(const MixedGraph& g, const MixedGraph& g2,
                                          std::size_t cap = kDefaultClassCap);

/// Replays a change list from start, recording digests. Verifies each
/// change is legitimate when `check` is set.
TransformationSequence replay(const MixedGraph& start, const std::vector<MarkChange>& changes,
                              bool check = false);

}  // namespace dmag
