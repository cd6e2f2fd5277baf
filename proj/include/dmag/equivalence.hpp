#pragma once

#include "dmag/mixed_graph.hpp"
#include "dmag/reachability.hpp"

namespace dmag {

struct UnshieldedTriple {
    int a, b, c;  // a-b and b-c adjacent, a-c not; a < c canonically
    bool collider;

    friend bool operator==(const UnshieldedTriple&, const UnshieldedTriple&) = default;
};

/// A path <X, ..., W, V, Y> of at least three edges where X and Y are not
/// adjacent and every vertex strictly between X and V is a collider on the
/// path and a parent of Y. Whether V is a collider on it is then forced to
/// agree across Markov equivalent graphs.
struct DiscriminatingPath {
    std::vector<int> vertices;  // <X, ..., W, V, Y>
    int discriminated;          // V == vertices[size - 2]
    bool collider_at_v;
};

/// All unshielded triples <a, b, c> whose middle vertex is a collider,
/// deduplicated (a < c) and in canonical order.
std::vector<UnshieldedTriple> unshielded_colliders(const MixedGraph& g);

/// All discriminating paths for v whose far endpoint is y; v and y must be
/// adjacent. Empty when none exist.
std::vector<DiscriminatingPath> discriminating_paths_for(const MixedGraph& g, int v, int y);

/// Syntactic Markov equivalence test for DMAGs on the same vertex set:
/// (e1) same adjacencies, (e2) same unshielded colliders, (e3) any path
/// discriminating for a vertex in BOTH graphs gives it the same collider
/// status. Non-DMAG inputs are rejected.
Verdict markov_equivalent(const MixedGraph& g1, const MixedGraph& g2);

/// Semantic ground truth: equal m-separation verdicts for every vertex pair
/// and every conditioning subset of the remaining vertices. Exponential in
/// the vertex count; intended for desk-scale graphs and testing.
bool markov_equivalent_oracle(const MixedGraph& g1, const MixedGraph& g2);

/// Least (a, b, Z) on which the two graphs disagree, as a human-readable
/// description; nullopt when equivalent. Used for error reporting.
std::optional<std::string> distinguishing_query(const MixedGraph& g1, const MixedGraph& g2);

}  // namespace dmag
