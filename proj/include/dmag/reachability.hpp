#pragma once

#include <optional>

#include "dmag/mixed_graph.hpp"

namespace dmag {

/// Ordered pair of disjoint vertex sets plus a conditioning set.
struct SeparationQuery {
    std::vector<std::string> x;
    std::vector<std::string> y;
    std::vector<std::string> z;
};

enum class Role : std::uint8_t { Collider, NonCollider };

/// A concrete path plus the role each interior vertex plays on it.
struct PathWitness {
    std::vector<int> vertices;
    std::vector<Role> roles;  // one per interior vertex

    std::vector<std::string> vertex_names(const MixedGraph& g) const;
};

/// Renders a path with its edge operators, e.g. "A -> B <-> C".
std::string format_path(const MixedGraph& g, const std::vector<int>& vertices);

/// True when there is a path between a and b that is active relative to the
/// conditioning set: every non-collider outside z, every collider an
/// ancestor of some member of z. Runs a reachability search over
/// (vertex, mark-of-arrival) states; a vertex may be re-entered with a
/// different arrival mark but not the same one.
bool m_connected(const MixedGraph& g, int a, int b, std::uint64_t z);

/// Like m_connected but materializes an active path as the witness.
std::optional<PathWitness> m_connecting_path(const MixedGraph& g, int a, int b, std::uint64_t z);
std::optional<PathWitness> m_connecting_path(const MixedGraph& g, std::string_view a,
                                             std::string_view b,
                                             const std::vector<std::string>& z);

/// Set-level m-separation, reduced to pairwise queries over x cross y.
bool m_separated(const MixedGraph& g, std::uint64_t x, std::uint64_t y, std::uint64_t z);
bool m_separated(const MixedGraph& g, const SeparationQuery& q);

/// An inducing path between a and b: every interior vertex is a collider on
/// the path and an ancestor of a or b. A single edge counts (no interior
/// vertices). Requires an ancestral graph. The returned witness is a
/// shortest inducing path.
std::optional<PathWitness> inducing_path(const MixedGraph& g, int a, int b);

/// Existence-only variant of inducing_path (skips the ancestral check so it
/// can serve is_maximal, which validates once up front).
bool has_inducing_path(const MixedGraph& g, int a, int b);

/// Maximality: every non-adjacent pair has a separating set, equivalently no
/// non-adjacent pair has an inducing path. Witnesses carry the inducing path
/// (endpoints are the offending pair). Requires an ancestral graph.
Verdict is_maximal(const MixedGraph& g);

/// Ancestral and maximal; first failure wins.
Verdict is_dmag(const MixedGraph& g);

std::uint64_t vertex_mask(const MixedGraph& g, const std::vector<std::string>& names);

}  // namespace dmag
