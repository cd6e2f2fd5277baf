#pragma once

#include <cstdint>
#include <vector>

#include "dmag/mixed_graph.hpp"

// Brute-force reference implementations, kept deliberately independent of
// the reachability-based code paths they are used to check: everything here
// works by exhaustive enumeration of simple paths or subsets, straight from
// the definitions.
namespace dmag::testing {

std::vector<std::vector<int>> all_simple_paths(const MixedGraph& g, int a, int b);

/// Active path per the m-separation definition: every non-collider outside
/// z, every collider with a directed path into z.
bool oracle_path_active(const MixedGraph& g, const std::vector<int>& path, std::uint64_t z);

bool oracle_m_connected(const MixedGraph& g, int a, int b, std::uint64_t z);

std::vector<std::vector<int>> oracle_inducing_paths(const MixedGraph& g, int a, int b);

/// Whether some subset of the remaining vertices m-separates a and b.
bool oracle_separable(const MixedGraph& g, int a, int b);

/// Ancestral check by simple directed-path enumeration.
bool oracle_is_ancestral(const MixedGraph& g);

/// Classical d-separation on DAGs via moralization: drop to the subgraph
/// induced on the ancestor closure of x, y and z, marry parents, and test
/// undirected reachability avoiding z.
bool oracle_d_separated_moral(const MixedGraph& dag, int x, int y, std::uint64_t z);

}  // namespace dmag::testing
