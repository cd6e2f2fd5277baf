#pragma once

#include <random>

#include "dmag/projection.hpp"
#include "dmag/transform.hpp"

namespace dmag {

/// Random DAG over the given vertex names: a uniformly random topological
/// order, then each pair receives an edge with probability edge_prob,
/// oriented along the order.
MixedGraph random_dag(const std::vector<std::string>& names, double edge_prob,
                      std::mt19937_64& rng);

/// Random DAG over `observed + latent_count` vertices with the latents
/// designated; observed vertices are named X1..Xn, latents L1..Lk.
LatentDag random_latent_dag(int observed, int latent_count, double edge_prob,
                            std::mt19937_64& rng);

/// Random DMAG over `observed` vertices, obtained by projecting a random
/// DAG with up to max_latents latent variables. Always a valid DMAG.
MixedGraph random_dmag(int observed, int max_latents, double edge_prob, std::mt19937_64& rng);

/// Uniformly random member of g's Markov equivalence class.
MixedGraph random_class_member(const MixedGraph& g, std::mt19937_64& rng,
                               std::size_t cap = kDefaultClassCap);

}  // namespace dmag
