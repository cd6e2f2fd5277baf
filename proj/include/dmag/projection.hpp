#pragma once

#include "dmag/mixed_graph.hpp"
#include "dmag/reachability.hpp"

namespace dmag {

/// A DAG together with a designated subset of latent vertices. Validated on
/// construction: directed edges only, acyclic, latents a proper subset of
/// the vertices (the observed set must be nonempty).
class LatentDag {
public:
    LatentDag(MixedGraph dag, std::vector<std::string> latents);

    const MixedGraph& dag() const noexcept { return dag_; }
    std::uint64_t latent_mask() const noexcept { return latent_mask_; }
    std::vector<std::string> latent_names() const;
    std::vector<std::string> observed_names() const;
    std::vector<int> observed_indices() const;

private:
    MixedGraph dag_;
    std::uint64_t latent_mask_ = 0;
};

/// The DMAG over the observed vertices: an edge between Oi and Oj iff no
/// subset of the other observed vertices d-separates them in the DAG, with
/// an arrowhead at Oi iff Oi is not an ancestor of Oj there. The result is
/// checked to be a DMAG before being returned.
MixedGraph project(const LatentDag& d);

/// d-separation in the DAG; on DAGs the m-separation criterion is exactly
/// classical d-separation, so this delegates to it.
bool d_separated(const LatentDag& d, const SeparationQuery& q);

}  // namespace dmag
