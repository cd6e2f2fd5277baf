#include "dmag/projection.hpp"

namespace dmag {

LatentDag::LatentDag(MixedGraph dag, std::vector<std::string> latents) : dag_(std::move(dag)) {
    if (!dag_.bidirected_edges().empty()) {
        throw std::invalid_argument("latent-projection input must be a DAG (bi-directed edge found)");
    }
    Verdict anc = is_ancestral(dag_);
    if (!anc.holds) {
        throw std::invalid_argument("latent-projection input must be acyclic");
    }
    for (const auto& nm : latents) latent_mask_ |= bit(dag_.index_of(nm));
    std::uint64_t all = dag_.vertex_count() == 64 ? ~std::uint64_t{0} : bit(dag_.vertex_count()) - 1;
    if (latent_mask_ == all) {
        throw std::invalid_argument("at least one vertex must be observed");
    }
}

std::vector<std::string> LatentDag::latent_names() const {
    std::vector<std::string> out;
    for (int v : mask_to_indices(latent_mask_)) out.push_back(dag_.name(v));
    return out;
}

std::vector<int> LatentDag::observed_indices() const {
    std::vector<int> out;
    for (int v = 0; v < dag_.vertex_count(); ++v) {
        if (!(latent_mask_ & bit(v))) out.push_back(v);
    }
    return out;
}

std::vector<std::string> LatentDag::observed_names() const {
    std::vector<std::string> out;
    for (int v : observed_indices()) out.push_back(dag_.name(v));
    return out;
}

MixedGraph project(const LatentDag& d) {
    const MixedGraph& dag = d.dag();
    std::vector<int> obs = d.observed_indices();
    MixedGraph out(d.observed_names());

    std::uint64_t obs_mask = 0;
    for (int v : obs) obs_mask |= bit(v);

    for (std::size_t i = 0; i < obs.size(); ++i) {
        for (std::size_t j = i + 1; j < obs.size(); ++j) {
            int oi = obs[i], oj = obs[j];
            std::uint64_t others = obs_mask & ~(bit(oi) | bit(oj));
            bool separable = false;
            std::uint64_t z = 0;
            while (true) {
                if (!m_connected(dag, oi, oj, z)) {
                    separable = true;
                    break;
                }
                if (z == others) break;
                z = (z - others) & others;
            }
            if (separable) continue;
            bool head_at_i = !(dag.ancestor_mask(oj) & bit(oi));  // Oi not an ancestor of Oj
            bool head_at_j = !(dag.ancestor_mask(oi) & bit(oj));
            if (!head_at_i && !head_at_j) {
                throw std::logic_error("projection produced a two-tail edge; input is not a DAG");
            }
            out.add_edge(static_cast<int>(i), static_cast<int>(j),
                         head_at_i ? Mark::Arrowhead : Mark::Tail,
                         head_at_j ? Mark::Arrowhead : Mark::Tail);
        }
    }

    Verdict check = is_dmag(out);
    if (!check.holds) {
        throw std::logic_error("latent projection did not produce a DMAG (" +
                               check.witnesses.front().tag + " fails)");
    }
    return out;
}

bool d_separated(const LatentDag& d, const SeparationQuery& q) {
    return m_separated(d.dag(), q);
}

}  // namespace dmag
