#include "dmag/random.hpp"

#include <algorithm>
#include <numeric>

namespace dmag {

MixedGraph random_dag(const std::vector<std::string>& names, double edge_prob,
                      std::mt19937_64& rng) {
    MixedGraph g(names);
    int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (coin(rng) >= edge_prob) continue;
            bool x_first = rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)];
            int from = x_first ? x : y;
            int to = x_first ? y : x;
            g.add_edge(from, to, Mark::Tail, Mark::Arrowhead);
        }
    }
    return g;
}

LatentDag random_latent_dag(int observed, int latent_count, double edge_prob,
                            std::mt19937_64& rng) {
    std::vector<std::string> names;
    for (int i = 1; i <= observed; ++i) names.push_back("X" + std::to_string(i));
    std::vector<std::string> latents;
    for (int i = 1; i <= latent_count; ++i) latents.push_back("L" + std::to_string(i));
    names.insert(names.end(), latents.begin(), latents.end());
    return LatentDag(random_dag(names, edge_prob, rng), latents);
}

MixedGraph random_dmag(int observed, int max_latents, double edge_prob, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> lat(0, max_latents);
    return project(random_latent_dag(observed, lat(rng), edge_prob, rng));
}

MixedGraph random_class_member(const MixedGraph& g, std::mt19937_64& rng, std::size_t cap) {
    ClassSummary summary = enumerate_class(g, cap);
    std::uniform_int_distribution<std::size_t> pick(0, summary.members.size() - 1);
    return summary.members[pick(rng)];
}

}  // namespace dmag
