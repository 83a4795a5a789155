#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fusionrank/dual_graph.hpp"

namespace testing_support {

/// Random connected stable dual graph with at most max_vertices vertices and
/// max_edges edges (loops and parallel edges included). Legs are drawn from
/// leg_ids; vertex genus from 0..max_genus.
inline fusionrank::DualGraph random_stable_graph(std::mt19937_64& rng, const std::vector<std::string>& leg_ids,
                                                 std::size_t max_vertices = 4, std::size_t max_edges = 6,
                                                 std::int64_t max_genus = 1) {
    using fusionrank::DualGraph;
    while (true) {
        DualGraph g;
        const std::size_t v = 1 + rng() % max_vertices;
        for (std::size_t i = 0; i < v; ++i) {
            DualGraph::Vertex vert;
            vert.genus = static_cast<std::int64_t>(rng() % (max_genus + 1));
            const std::size_t legs = rng() % 3;
            for (std::size_t k = 0; k < legs; ++k) vert.legs.push_back(leg_ids[rng() % leg_ids.size()]);
            g.vertices.push_back(std::move(vert));
        }
        // spanning tree
        for (std::size_t i = 1; i < v; ++i) g.edges.emplace_back(rng() % i, i);
        if (g.edges.size() > max_edges) continue;
        const std::size_t extra = rng() % (max_edges - g.edges.size() + 1);
        for (std::size_t i = 0; i < extra; ++i) g.edges.emplace_back(rng() % v, rng() % v);

        // patch unstable vertices with an extra leg where possible
        for (std::size_t i = 0; i < v; ++i) {
            while (2 * g.vertices[i].genus - 2 + static_cast<std::int64_t>(g.valence(i)) <= 0) {
                g.vertices[i].legs.push_back(leg_ids[rng() % leg_ids.size()]);
            }
        }
        return g;
    }
}

/// Same graph with vertices renumbered by a random permutation.
inline fusionrank::DualGraph permute_vertices(const fusionrank::DualGraph& g, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(g.vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    fusionrank::DualGraph out;
    out.vertices.resize(g.vertices.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out.vertices[perm[i]] = g.vertices[i];
    for (const auto& [x, y] : g.edges) {
        if (rng() % 2) {
            out.edges.emplace_back(perm[x], perm[y]);
        } else {
            out.edges.emplace_back(perm[y], perm[x]);
        }
    }
    return out;
}

}  // namespace testing_support
