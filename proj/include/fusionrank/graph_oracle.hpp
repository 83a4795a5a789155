#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionrank/qfield.hpp"

namespace fusionrank {

struct SimpleGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t degree(std::size_t v) const;
};

/// 2k-cycle plus the k rungs {i, i+k}. k >= 2.
SimpleGraph moebius_ladder(std::int64_t k);

inline constexpr std::size_t kMaxNoLeafEdges = 24;

/// Number of edge subsets (empty set included) whose subgraph has no vertex
/// of degree exactly 1. Throws SizeGuardExceeded above kMaxNoLeafEdges edges.
BigInt count_noleaf_subgraphs(const SimpleGraph& graph, int threads = 0);

/// Single-threaded reference for count_noleaf_subgraphs.
BigInt count_noleaf_subgraphs_serial(const SimpleGraph& graph);

/// {"vertex_count": 4, "edges": [[0, 1], ...]}. Throws ParseError.
SimpleGraph load_simple_graph(std::string_view document);

}  // namespace fusionrank
