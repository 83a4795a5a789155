#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fusionrank {

/// Stable-curve dual graph: vertices are components, edges are nodes,
/// legs are marked points carrying label ids. Loops and parallel edges are
/// allowed. Ring-agnostic; labels are resolved when a rank is computed.
struct DualGraph {
    struct Vertex {
        std::int64_t genus = 0;
        std::vector<std::string> legs;

        friend bool operator==(const Vertex&, const Vertex&) = default;
    };
    using Edge = std::pair<std::size_t, std::size_t>;

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    /// legs + incident edge ends (a loop counts twice).
    std::size_t valence(std::size_t v) const;
    std::size_t leg_count() const;
    /// sum of vertex genera + E - V + 1
    std::int64_t total_genus() const;
    bool connected() const;

    /// Throws GraphError naming the first offending vertex or edge.
    void check() const;

    friend bool operator==(const DualGraph&, const DualGraph&) = default;
};

/// One genus-0 vertex with n legs and g loops (an irreducible curve with g
/// nodes). Throws PreconditionError for g < 1 and GraphError when unstable.
DualGraph fig_a_graph(std::int64_t g, std::int64_t n, std::string_view leg = "mu");

/// Genus-0 spine carrying the n legs, with g genus-1 tails hanging off it by
/// one edge each. Requires n + g >= 3 for a stable spine.
DualGraph fig_b_graph(std::int64_t g, std::int64_t n, std::string_view leg = "mu");

/// {"vertices": [{"genus": 0, "legs": ["mu"]}, ...], "edges": [[0, 1], [0, 0]]}
/// Throws ParseError; does not run check().
DualGraph load_dual_graph(std::string_view document);
nlohmann::ordered_json to_json(const DualGraph& graph);

}  // namespace fusionrank
