#include "fusionrank/graph_oracle.hpp"

#include <bit>

#include <omp.h>

#include "fusionrank/errors.hpp"
#include "json_util.hpp"

namespace fusionrank {

std::size_t SimpleGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& [x, y] : edges) d += (x == v) + (y == v);
    return d;
}

SimpleGraph moebius_ladder(std::int64_t k) {
    if (k < 2) throw PreconditionError("moebius_ladder requires k >= 2");
    const auto half = static_cast<std::size_t>(k);
    SimpleGraph g;
    g.vertex_count = 2 * half;
    for (std::size_t i = 0; i < g.vertex_count; ++i) g.edges.emplace_back(i, (i + 1) % g.vertex_count);
    for (std::size_t i = 0; i < half; ++i) g.edges.emplace_back(i, i + half);
    return g;
}

namespace {

// incident[v]: bitmask of edges touching v
std::vector<std::uint32_t> incidence(const SimpleGraph& graph) {
    if (graph.edges.size() > kMaxNoLeafEdges) {
        throw SizeGuardExceeded("no-leaf enumeration limited to " + std::to_string(kMaxNoLeafEdges) + " edges");
    }
    std::vector<std::uint32_t> incident(graph.vertex_count, 0);
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto [x, y] = graph.edges[e];
        if (x >= graph.vertex_count || y >= graph.vertex_count) {
            throw PreconditionError("edge " + std::to_string(e) + " references a missing vertex");
        }
        incident[x] |= std::uint32_t{1} << e;
        incident[y] |= std::uint32_t{1} << e;
    }
    return incident;
}

bool leafless(std::uint32_t subset, const std::vector<std::uint32_t>& incident) {
    for (auto mask : incident) {
        if (std::popcount(subset & mask) == 1) return false;
    }
    return true;
}

}  // namespace

BigInt count_noleaf_subgraphs_serial(const SimpleGraph& graph) {
    const auto incident = incidence(graph);
    const std::uint64_t subsets = std::uint64_t{1} << graph.edges.size();
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < subsets; ++s) count += leafless(static_cast<std::uint32_t>(s), incident);
    return BigInt(static_cast<unsigned long>(count));
}

BigInt count_noleaf_subgraphs(const SimpleGraph& graph, int threads) {
    const auto incident = incidence(graph);
    const auto subsets = static_cast<std::int64_t>(std::uint64_t{1} << graph.edges.size());
    const int team = threads > 0 ? threads : omp_get_max_threads();
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count) num_threads(team)
    for (std::int64_t s = 0; s < subsets; ++s) count += leafless(static_cast<std::uint32_t>(s), incident);
    return BigInt(static_cast<unsigned long>(count));
}

SimpleGraph load_simple_graph(std::string_view document) {
    using detail::require;
    const auto root = detail::parse_json(document);
    if (!root.is_object()) throw ParseError("graph: expected a JSON object");
    SimpleGraph g;
    const auto count = detail::require_integer(require(root, "vertex_count", "graph"), "vertex_count");
    if (count < 1) throw ParseError("vertex_count: must be positive");
    g.vertex_count = static_cast<std::size_t>(count);
    const auto& edges = detail::require_array(require(root, "edges", "graph"), "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const auto& e = detail::require_array(edges[i], where);
        if (e.size() != 2) throw ParseError(where + ": expected a pair of vertex indices");
        const auto x = detail::require_integer(e[0], where + "[0]");
        const auto y = detail::require_integer(e[1], where + "[1]");
        if (x < 0 || y < 0 || x >= count || y >= count) throw ParseError(where + ": vertex index out of range");
        if (x == y) throw ParseError(where + ": loops are not allowed");
        g.edges.emplace_back(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    }
    return g;
}

}  // namespace fusionrank
