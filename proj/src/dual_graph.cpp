#include "fusionrank/dual_graph.hpp"

#include <numeric>

#include "fusionrank/errors.hpp"
#include "json_util.hpp"

namespace fusionrank {

std::size_t DualGraph::valence(std::size_t v) const {
    std::size_t ends = vertices.at(v).legs.size();
    for (const auto& [x, y] : edges) {
        if (x == v) ++ends;
        if (y == v) ++ends;
    }
    return ends;
}

std::size_t DualGraph::leg_count() const {
    std::size_t n = 0;
    for (const auto& v : vertices) n += v.legs.size();
    return n;
}

std::int64_t DualGraph::total_genus() const {
    std::int64_t g = 0;
    for (const auto& v : vertices) g += v.genus;
    return g + static_cast<std::int64_t>(edges.size()) - static_cast<std::int64_t>(vertices.size()) + 1;
}

bool DualGraph::connected() const {
    if (vertices.empty()) return false;
    std::vector<std::size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertices.size();
    for (const auto& [x, y] : edges) {
        if (x >= vertices.size() || y >= vertices.size()) return false;
        auto rx = root(x);
        auto ry = root(y);
        if (rx != ry) {
            parent[rx] = ry;
            --components;
        }
    }
    return components == 1;
}

void DualGraph::check() const {
    if (vertices.empty()) throw GraphError("dual graph has no vertices");
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& [x, y] = edges[e];
        if (x >= vertices.size() || y >= vertices.size()) {
            throw GraphError("edge " + std::to_string(e) + " references a missing vertex");
        }
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto& vert = vertices[v];
        if (vert.genus < 0) throw GraphError("vertex " + std::to_string(v) + " has negative genus");
        const auto chi = 2 * vert.genus - 2 + static_cast<std::int64_t>(valence(v));
        if (chi <= 0) {
            throw GraphError("vertex " + std::to_string(v) + " is unstable (genus " +
                             std::to_string(vert.genus) + ", valence " + std::to_string(valence(v)) + ")");
        }
    }
    if (!connected()) throw GraphError("dual graph is disconnected");
}

DualGraph fig_a_graph(std::int64_t g, std::int64_t n, std::string_view leg) {
    if (g < 1 || n < 0) throw PreconditionError("fig_a_graph requires g >= 1 and n >= 0");
    DualGraph graph;
    graph.vertices.push_back({0, std::vector<std::string>(static_cast<std::size_t>(n), std::string(leg))});
    for (std::int64_t i = 0; i < g; ++i) graph.edges.emplace_back(0, 0);
    graph.check();
    return graph;
}

DualGraph fig_b_graph(std::int64_t g, std::int64_t n, std::string_view leg) {
    if (g < 1 || n < 0) throw PreconditionError("fig_b_graph requires g >= 1 and n >= 0");
    DualGraph graph;
    graph.vertices.push_back({0, std::vector<std::string>(static_cast<std::size_t>(n), std::string(leg))});
    for (std::int64_t i = 0; i < g; ++i) {
        graph.vertices.push_back({1, {}});
        graph.edges.emplace_back(0, graph.vertices.size() - 1);
    }
    graph.check();
    return graph;
}

DualGraph load_dual_graph(std::string_view document) {
    using detail::require;
    const auto root = detail::parse_json(document);
    if (!root.is_object()) throw ParseError("dual graph: expected a JSON object");

    DualGraph graph;
    const auto& vertices = detail::require_array(require(root, "vertices", "dual graph"), "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        DualGraph::Vertex v;
        v.genus = detail::require_integer(require(vertices[i], "genus", where), where + ".genus");
        const auto& legs = detail::require_array(require(vertices[i], "legs", where), where + ".legs");
        for (std::size_t k = 0; k < legs.size(); ++k) {
            v.legs.push_back(detail::require_string(legs[k], where + ".legs[" + std::to_string(k) + "]"));
        }
        graph.vertices.push_back(std::move(v));
    }

    const auto& edges = detail::require_array(require(root, "edges", "dual graph"), "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const auto& e = detail::require_array(edges[i], where);
        if (e.size() != 2) throw ParseError(where + ": expected a pair of vertex indices");
        const auto x = detail::require_integer(e[0], where + "[0]");
        const auto y = detail::require_integer(e[1], where + "[1]");
        if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= graph.vertices.size() ||
            static_cast<std::size_t>(y) >= graph.vertices.size()) {
            throw ParseError(where + ": vertex index out of range");
        }
        graph.edges.emplace_back(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    }
    return graph;
}

nlohmann::ordered_json to_json(const DualGraph& graph) {
    nlohmann::ordered_json j;
    auto vertices = nlohmann::ordered_json::array();
    for (const auto& v : graph.vertices) vertices.push_back({{"genus", v.genus}, {"legs", v.legs}});
    j["vertices"] = std::move(vertices);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [x, y] : graph.edges) edges.push_back({x, y});
    j["edges"] = std::move(edges);
    return j;
}

}  // namespace fusionrank
