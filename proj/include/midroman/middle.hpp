#pragma once

#include <string>
#include <utility>
#include <vector>

#include "midroman/graph.hpp"

namespace midroman {

/// Identifies what an M(G)-vertex stands for in the source graph: either an
/// original vertex or the subdivision vertex of a canonical edge.
struct MiddleElement {
    enum class Kind { original, subdivision };
    Kind kind;
    int index; // vertex index or canonical edge index of the source

    bool operator==(const MiddleElement&) const = default;
};

/// The middle graph M(G) together with its source graph and the element map.
/// Indexing convention: M(G)-vertices 0..n-1 are the originals in order, and
/// vertex n+k is the subdivision of the k-th canonical source edge.
struct MiddleGraph {
    Graph graph;
    Graph source;
    std::vector<MiddleElement> element_map;
};

/// Builds M(G): every source edge becomes a subdivision vertex adjacent to
/// its endpoints, and subdivision vertices of edges sharing an endpoint are
/// joined. Original vertices are never adjacent to each other.
inline MiddleGraph build_middle_graph(const Graph& g) {
    int n = g.n;
    int m = g.size();
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < m; ++k) {
        edges.emplace_back(g.edges[k].first, n + k);
        edges.emplace_back(g.edges[k].second, n + k);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> incident;
        for (int w : g.neighbors(v)) incident.push_back(g.edge_index(v, w));
        std::sort(incident.begin(), incident.end());
        for (std::size_t a = 0; a < incident.size(); ++a)
            for (std::size_t b = a + 1; b < incident.size(); ++b)
                edges.emplace_back(n + incident[a], n + incident[b]);
    }
    MiddleGraph mg;
    mg.graph = make_graph(n + m, std::move(edges));
    mg.source = g;
    mg.element_map.reserve(n + m);
    for (int v = 0; v < n; ++v) mg.element_map.push_back({MiddleElement::Kind::original, v});
    for (int k = 0; k < m; ++k) mg.element_map.push_back({MiddleElement::Kind::subdivision, k});
    return mg;
}

/// Human-readable name of an M(G)-vertex, e.g. "v3" or "e2(1-4)".
inline std::string element_name(const MiddleGraph& mg, int middle_vertex) {
    const auto& el = mg.element_map.at(middle_vertex);
    if (el.kind == MiddleElement::Kind::original) return "v" + std::to_string(el.index);
    auto [u, v] = mg.source.edges.at(el.index);
    return "e" + std::to_string(el.index) + "(" + std::to_string(u) + "-" + std::to_string(v) + ")";
}

} // namespace midroman
