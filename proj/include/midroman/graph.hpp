#pragma once

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "midroman/errors.hpp"

namespace midroman {

/// Immutable simple undirected graph. Vertices are 0..n-1. The edge list is
/// normalized to u < v and sorted lexicographically; that order is the
/// canonical edge indexing used everywhere else (subdivision vertices, edge
/// labelings, witnesses).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj; // sorted neighbor lists

    int order() const { return n; }
    int size() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj.at(v); }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    /// Canonical index of edge {u,v}, or -1 when absent.
    int edge_index(int u, int v) const {
        if (u == v) return -1;
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges.begin());
    }

    bool operator==(const Graph& other) const {
        return n == other.n && edges == other.edges;
    }
};

/// Builds a canonical Graph from any edge list: normalizes endpoint order,
/// sorts, rejects self-loops, out-of-range endpoints and duplicates.
inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

namespace detail {

inline std::vector<std::string_view> whitespace_tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int parse_int_token(std::string_view tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw parse_error(parse_error::kind::malformed,
                          std::string("expected non-negative integer for ") + what +
                              ", got '" + std::string(tok) + "'");
    return value;
}

} // namespace detail

/// Parses the whitespace-separated edge-list format: a header "n m" followed
/// by m pairs "u v". LF and CRLF both work since tokens are split on any
/// whitespace.
inline Graph parse_edge_list(std::string_view text) {
    auto toks = detail::whitespace_tokens(text);
    if (toks.size() < 2)
        throw parse_error(parse_error::kind::malformed, "missing 'n m' header line");
    int n = detail::parse_int_token(toks[0], "vertex count");
    int m = detail::parse_int_token(toks[1], "edge count");
    if (toks.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw parse_error(parse_error::kind::malformed,
                          "expected " + std::to_string(2 * m) + " endpoint tokens after header, got " +
                              std::to_string(toks.size() - 2));
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        int u = detail::parse_int_token(toks[2 + 2 * k], "endpoint");
        int v = detail::parse_int_token(toks[3 + 2 * k], "endpoint");
        if (u >= n || v >= n)
            throw parse_error(parse_error::kind::index_out_of_range,
                              "edge " + std::to_string(u) + " " + std::to_string(v) +
                                  " out of range for n=" + std::to_string(n));
        if (u == v)
            throw parse_error(parse_error::kind::self_loop,
                              "self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw parse_error(parse_error::kind::duplicate_edge,
                              "duplicate edge " + std::to_string(key.first) + " " +
                                  std::to_string(key.second));
        edges.emplace_back(u, v);
    }
    return make_graph(n, std::move(edges));
}

/// Serializes back to the edge-list text format (header + one edge per line).
inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// --- graph families ---------------------------------------------------------

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return make_graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

/// K_{m,n} with part {0..m-1} against part {m..m+n-1}.
inline Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite needs m,n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return make_graph(m + n, std::move(edges));
}

/// Star with the given number of leaves; center is vertex 0.
inline Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return make_graph(leaves + 1, std::move(edges));
}

inline Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("empty graph needs n >= 0");
    return make_graph(n, {});
}

enum class FamilyKind { path, cycle, complete, complete_bipartite, star, empty };

inline Graph family(FamilyKind kind, const std::vector<int>& params) {
    auto arity = [&](std::size_t k) {
        if (params.size() != k) throw std::invalid_argument("wrong number of family parameters");
    };
    switch (kind) {
        case FamilyKind::path: arity(1); return path_graph(params[0]);
        case FamilyKind::cycle: arity(1); return cycle_graph(params[0]);
        case FamilyKind::complete: arity(1); return complete_graph(params[0]);
        case FamilyKind::complete_bipartite: arity(2); return complete_bipartite_graph(params[0], params[1]);
        case FamilyKind::star: arity(1); return star_graph(params[0]);
        case FamilyKind::empty: arity(1); return empty_graph(params[0]);
    }
    throw std::invalid_argument("unknown family");
}

// --- components and assembly -------------------------------------------------

/// A connected component together with the injective map from its local
/// vertex indices back to the parent graph.
struct Component {
    Graph graph;
    std::vector<int> to_parent;
};

inline std::vector<Component> components(const Graph& g) {
    std::vector<Component> out;
    std::vector<int> comp_of(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (comp_of[s] >= 0) continue;
        std::vector<int> verts{s};
        comp_of[s] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < verts.size(); ++head) {
            for (int w : g.neighbors(verts[head])) {
                if (comp_of[w] < 0) {
                    comp_of[w] = comp_of[s];
                    verts.push_back(w);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        std::vector<int> local(g.n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges)
            if (comp_of[u] == comp_of[s] && comp_of[v] == comp_of[s])
                edges.emplace_back(local[u], local[v]);
        out.push_back({make_graph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts)});
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges;
    for (auto [u, v] : b.edges) edges.emplace_back(a.n + u, a.n + v);
    return make_graph(a.n + b.n, std::move(edges));
}

} // namespace midroman
