#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "midroman/graph.hpp"
#include "midroman/labeling.hpp"
#include "midroman/middle.hpp"

namespace midroman {

/// Labeling of V(G) union E(G) with values in {0,1,2}. Edge values are keyed
/// by canonical edge index. Equivalent to a plain Labeling of M(G) via the
/// element map.
struct MixedLabeling {
    std::vector<std::uint8_t> vertex_values;
    std::vector<std::uint8_t> edge_values;
    int weight = 0;

    MixedLabeling() = default;
    MixedLabeling(std::vector<std::uint8_t> vv, std::vector<std::uint8_t> ev)
        : vertex_values(std::move(vv)), edge_values(std::move(ev)) {
        for (auto v : vertex_values) {
            if (v > 2) throw std::invalid_argument("label must be 0, 1 or 2");
            weight += v;
        }
        for (auto e : edge_values) {
            if (e > 2) throw std::invalid_argument("label must be 0, 1 or 2");
            weight += e;
        }
    }

    bool operator==(const MixedLabeling& other) const {
        return vertex_values == other.vertex_values && edge_values == other.edge_values;
    }
};

namespace detail {
inline void require_mixed_domain(const Graph& g, const MixedLabeling& f) {
    if (static_cast<int>(f.vertex_values.size()) != g.n ||
        static_cast<int>(f.edge_values.size()) != g.size())
        throw std::invalid_argument("mixed labeling domain does not match graph");
}
} // namespace detail

/// Repacks a mixed labeling of G as a vertex labeling of M(G).
inline Labeling to_middle_labeling(const MiddleGraph& mg, const MixedLabeling& f) {
    detail::require_mixed_domain(mg.source, f);
    std::vector<std::uint8_t> vals;
    vals.reserve(mg.graph.n);
    vals.insert(vals.end(), f.vertex_values.begin(), f.vertex_values.end());
    vals.insert(vals.end(), f.edge_values.begin(), f.edge_values.end());
    return Labeling(std::move(vals));
}

/// Inverse of to_middle_labeling.
inline MixedLabeling from_middle_labeling(const MiddleGraph& mg, const Labeling& l) {
    if (static_cast<int>(l.values.size()) != mg.graph.n)
        throw std::invalid_argument("labeling domain does not match middle graph");
    int n = mg.source.n;
    std::vector<std::uint8_t> vv(l.values.begin(), l.values.begin() + n);
    std::vector<std::uint8_t> ev(l.values.begin() + n, l.values.end());
    return MixedLabeling(std::move(vv), std::move(ev));
}

/// Middle Roman dominating function test, evaluated directly on the source
/// graph's incidence structure: a 0-vertex needs an incident 2-edge, and a
/// 0-edge needs a 2 among its endpoints or the edges sharing an endpoint.
inline bool is_mrdf(const Graph& g, const MixedLabeling& f) {
    detail::require_mixed_domain(g, f);
    for (int v = 0; v < g.n; ++v) {
        if (f.vertex_values[v] != 0) continue;
        bool covered = false;
        for (int w : g.neighbors(v)) {
            if (f.edge_values[g.edge_index(v, w)] == 2) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    for (int k = 0; k < g.size(); ++k) {
        if (f.edge_values[k] != 0) continue;
        auto [u, v] = g.edges[k];
        bool covered = f.vertex_values[u] == 2 || f.vertex_values[v] == 2;
        for (int w : g.neighbors(u))
            if (!covered && w != v && f.edge_values[g.edge_index(u, w)] == 2) covered = true;
        for (int w : g.neighbors(v))
            if (!covered && w != u && f.edge_values[g.edge_index(v, w)] == 2) covered = true;
        if (!covered) return false;
    }
    return true;
}

/// Perfect variant: every 0-element sees exactly one 2 in its M(G)
/// neighborhood.
inline bool is_pmrdf(const Graph& g, const MixedLabeling& f) {
    detail::require_mixed_domain(g, f);
    for (int v = 0; v < g.n; ++v) {
        if (f.vertex_values[v] != 0) continue;
        int twos = 0;
        for (int w : g.neighbors(v))
            if (f.edge_values[g.edge_index(v, w)] == 2) ++twos;
        if (twos != 1) return false;
    }
    for (int k = 0; k < g.size(); ++k) {
        if (f.edge_values[k] != 0) continue;
        auto [u, v] = g.edges[k];
        int twos = (f.vertex_values[u] == 2 ? 1 : 0) + (f.vertex_values[v] == 2 ? 1 : 0);
        for (int w : g.neighbors(u))
            if (w != v && f.edge_values[g.edge_index(u, w)] == 2) ++twos;
        for (int w : g.neighbors(v))
            if (w != u && f.edge_values[g.edge_index(v, w)] == 2) ++twos;
        if (twos != 1) return false;
    }
    return true;
}

} // namespace midroman
