#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "midroman/graph.hpp"

namespace midroman {

/// Total labeling of a graph's vertices with values in {0,1,2}. The weight is
/// computed once at construction; instances are treated as immutable.
struct Labeling {
    std::vector<std::uint8_t> values;
    int weight = 0;

    Labeling() = default;
    explicit Labeling(std::vector<std::uint8_t> vals) : values(std::move(vals)) {
        for (auto v : values) {
            if (v > 2) throw std::invalid_argument("label must be 0, 1 or 2");
            weight += v;
        }
    }

    bool operator==(const Labeling& other) const { return values == other.values; }
};

namespace detail {
inline void require_vertex_domain(const Graph& g, const Labeling& f) {
    if (static_cast<int>(f.values.size()) != g.n)
        throw std::invalid_argument("labeling domain does not match graph order");
}
} // namespace detail

/// Roman dominating function test: every 0-vertex has at least one 2-neighbor.
inline bool is_rdf(const Graph& g, const Labeling& f) {
    detail::require_vertex_domain(g, f);
    for (int v = 0; v < g.n; ++v) {
        if (f.values[v] != 0) continue;
        bool covered = false;
        for (int w : g.neighbors(v)) {
            if (f.values[w] == 2) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

/// Perfect variant: every 0-vertex has exactly one 2-neighbor.
inline bool is_prdf(const Graph& g, const Labeling& f) {
    detail::require_vertex_domain(g, f);
    for (int v = 0; v < g.n; ++v) {
        if (f.values[v] != 0) continue;
        int twos = 0;
        for (int w : g.neighbors(v))
            if (f.values[w] == 2) ++twos;
        if (twos != 1) return false;
    }
    return true;
}

} // namespace midroman
