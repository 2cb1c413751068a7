#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "midroman/graph.hpp"

namespace midroman {

namespace detail {
// Raw mt19937 draws compared against a fixed-point threshold, so the same
// seed yields the same graph on every platform and standard library.
inline bool coin(std::mt19937& gen, double p) {
    auto threshold = static_cast<std::uint64_t>(p * 4294967296.0);
    return static_cast<std::uint64_t>(gen()) < threshold;
}
inline int draw(std::mt19937& gen, int lo, int hi) { // inclusive bounds
    return lo + static_cast<int>(gen() % static_cast<std::uint32_t>(hi - lo + 1));
}
} // namespace detail

/// Erdos-Renyi G(n, p) drawn from the given generator.
inline Graph erdos_renyi(int n, double p, std::mt19937& gen) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::coin(gen, p)) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

/// Uniform-ish random tree of order n via a random Pruefer sequence.
inline Graph random_tree(int n, std::mt19937& gen) {
    if (n <= 1) return empty_graph(n < 0 ? 0 : n);
    if (n == 2) return make_graph(2, {{0, 1}});
    std::vector<int> seq(n - 2);
    for (auto& x : seq) x = detail::draw(gen, 0, n - 1);
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n, false);
    for (int x : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        used[leaf] = true;
        edges.emplace_back(leaf, x);
        --deg[x];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1 && !used[v]) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return make_graph(n, std::move(edges));
}

inline constexpr double survey_edge_probs[3] = {0.2, 0.5, 0.8};

/// Seeded corpus of `count` G(n, p) graphs with 1 <= n <= max_n and p cycling
/// through {0.2, 0.5, 0.8}.
inline std::vector<Graph> random_graph_corpus(int count, int max_n, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int n = detail::draw(gen, 1, max_n);
        out.push_back(erdos_renyi(n, survey_edge_probs[i % 3], gen));
    }
    return out;
}

/// Seeded corpus of random trees with orders in [min_n, max_n].
inline std::vector<Graph> random_tree_corpus(int count, int min_n, int max_n,
                                             std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(random_tree(detail::draw(gen, min_n, max_n), gen));
    return out;
}

/// Seeded corpus of guaranteed-disconnected graphs: each one is the disjoint
/// union of two or three small G(n, p) pieces.
inline std::vector<Graph> random_disconnected_corpus(int count, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int parts = detail::draw(gen, 2, 3);
        Graph g = empty_graph(0);
        for (int k = 0; k < parts; ++k)
            g = disjoint_union(g, erdos_renyi(detail::draw(gen, 1, 5),
                                              survey_edge_probs[(i + k) % 3], gen));
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace midroman
