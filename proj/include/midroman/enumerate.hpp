#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "midroman/graph.hpp"

namespace midroman {

namespace detail {

// Adjacency masks use the graph6 bit order: pair (i,j), i<j, sits at bit
// j(j-1)/2 + i. Positions of pairs not involving the last vertex are the
// same for every order, so extending a graph by one vertex keeps its mask.
inline std::uint64_t pair_bit(int i, int j) { return 1ull << (j * (j - 1) / 2 + i); }

inline std::pair<int, int> bit_pair(int bit) {
    int j = 1;
    while ((j + 1) * j / 2 <= bit) ++j;
    return {bit - j * (j - 1) / 2, j};
}

// Minimum of the mask over all vertex permutations; equal masks mean
// isomorphic graphs, so the minimum is a canonical representative.
inline std::uint64_t canonical_mask(std::uint64_t mask, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t out = 0;
        std::uint64_t rest = mask;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            auto [i, j] = bit_pair(b);
            int pi = perm[i], pj = perm[j];
            if (pi > pj) std::swap(pi, pj);
            out |= pair_bit(pi, pj);
        }
        best = std::min(best, out);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph mask_to_graph(std::uint64_t mask, int n) {
    std::vector<std::pair<int, int>> edges;
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        edges.push_back(bit_pair(b));
    }
    return make_graph(n, std::move(edges));
}

inline std::uint64_t graph_to_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges) mask |= pair_bit(u, v);
    return mask;
}

inline std::vector<std::uint64_t> all_masks(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumeration supports 1 <= n <= 8");
    if (n == 1) return {0};
    auto prev = all_masks(n - 1);
    int base = (n - 1) * (n - 2) / 2;
    std::set<std::uint64_t> canon;
    // every n-vertex graph is some (n-1)-vertex graph plus one vertex with an
    // arbitrary attachment set, so this sweep is exhaustive up to isomorphism
    for (std::uint64_t g : prev) {
        for (std::uint32_t attach = 0; attach < (1u << (n - 1)); ++attach) {
            std::uint64_t mask = g;
            for (int i = 0; i < n - 1; ++i)
                if ((attach >> i) & 1) mask |= 1ull << (base + i);
            canon.insert(canonical_mask(mask, n));
        }
    }
    return {canon.begin(), canon.end()};
}

} // namespace detail

/// All simple graphs on n vertices up to isomorphism (canonical
/// representatives in a deterministic order). Practical for n <= 7.
inline std::vector<Graph> all_graphs_upto_iso(int n) {
    std::vector<Graph> out;
    for (std::uint64_t mask : detail::all_masks(n)) out.push_back(detail::mask_to_graph(mask, n));
    return out;
}

/// The connected ones only.
inline std::vector<Graph> connected_graphs_upto_iso(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs_upto_iso(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

/// True when g's adjacency mask is already the canonical representative of
/// its isomorphism class. Used to certify enumerated corpora.
inline bool is_canonical_representative(const Graph& g) {
    if (g.n < 1 || g.n > 8) throw std::invalid_argument("canonical check supports 1 <= n <= 8");
    std::uint64_t mask = detail::graph_to_mask(g);
    return detail::canonical_mask(mask, g.n) == mask;
}

} // namespace midroman
