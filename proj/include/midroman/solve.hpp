#pragma once

#include <bit>
#include <climits>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "midroman/errors.hpp"
#include "midroman/graph.hpp"
#include "midroman/labeling.hpp"

namespace midroman {

/// Element budget for the subset search. 64 keeps every neighborhood in one
/// machine word, and the search itself is capped far earlier in practice by
/// the cardinality cut below.
inline constexpr int default_size_guard = 64;

/// Optimal weight plus one witness: the labeling and its 2-set. Witnesses are
/// deterministic (smallest weight, then smallest 2-set, then lexicographic).
struct SolveResult {
    int optimum = 0;
    Labeling witness;
    std::vector<int> two_set;
};

/// Minimum-weight completion of a fixed 2-set: vertices in the set get 2,
/// vertices where the domination condition fails get 1, the rest 0.
inline Labeling forced_completion(const Graph& g, const std::vector<int>& two_set, bool perfect) {
    std::vector<std::uint8_t> vals(g.n, 0);
    std::vector<std::uint8_t> in_set(g.n, 0);
    for (int v : two_set) in_set.at(v) = 1;
    for (int v = 0; v < g.n; ++v) {
        if (in_set[v]) {
            vals[v] = 2;
            continue;
        }
        int hits = 0;
        for (int w : g.neighbors(v))
            if (in_set[w]) ++hits;
        bool zero_ok = perfect ? (hits == 1) : (hits >= 1);
        vals[v] = zero_ok ? 0 : 1;
    }
    return Labeling(std::move(vals));
}

namespace detail {

inline void check_guard(int elements, int guard) {
    if (guard < 0 || guard > 64)
        throw std::invalid_argument("size guard must be between 0 and 64");
    if (elements > guard)
        throw size_guard_error("subset search over " + std::to_string(elements) +
                               " elements exceeds size guard " + std::to_string(guard));
}

inline std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint64_t> nb(g.n, 0);
    for (auto [u, v] : g.edges) {
        nb[u] |= 1ull << v;
        nb[v] |= 1ull << u;
    }
    return nb;
}

// Visits every vertex subset of size c in lexicographic order and reports its
// forced-completion weight. `once`/`twice` track how many chosen vertices
// cover each position, which is all the perfect condition needs.
template <class F>
inline void for_each_two_set_of_size(const std::vector<std::uint64_t>& nb, std::uint64_t full,
                                     int n, bool perfect, int c, F&& visit) {
    auto rec = [&](auto&& self, int start, int left, std::uint64_t set, std::uint64_t once,
                   std::uint64_t twice) -> void {
        if (left == 0) {
            std::uint64_t needs_one = perfect ? (~once | twice) : ~once;
            int weight = 2 * c + std::popcount(needs_one & ~set & full);
            visit(set, weight);
            return;
        }
        for (int v = start; v <= n - left; ++v)
            self(self, v + 1, left - 1, set | (1ull << v), once | nb[v], twice | (once & nb[v]));
    };
    rec(rec, 0, c, 0, 0, 0);
}

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

inline SolveResult solve_roman(const Graph& g, bool perfect, int size_guard) {
    check_guard(g.n, size_guard);
    int n = g.n;
    std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
    auto nb = neighbor_masks(g);

    int best = INT_MAX;
    std::uint64_t best_set = 0;
    // 2-sets enumerated by increasing cardinality; a whole cardinality level
    // is cut once 2c can no longer beat the incumbent.
    for (int c = 0; c <= n; ++c) {
        if (2 * c >= best) break;
        for_each_two_set_of_size(nb, full, n, perfect, c, [&](std::uint64_t set, int weight) {
            if (weight < best) {
                best = weight;
                best_set = set;
            }
        });
    }

    SolveResult res;
    res.optimum = best == INT_MAX ? 0 : best;
    res.two_set = mask_to_vertices(best_set);
    res.witness = forced_completion(g, res.two_set, perfect);
    return res;
}

} // namespace detail

/// Minimum weight of a Roman dominating function, with witness.
inline SolveResult gamma_r(const Graph& g, int size_guard = default_size_guard) {
    return detail::solve_roman(g, false, size_guard);
}

/// Minimum weight of a perfect Roman dominating function, with witness.
inline SolveResult gamma_pr(const Graph& g, int size_guard = default_size_guard) {
    return detail::solve_roman(g, true, size_guard);
}

/// Independent oracle: enumerates all 3^n labelings and keeps the lightest
/// one passing is_rdf / is_prdf. Deliberately shares nothing with the subset
/// search above.
inline int brute_force_oracle(const Graph& g, bool perfect) {
    if (g.n > 12)
        throw size_guard_error("brute-force oracle limited to 12 vertices, got " +
                               std::to_string(g.n));
    std::vector<std::uint8_t> vals(g.n, 0);
    int best = INT_MAX;
    while (true) {
        Labeling f(vals);
        if (perfect ? is_prdf(g, f) : is_rdf(g, f))
            if (f.weight < best) best = f.weight;
        int pos = 0;
        while (pos < g.n && vals[pos] == 2) vals[pos++] = 0;
        if (pos == g.n) break;
        ++vals[pos];
    }
    return best == INT_MAX ? 0 : best;
}

/// All 2-sets whose forced completion attains the optimum, ordered by size
/// then lexicographically. Every minimum-weight function arises from exactly
/// one of them.
inline std::vector<std::vector<int>> enumerate_optimal_two_sets(const Graph& g, bool perfect,
                                                                int size_guard = default_size_guard) {
    detail::check_guard(g.n, size_guard);
    int opt = detail::solve_roman(g, perfect, size_guard).optimum;
    std::uint64_t full = g.n == 64 ? ~0ull : ((1ull << g.n) - 1);
    auto nb = detail::neighbor_masks(g);
    std::vector<std::vector<int>> out;
    for (int c = 0; 2 * c <= opt && c <= g.n; ++c) {
        detail::for_each_two_set_of_size(nb, full, g.n, perfect, c,
                                         [&](std::uint64_t set, int weight) {
                                             if (weight == opt)
                                                 out.push_back(detail::mask_to_vertices(set));
                                         });
    }
    return out;
}

/// Solves each connected component separately and recombines; the optimum is
/// the sum of the per-component optima.
inline SolveResult solve_by_components(const Graph& g, bool perfect,
                                       int size_guard = default_size_guard) {
    SolveResult res;
    std::vector<std::uint8_t> vals(g.n, 0);
    for (const auto& comp : components(g)) {
        SolveResult sub = detail::solve_roman(comp.graph, perfect, size_guard);
        res.optimum += sub.optimum;
        for (int i = 0; i < comp.graph.n; ++i) vals[comp.to_parent[i]] = sub.witness.values[i];
        for (int v : sub.two_set) res.two_set.push_back(comp.to_parent[v]);
    }
    std::sort(res.two_set.begin(), res.two_set.end());
    res.witness = Labeling(std::move(vals));
    return res;
}

} // namespace midroman
