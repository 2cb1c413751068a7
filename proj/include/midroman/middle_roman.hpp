#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "midroman/graph.hpp"
#include "midroman/middle.hpp"
#include "midroman/mixed.hpp"
#include "midroman/solve.hpp"

namespace midroman {

/// Optimum of a middle Roman solve with the witness expressed on V(G)∪E(G).
struct StarResult {
    int optimum = 0;
    MixedLabeling witness;
};

/// Middle Roman domination number: gamma_r on M(G), witness translated back.
inline StarResult gamma_r_star(const Graph& g, int size_guard = default_size_guard) {
    MiddleGraph mg = build_middle_graph(g);
    SolveResult r = gamma_r(mg.graph, size_guard);
    return {r.optimum, from_middle_labeling(mg, r.witness)};
}

/// Perfect middle Roman domination number.
inline StarResult gamma_pr_star(const Graph& g, int size_guard = default_size_guard) {
    MiddleGraph mg = build_middle_graph(g);
    SolveResult r = gamma_pr(mg.graph, size_guard);
    return {r.optimum, from_middle_labeling(mg, r.witness)};
}

namespace detail {

// Path labeling of weight n, split by n mod 3. Vertices and edges are in
// traversal order (edge i joins vertices i and i+1). n >= 1 so the cycle
// assembly below can reuse the n-2 case.
inline std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> path_case_labels(int n) {
    std::vector<std::uint8_t> vv(n, 0);
    std::vector<std::uint8_t> ev(n > 0 ? n - 1 : 0, 0);
    switch (n % 3) {
        case 0:
            for (int i = 0; 3 * i + 2 < n; ++i) {
                vv[3 * i] = 1;
                ev[3 * i + 1] = 2;
            }
            break;
        case 1:
            for (int i = 0; 3 * i + 3 < n; ++i) {
                vv[3 * i] = 1;
                ev[3 * i + 1] = 2;
            }
            vv[n - 1] = 1;
            break;
        case 2:
            for (int i = 0; 3 * i + 4 < n; ++i) {
                ev[3 * i] = 2;
                vv[3 * i + 2] = 1;
            }
            ev[n - 2] = 2;
            break;
    }
    return {std::move(vv), std::move(ev)};
}

inline MixedLabeling validated(const Graph& g, MixedLabeling f, int expected_weight,
                               const char* what) {
    if (f.weight != expected_weight || !is_pmrdf(g, f))
        throw std::logic_error(std::string("constructed labeling for ") + what +
                               " failed validation");
    return f;
}

} // namespace detail

/// Weight-n perfect middle Roman labeling of the path P_n, n >= 2.
inline MixedLabeling construct_pmrdf_path(int n) {
    if (n < 2) throw std::invalid_argument("path construction needs n >= 2");
    auto [vv, ev] = detail::path_case_labels(n);
    MixedLabeling f(std::move(vv), std::move(ev));
    return detail::validated(path_graph(n), std::move(f), n, "path");
}

/// Perfect middle Roman labeling of the cycle C_n, n >= 3. Weight n when n is
/// divisible by 3, otherwise n+1: the divisible case closes a path labeling
/// of C_n minus two vertices with one 2-edge, the others add a 1 on the
/// closing edge.
inline MixedLabeling construct_pmrdf_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle construction needs n >= 3");
    Graph g = cycle_graph(n);
    std::vector<std::uint8_t> vv(n, 0);
    std::vector<std::uint8_t> ev(n, 0);
    int expected;
    if (n % 3 == 0) {
        auto [pvv, pev] = detail::path_case_labels(n - 2);
        for (int i = 0; i < n - 2; ++i) vv[i] = pvv[i];
        for (int i = 0; i + 1 < n - 2; ++i) ev[g.edge_index(i, i + 1)] = pev[i];
        ev[g.edge_index(n - 2, n - 1)] = 2;
        expected = n;
    } else {
        auto [pvv, pev] = detail::path_case_labels(n);
        for (int i = 0; i < n; ++i) vv[i] = pvv[i];
        for (int i = 0; i + 1 < n; ++i) ev[g.edge_index(i, i + 1)] = pev[i];
        ev[g.edge_index(0, n - 1)] = 1;
        expected = n + 1;
    }
    return detail::validated(g, MixedLabeling(std::move(vv), std::move(ev)), expected, "cycle");
}

/// One row of an exploratory table: family parameters and the computed
/// perfect middle Roman domination number. No closed form is asserted.
struct TableRow {
    std::vector<int> params;
    int gamma_pr_star = 0;
};

/// Computed gamma_pr_star values for complete graphs K_n (params {n}) or
/// complete bipartite graphs K_{m,n} with m <= n (params {m,n}), all sizes up
/// to max_size.
inline std::vector<TableRow> open_problem_table(FamilyKind kind, int max_size,
                                                int size_guard = default_size_guard) {
    std::vector<TableRow> rows;
    if (kind == FamilyKind::complete) {
        for (int n = 1; n <= max_size; ++n)
            rows.push_back({{n}, gamma_pr_star(complete_graph(n), size_guard).optimum});
    } else if (kind == FamilyKind::complete_bipartite) {
        for (int m = 1; 2 * m <= max_size; ++m)
            for (int n = m; m + n <= max_size; ++n)
                rows.push_back({{m, n}, gamma_pr_star(complete_bipartite_graph(m, n), size_guard).optimum});
    } else {
        throw std::invalid_argument("table supports complete and complete_bipartite only");
    }
    return rows;
}

} // namespace midroman
