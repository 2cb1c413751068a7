#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "midroman/graph.hpp"
#include "midroman/middle.hpp"
#include "midroman/middle_roman.hpp"
#include "midroman/mixed.hpp"
#include "midroman/solve.hpp"

namespace midroman {

/// Structural test on a mixed labeling f of G:
///  (i)  for every 2-edge uv, all neighbors of u other than v and all
///       neighbors of v other than u carry label 1, and
///  (ii) deleting the endpoints of all 2-edges leaves an edgeless graph.
/// Equality of the two middle Roman invariants holds iff SOME minimum-weight
/// middle Roman function satisfies both.
inline bool characterization_holds(const Graph& g, const MixedLabeling& f) {
    detail::require_mixed_domain(g, f);
    std::vector<std::uint8_t> deleted(g.n, 0);
    for (int k = 0; k < g.size(); ++k) {
        if (f.edge_values[k] != 2) continue;
        auto [u, v] = g.edges[k];
        deleted[u] = deleted[v] = 1;
        for (int w : g.neighbors(u))
            if (w != v && f.vertex_values[w] != 1) return false;
        for (int w : g.neighbors(v))
            if (w != u && f.vertex_values[w] != 1) return false;
    }
    for (auto [u, v] : g.edges)
        if (!deleted[u] && !deleted[v]) return false;
    return true;
}

/// Structural audit of one minimum-weight perfect middle Roman function.
/// hypothesis_met records whether f really is a PMRDF of the minimum middle
/// Roman weight; the six predicates are reported either way.
struct StructuralAudit {
    bool hypothesis_met = false;
    bool no_vertex_twos = false;         // no original vertex carries 2
    bool no_edge_ones = false;           // no edge carries 1
    bool two_edge_ends_zero = false;     // both endpoints of each 2-edge are 0
    bool two_edge_neighbors_zero = false; // edges adjacent to a 2-edge are all 0
    bool second_neighbors_one = false;   // condition (i) above
    bool removal_edgeless = false;       // condition (ii) above

    bool all_hold() const {
        return no_vertex_twos && no_edge_ones && two_edge_ends_zero && two_edge_neighbors_zero &&
               second_neighbors_one && removal_edgeless;
    }
    std::array<bool, 6> as_array() const {
        return {no_vertex_twos,       no_edge_ones,        two_edge_ends_zero,
                two_edge_neighbors_zero, second_neighbors_one, removal_edgeless};
    }
};

/// Evaluates the audit predicates for f against a known minimum middle Roman
/// weight of g.
inline StructuralAudit audit_min_pmrdf(const Graph& g, const MixedLabeling& f,
                                       int min_mrdf_weight) {
    detail::require_mixed_domain(g, f);
    StructuralAudit a;
    a.hypothesis_met = f.weight == min_mrdf_weight && is_pmrdf(g, f);

    a.no_vertex_twos = true;
    for (auto v : f.vertex_values)
        if (v == 2) a.no_vertex_twos = false;
    a.no_edge_ones = true;
    for (auto e : f.edge_values)
        if (e == 1) a.no_edge_ones = false;

    a.two_edge_ends_zero = true;
    a.two_edge_neighbors_zero = true;
    a.second_neighbors_one = true;
    std::vector<std::uint8_t> deleted(g.n, 0);
    for (int k = 0; k < g.size(); ++k) {
        if (f.edge_values[k] != 2) continue;
        auto [u, v] = g.edges[k];
        deleted[u] = deleted[v] = 1;
        if (f.vertex_values[u] != 0 || f.vertex_values[v] != 0) a.two_edge_ends_zero = false;
        for (int w : g.neighbors(u)) {
            if (w == v) continue;
            if (f.edge_values[g.edge_index(u, w)] != 0) a.two_edge_neighbors_zero = false;
            if (f.vertex_values[w] != 1) a.second_neighbors_one = false;
        }
        for (int w : g.neighbors(v)) {
            if (w == u) continue;
            if (f.edge_values[g.edge_index(v, w)] != 0) a.two_edge_neighbors_zero = false;
            if (f.vertex_values[w] != 1) a.second_neighbors_one = false;
        }
    }
    a.removal_edgeless = true;
    for (auto [u, v] : g.edges)
        if (!deleted[u] && !deleted[v]) a.removal_edgeless = false;
    return a;
}

/// Convenience overload that computes the minimum weight itself.
inline StructuralAudit audit_min_pmrdf(const Graph& g, const MixedLabeling& f) {
    return audit_min_pmrdf(g, f, gamma_r_star(g).optimum);
}

/// Aggregate over every minimum-weight perfect middle Roman function of a
/// graph. The for-all flags quantify over the functions meeting the audit
/// hypothesis; exists_all_pass records whether at least one such function
/// passes every predicate.
struct AuditSummary {
    int examined = 0;
    int hypothesis_met = 0;
    std::array<bool, 6> holds_for_all = {true, true, true, true, true, true};
    bool exists_all_pass = false;
    std::vector<StructuralAudit> per_function;
};

/// Full per-graph record: both middle Roman invariants, whether they agree, a
/// minimum-weight witness satisfying the characterization (when one exists),
/// the structural audit of all optimal perfect functions, and the consistency
/// flag (equal iff witness found).
struct CharacterizationReport {
    int gamma_r_star = 0;
    int gamma_pr_star = 0;
    bool equal = false;
    std::optional<MixedLabeling> witness;
    AuditSummary audit;
    bool consistent = false;
};

/// Decides the equality characterization on a concrete graph by complete
/// enumeration: every minimum-weight middle Roman function is the forced
/// completion of an optimal 2-set of M(G), so scanning those quantifies over
/// all of them.
inline CharacterizationReport check_characterization(const Graph& g,
                                                     int size_guard = default_size_guard) {
    MiddleGraph mg = build_middle_graph(g);
    CharacterizationReport rep;
    rep.gamma_r_star = gamma_r(mg.graph, size_guard).optimum;
    rep.gamma_pr_star = gamma_pr(mg.graph, size_guard).optimum;
    rep.equal = rep.gamma_r_star == rep.gamma_pr_star;

    for (const auto& two_set : enumerate_optimal_two_sets(mg.graph, false, size_guard)) {
        MixedLabeling f = from_middle_labeling(mg, forced_completion(mg.graph, two_set, false));
        if (characterization_holds(g, f)) {
            rep.witness = std::move(f);
            break;
        }
    }

    for (const auto& two_set : enumerate_optimal_two_sets(mg.graph, true, size_guard)) {
        MixedLabeling f = from_middle_labeling(mg, forced_completion(mg.graph, two_set, true));
        StructuralAudit a = audit_min_pmrdf(g, f, rep.gamma_r_star);
        ++rep.audit.examined;
        if (a.hypothesis_met) {
            ++rep.audit.hypothesis_met;
            auto arr = a.as_array();
            for (int i = 0; i < 6; ++i) rep.audit.holds_for_all[i] = rep.audit.holds_for_all[i] && arr[i];
            if (a.all_hold()) rep.audit.exists_all_pass = true;
        }
        rep.audit.per_function.push_back(std::move(a));
    }

    rep.consistent = rep.equal == rep.witness.has_value();
    return rep;
}

} // namespace midroman
