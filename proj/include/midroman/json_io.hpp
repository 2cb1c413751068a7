#pragma once

#include <json.hpp>

#include "midroman/characterization.hpp"
#include "midroman/graph.hpp"
#include "midroman/labeling.hpp"
#include "midroman/middle.hpp"
#include "midroman/middle_roman.hpp"
#include "midroman/mixed.hpp"
#include "midroman/solve.hpp"

namespace midroman {

inline void to_json(nlohmann::json& j, const SolveResult& r) {
    j = {{"optimum", r.optimum}, {"two_set", r.two_set}, {"labels", r.witness.values}};
}

/// MixedLabeling serializes with edge labels spelled out as endpoint pairs;
/// the edge order is the canonical one, so this needs the graph.
inline nlohmann::json mixed_to_json(const Graph& g, const MixedLabeling& f) {
    nlohmann::json edge_labels = nlohmann::json::array();
    for (int k = 0; k < g.size(); ++k)
        edge_labels.push_back({{"u", g.edges[k].first},
                               {"v", g.edges[k].second},
                               {"label", f.edge_values[k]}});
    return {{"vertex_labels", f.vertex_values}, {"edge_labels", edge_labels}, {"weight", f.weight}};
}

inline nlohmann::json star_to_json(const Graph& g, const StarResult& r) {
    nlohmann::json two_vertices = nlohmann::json::array();
    nlohmann::json two_edges = nlohmann::json::array();
    for (int v = 0; v < g.n; ++v)
        if (r.witness.vertex_values[v] == 2) two_vertices.push_back(v);
    for (int k = 0; k < g.size(); ++k)
        if (r.witness.edge_values[k] == 2)
            two_edges.push_back({g.edges[k].first, g.edges[k].second});
    return {{"optimum", r.optimum},
            {"witness", mixed_to_json(g, r.witness)},
            {"two_set", {{"vertices", two_vertices}, {"edges", two_edges}}}};
}

inline void to_json(nlohmann::json& j, const StructuralAudit& a) {
    j = {{"hypothesis_met", a.hypothesis_met},
         {"no_vertex_twos", a.no_vertex_twos},
         {"no_edge_ones", a.no_edge_ones},
         {"two_edge_ends_zero", a.two_edge_ends_zero},
         {"two_edge_neighbors_zero", a.two_edge_neighbors_zero},
         {"second_neighbors_one", a.second_neighbors_one},
         {"removal_edgeless", a.removal_edgeless}};
}

inline nlohmann::json report_to_json(const Graph& g, const CharacterizationReport& rep) {
    nlohmann::json audit = {{"examined", rep.audit.examined},
                            {"hypothesis_met", rep.audit.hypothesis_met},
                            {"holds_for_all", rep.audit.holds_for_all},
                            {"exists_all_pass", rep.audit.exists_all_pass},
                            {"per_function", rep.audit.per_function}};
    nlohmann::json j = {{"gamma_r_star", rep.gamma_r_star},
                        {"gamma_pr_star", rep.gamma_pr_star},
                        {"equal", rep.equal},
                        {"consistent", rep.consistent},
                        {"audit", audit}};
    j["witness"] = rep.witness ? mixed_to_json(g, *rep.witness) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"n", g.n}, {"m", g.size()}, {"edges", edges}};
}

inline nlohmann::json middle_to_json(const MiddleGraph& mg) {
    nlohmann::json j = graph_to_json(mg.graph);
    nlohmann::json elements = nlohmann::json::array();
    for (int i = 0; i < mg.graph.n; ++i) elements.push_back(element_name(mg, i));
    j["element_map"] = elements;
    return j;
}

inline void to_json(nlohmann::json& j, const TableRow& row) {
    j = {{"params", row.params}, {"gamma_pr_star", row.gamma_pr_star}};
}

} // namespace midroman
