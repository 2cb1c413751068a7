#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "midroman/characterization.hpp"
#include "midroman/errors.hpp"
#include "midroman/graph.hpp"
#include "midroman/graph6.hpp"
#include "midroman/middle_roman.hpp"

namespace midroman {

/// Which per-graph invariants a survey verifies. `order` (gamma_r_star equals
/// the graph order) is cheap everywhere; `ordering` and `characterization`
/// need the perfect solve of M(G), which only stays desk-scale on small
/// source graphs.
struct SurveyOptions {
    bool check_order = true;
    bool check_ordering = true;
    bool check_characterization = true;
    int size_guard = default_size_guard;
};

struct SurveyRecord {
    std::string id;
    bool parsed = true;
    bool guard_exceeded = false;
    int n = -1;
    int m = -1;
    int r_star = -1;
    int pr_star = -1;
    bool order_ok = true;
    bool ordering_ok = true;
    bool characterization_ok = true;
    std::string note;

    bool checks_ok() const { return order_ok && ordering_ok && characterization_ok; }
    bool violation() const { return parsed && !guard_exceeded && !checks_ok(); }
};

struct SurveySummary {
    std::vector<SurveyRecord> records;
    int graphs = 0;
    int violations = 0;
    int parse_errors = 0;
    int guard_errors = 0;

    void add(SurveyRecord rec) {
        ++graphs;
        if (!rec.parsed) ++parse_errors;
        if (rec.guard_exceeded) ++guard_errors;
        if (rec.violation()) ++violations;
        records.push_back(std::move(rec));
    }
    bool clean() const { return violations == 0 && parse_errors == 0 && guard_errors == 0; }
};

inline SurveyRecord survey_graph(std::string id, const Graph& g, const SurveyOptions& opts) {
    SurveyRecord rec;
    rec.id = std::move(id);
    rec.n = g.n;
    rec.m = g.size();
    try {
        if (opts.check_order || opts.check_ordering || opts.check_characterization) {
            rec.r_star = gamma_r_star(g, opts.size_guard).optimum;
            if (opts.check_order) rec.order_ok = rec.r_star == g.n;
        }
        if (opts.check_characterization) {
            CharacterizationReport rep = check_characterization(g, opts.size_guard);
            rec.pr_star = rep.gamma_pr_star;
            rec.characterization_ok = rep.consistent;
            if (opts.check_ordering) rec.ordering_ok = rec.pr_star >= rec.r_star;
        } else if (opts.check_ordering) {
            rec.pr_star = gamma_pr_star(g, opts.size_guard).optimum;
            rec.ordering_ok = rec.pr_star >= rec.r_star;
        }
        if (!rec.checks_ok()) rec.note = "violation";
    } catch (const size_guard_error& e) {
        rec.guard_exceeded = true;
        rec.note = e.what();
    }
    return rec;
}

inline SurveySummary survey_graphs(const std::vector<std::pair<std::string, Graph>>& graphs,
                                   const SurveyOptions& opts) {
    SurveySummary sum;
    for (const auto& [id, g] : graphs) sum.add(survey_graph(id, g, opts));
    return sum;
}

/// Surveys a graph6 file, one graph per line. Unparseable lines are recorded
/// and the run continues.
inline SurveySummary survey_graph6_stream(std::istream& in, const SurveyOptions& opts) {
    SurveySummary sum;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            Graph g = parse_graph6(line);
            sum.add(survey_graph(line, g, opts));
        } catch (const parse_error& e) {
            SurveyRecord rec;
            rec.id = line;
            rec.parsed = false;
            rec.note = "line " + std::to_string(lineno) + ": " + e.what();
            sum.add(std::move(rec));
        }
    }
    return sum;
}

} // namespace midroman
