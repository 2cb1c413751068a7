// midroman: exact Roman / perfect Roman domination on middle graphs.
//
// Exit codes: 0 ok, 1 characterization inconsistency or survey violation,
// 2 input/parse error, 3 size guard exceeded, 4 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "midroman/json_io.hpp"
#include "midroman/midroman.hpp"

using namespace midroman;
using nlohmann::json;

namespace {

struct GraphInput {
    std::string file;
    std::string format = "edgelist";
    int path = -1;
    int cycle = -1;
    int complete = -1;
    int star = -1;
    int empty_n = -1;
    std::vector<int> bipartite;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--file", in.file, "read the graph from a file");
    cmd->add_option("--format", in.format, "file format: edgelist or graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    cmd->add_option("--path", in.path, "path P_n");
    cmd->add_option("--cycle", in.cycle, "cycle C_n");
    cmd->add_option("--complete", in.complete, "complete graph K_n");
    cmd->add_option("--complete-bipartite", in.bipartite, "complete bipartite K_{m,n}")
        ->expected(2);
    cmd->add_option("--star", in.star, "star with n leaves");
    cmd->add_option("--empty", in.empty_n, "edgeless graph on n vertices");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(parse_error::kind::malformed, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const GraphInput& in) {
    int sources = 0;
    sources += !in.file.empty();
    sources += in.path >= 0;
    sources += in.cycle >= 0;
    sources += in.complete >= 0;
    sources += in.star >= 0;
    sources += in.empty_n >= 0;
    sources += !in.bipartite.empty();
    if (sources != 1)
        throw std::invalid_argument("give exactly one graph source (--file or one family flag)");
    if (!in.file.empty()) {
        std::string text = read_file(in.file);
        if (in.format == "graph6") {
            std::istringstream lines(text);
            std::string line;
            while (std::getline(lines, line)) {
                while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
                if (!line.empty()) return parse_graph6(line);
            }
            throw parse_error(parse_error::kind::empty_input, "no graph6 line in " + in.file);
        }
        return parse_edge_list(text);
    }
    if (in.path >= 0) return path_graph(in.path);
    if (in.cycle >= 0) return cycle_graph(in.cycle);
    if (in.complete >= 0) return complete_graph(in.complete);
    if (in.star >= 0) return star_graph(in.star);
    if (in.empty_n >= 0) return empty_graph(in.empty_n);
    return complete_bipartite_graph(in.bipartite[0], in.bipartite[1]);
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

template <class T>
std::string join_labels(const std::vector<T>& xs) {
    std::vector<int> ints(xs.begin(), xs.end());
    return join(ints);
}

int resolve_size_guard(int flag_value) {
    if (flag_value >= 0) return flag_value;
    if (const char* env = std::getenv("MR_SIZE_GUARD")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0 || v > 64)
            throw std::invalid_argument("MR_SIZE_GUARD must be an integer in [0,64]");
        return static_cast<int>(v);
    }
    return default_size_guard;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// --- solve -------------------------------------------------------------------

void require_valid(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal error: ") + what + " failed revalidation");
}

int cmd_solve(const GraphInput& in, std::vector<std::string> gammas, const std::string& output,
              int guard) {
    Graph g = load_graph(in);
    if (gammas.empty()) gammas = {"r", "pr", "r-star", "pr-star"};
    json out = json::object();
    std::ostringstream human, tsv;
    for (const auto& which : gammas) {
        if (which == "r" || which == "pr") {
            bool perfect = which == "pr";
            SolveResult r = solve_by_components(g, perfect, guard);
            require_valid((perfect ? is_prdf(g, r.witness) : is_rdf(g, r.witness)) &&
                              r.witness.weight == r.optimum,
                          "witness");
            std::string key = perfect ? "gamma_pr" : "gamma_r";
            out[key] = r;
            human << key << " = " << r.optimum << "\n  two-set: {" << join(r.two_set)
                  << "}\n  labels: " << join_labels(r.witness.values) << "\n";
            tsv << key << "\t" << r.optimum << "\t" << join(r.two_set) << "\t"
                << join_labels(r.witness.values) << "\n";
        } else {
            bool perfect = which == "pr-star";
            StarResult r = perfect ? gamma_pr_star(g, guard) : gamma_r_star(g, guard);
            require_valid((perfect ? is_pmrdf(g, r.witness) : is_mrdf(g, r.witness)) &&
                              r.witness.weight == r.optimum,
                          "witness");
            std::string key = perfect ? "gamma_pr_star" : "gamma_r_star";
            out[key] = star_to_json(g, r);
            human << key << " = " << r.optimum
                  << "\n  vertex labels: " << join_labels(r.witness.vertex_values)
                  << "\n  edge labels:   " << join_labels(r.witness.edge_values) << "\n";
            tsv << key << "\t" << r.optimum << "\tv:" << join_labels(r.witness.vertex_values)
                << "\te:" << join_labels(r.witness.edge_values) << "\n";
        }
    }
    if (output == "json")
        print_json(out);
    else if (output == "tsv")
        std::cout << tsv.str();
    else
        std::cout << human.str();
    return 0;
}

// --- middle ------------------------------------------------------------------

int cmd_middle(const GraphInput& in, const std::string& output) {
    Graph g = load_graph(in);
    MiddleGraph mg = build_middle_graph(g);
    if (output == "json") {
        print_json(middle_to_json(mg));
    } else if (output == "tsv") {
        std::cout << to_edge_list(mg.graph);
    } else {
        std::cout << "M(G): " << mg.graph.n << " vertices, " << mg.graph.size() << " edges\n";
        std::cout << "elements:";
        for (int i = 0; i < mg.graph.n; ++i) std::cout << " " << element_name(mg, i);
        std::cout << "\nedges:\n";
        for (auto [u, v] : mg.graph.edges)
            std::cout << "  " << element_name(mg, u) << " -- " << element_name(mg, v) << "\n";
    }
    return 0;
}

// --- construct ---------------------------------------------------------------

int cmd_construct(int path_n, int cycle_n, const std::string& output) {
    if ((path_n >= 0) == (cycle_n >= 0))
        throw std::invalid_argument("construct needs exactly one of --path or --cycle");
    MixedLabeling f = path_n >= 0 ? construct_pmrdf_path(path_n) : construct_pmrdf_cycle(cycle_n);
    Graph g = path_n >= 0 ? path_graph(path_n) : cycle_graph(cycle_n);
    require_valid(is_pmrdf(g, f), "constructed labeling");
    if (output == "json") {
        print_json(mixed_to_json(g, f));
    } else if (output == "tsv") {
        for (int v = 0; v < g.n; ++v)
            std::cout << "v\t" << v << "\t\t" << int(f.vertex_values[v]) << "\n";
        for (int k = 0; k < g.size(); ++k)
            std::cout << "e\t" << g.edges[k].first << "\t" << g.edges[k].second << "\t"
                      << int(f.edge_values[k]) << "\n";
    } else {
        std::cout << "weight " << f.weight << " perfect middle Roman labeling\n";
        for (int v = 0; v < g.n; ++v)
            if (f.vertex_values[v]) std::cout << "  v" << v << " = " << int(f.vertex_values[v]) << "\n";
        for (int k = 0; k < g.size(); ++k)
            if (f.edge_values[k])
                std::cout << "  (" << g.edges[k].first << "," << g.edges[k].second << ") = "
                          << int(f.edge_values[k]) << "\n";
    }
    return 0;
}

// --- check -------------------------------------------------------------------

int cmd_check(const GraphInput& in, const std::string& output, int guard) {
    Graph g = load_graph(in);
    CharacterizationReport rep = check_characterization(g, guard);
    if (rep.witness) require_valid(is_mrdf(g, *rep.witness), "characterization witness");
    if (output == "json") {
        print_json(report_to_json(g, rep));
    } else if (output == "tsv") {
        std::cout << "gamma_r_star\tgamma_pr_star\tequal\tconsistent\twitness\taudited\n"
                  << rep.gamma_r_star << "\t" << rep.gamma_pr_star << "\t" << rep.equal << "\t"
                  << rep.consistent << "\t" << rep.witness.has_value() << "\t"
                  << rep.audit.examined << "\n";
    } else {
        std::cout << "gamma_r_star = " << rep.gamma_r_star << ", gamma_pr_star = "
                  << rep.gamma_pr_star << (rep.equal ? " (equal)" : " (different)") << "\n";
        std::cout << (rep.witness ? "witness satisfying both conditions found\n"
                                  : "no minimum-weight function satisfies both conditions\n");
        std::cout << "characterization " << (rep.consistent ? "consistent" : "INCONSISTENT")
                  << "; " << rep.audit.examined << " optimal perfect function(s) audited\n";
        if (rep.witness) {
            std::cout << "witness vertex labels: " << join_labels(rep.witness->vertex_values)
                      << "\nwitness edge labels:   " << join_labels(rep.witness->edge_values)
                      << "\n";
        }
    }
    return rep.consistent ? 0 : 1;
}

// --- survey ------------------------------------------------------------------

std::string survey_tsv_row(const SurveyRecord& r) {
    auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
    std::ostringstream out;
    out << r.id << "\t" << r.n << "\t" << r.m << "\t" << r.r_star << "\t" << r.pr_star << "\t";
    if (!r.parsed)
        out << "parse_error\tparse_error\tparse_error";
    else if (r.guard_exceeded)
        out << "guard\tguard\tguard";
    else
        out << flag(r.order_ok) << "\t" << flag(r.ordering_ok) << "\t"
            << flag(r.characterization_ok);
    out << "\t" << r.note;
    return out.str();
}

json survey_record_json(const SurveyRecord& r) {
    return json{{"id", r.id},
                {"parsed", r.parsed},
                {"guard_exceeded", r.guard_exceeded},
                {"n", r.n},
                {"m", r.m},
                {"gamma_r_star", r.r_star},
                {"gamma_pr_star", r.pr_star},
                {"order_ok", r.order_ok},
                {"ordering_ok", r.ordering_ok},
                {"characterization_ok", r.characterization_ok},
                {"note", r.note}};
}

int cmd_survey(const std::string& file, int random_count, int max_n, unsigned seed,
               std::vector<std::string> checks, const std::string& output, int guard) {
    if (file.empty() == (random_count < 0))
        throw std::invalid_argument("survey needs exactly one of --file or --random");

    SurveyOptions opts;
    opts.size_guard = guard;
    if (!checks.empty()) {
        bool all = false;
        opts.check_order = opts.check_ordering = opts.check_characterization = false;
        for (const auto& c : checks) {
            if (c == "all") all = true;
            if (c == "order") opts.check_order = true;
            if (c == "ordering") opts.check_ordering = true;
            if (c == "characterization") opts.check_characterization = true;
        }
        if (all) opts.check_order = opts.check_ordering = opts.check_characterization = true;
    }

    SurveySummary sum;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw parse_error(parse_error::kind::malformed, "cannot open file: " + file);
        sum = survey_graph6_stream(in, opts);
    } else {
        std::vector<std::pair<std::string, Graph>> corpus;
        for (auto& g : random_graph_corpus(random_count, max_n, seed))
            corpus.emplace_back(encode_graph6(g), std::move(g));
        sum = survey_graphs(corpus, opts);
    }

    if (output == "json") {
        json records = json::array();
        for (const auto& r : sum.records) records.push_back(survey_record_json(r));
        print_json(json{{"records", records},
                        {"graphs", sum.graphs},
                        {"violations", sum.violations},
                        {"parse_errors", sum.parse_errors},
                        {"guard_errors", sum.guard_errors}});
    } else if (output == "human") {
        for (const auto& r : sum.records)
            if (!r.parsed || r.guard_exceeded || r.violation())
                std::cout << (r.violation() ? "violation: " : "skipped: ") << r.id << " ("
                          << r.note << ")\n";
        std::cout << sum.graphs << " graphs, " << sum.violations << " violations, "
                  << sum.parse_errors << " parse errors, " << sum.guard_errors
                  << " guard errors\n";
    } else {
        std::cout << "# id\tn\tm\tgamma_r_star\tgamma_pr_star\torder\tordering\t"
                     "characterization\tnote\n";
        for (const auto& r : sum.records) std::cout << survey_tsv_row(r) << "\n";
        std::cout << "# graphs=" << sum.graphs << " violations=" << sum.violations
                  << " parse_errors=" << sum.parse_errors << " guard_errors=" << sum.guard_errors
                  << "\n";
    }

    if (sum.guard_errors > 0) return 3;
    if (sum.parse_errors > 0) return 2;
    return sum.violations > 0 ? 1 : 0;
}

// --- open-problems -----------------------------------------------------------

int cmd_open_problems(bool complete, bool bipartite, int max_size, const std::string& output,
                      int guard) {
    if (!complete && !bipartite) complete = bipartite = true;
    json out = json::object();
    std::ostringstream tsv, human;
    if (complete) {
        auto rows = open_problem_table(FamilyKind::complete, max_size, guard);
        out["complete"] = rows;
        for (const auto& r : rows) {
            tsv << "K_n\t" << r.params[0] << "\t" << r.gamma_pr_star << "\n";
            human << "gamma_pr_star(K_" << r.params[0] << ") = " << r.gamma_pr_star << "\n";
        }
    }
    if (bipartite) {
        auto rows = open_problem_table(FamilyKind::complete_bipartite, max_size, guard);
        out["complete_bipartite"] = rows;
        for (const auto& r : rows) {
            tsv << "K_{m,n}\t" << r.params[0] << "," << r.params[1] << "\t" << r.gamma_pr_star
                << "\n";
            human << "gamma_pr_star(K_{" << r.params[0] << "," << r.params[1] << "}) = "
                  << r.gamma_pr_star << "\n";
        }
    }
    if (output == "json")
        print_json(out);
    else if (output == "tsv")
        std::cout << tsv.str();
    else
        std::cout << human.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Roman and perfect Roman domination solver for middle graphs"};
    app.require_subcommand(1);

    int guard_flag = -1;
    app.add_option("--size-guard", guard_flag,
                   "element budget for the subset search (0-64, default 64; "
                   "MR_SIZE_GUARD overrides)")
        ->check(CLI::Range(0, 64));

    GraphInput solve_in, middle_in, check_in;
    std::vector<std::string> gammas;
    std::string solve_out = "human", middle_out = "human", construct_out = "human",
                check_out = "human", survey_out = "tsv", op_out = "human";

    CLI::App* solve = app.add_subcommand("solve", "compute domination numbers with witnesses");
    add_graph_options(solve, solve_in);
    solve->add_option("--gamma", gammas, "which invariant: r, pr, r-star, pr-star (repeatable)")
        ->check(CLI::IsMember({"r", "pr", "r-star", "pr-star"}));
    solve->add_option("--output", solve_out, "json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));

    CLI::App* middle = app.add_subcommand("middle", "construct the middle graph M(G)");
    add_graph_options(middle, middle_in);
    middle->add_option("--output", middle_out, "json, tsv (edge-list text) or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));

    CLI::App* construct =
        app.add_subcommand("construct", "closed-form perfect labelings for paths and cycles");
    int construct_path = -1, construct_cycle = -1;
    construct->add_option("--path", construct_path, "path P_n, n >= 2");
    construct->add_option("--cycle", construct_cycle, "cycle C_n, n >= 3");
    construct->add_option("--output", construct_out, "json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));

    CLI::App* check = app.add_subcommand(
        "check", "test the equality characterization on one graph (exit 1 when inconsistent)");
    add_graph_options(check, check_in);
    check->add_option("--output", check_out, "json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));

    CLI::App* survey =
        app.add_subcommand("survey", "verify the invariants over a graph corpus");
    std::string survey_file;
    int survey_random = -1, survey_max_n = 9;
    unsigned survey_seed = 1;
    std::vector<std::string> survey_checks;
    survey->add_option("--file", survey_file, "graph6 file, one graph per line");
    survey->add_option("--random", survey_random, "survey COUNT seeded random graphs instead");
    survey->add_option("--max-n", survey_max_n, "max order for random graphs (default 9)")
        ->check(CLI::Range(1, 62));
    survey->add_option("--seed", survey_seed, "random corpus seed (default 1)");
    survey->add_option("--checks", survey_checks,
                       "order, ordering, characterization or all (default all)")
        ->check(CLI::IsMember({"order", "ordering", "characterization", "all"}));
    survey->add_option("--output", survey_out, "json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));

    CLI::App* op = app.add_subcommand("open-problems",
                                      "computed gamma_pr_star tables for K_n and K_{m,n}");
    bool op_complete = false, op_bipartite = false;
    int op_max = 5;
    op->add_flag("--complete", op_complete, "table for complete graphs");
    op->add_flag("--complete-bipartite", op_bipartite, "table for complete bipartite graphs");
    op->add_option("--max", op_max, "max order (K_n) / max m+n (K_{m,n}), default 5");
    op->add_option("--output", op_out, "json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));

    // --size-guard may appear after the subcommand name
    for (CLI::App* sub : {solve, middle, construct, check, survey, op}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        int guard = resolve_size_guard(guard_flag);
        if (app.got_subcommand(solve)) return cmd_solve(solve_in, gammas, solve_out, guard);
        if (app.got_subcommand(middle)) return cmd_middle(middle_in, middle_out);
        if (app.got_subcommand(construct))
            return cmd_construct(construct_path, construct_cycle, construct_out);
        if (app.got_subcommand(check)) return cmd_check(check_in, check_out, guard);
        if (app.got_subcommand(survey))
            return cmd_survey(survey_file, survey_random, survey_max_n, survey_seed,
                              survey_checks, survey_out, guard);
        if (app.got_subcommand(op))
            return cmd_open_problems(op_complete, op_bipartite, op_max, op_out, guard);
        return 2;
    } catch (const size_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
