#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "midroman/enumerate.hpp"
#include "midroman/graph.hpp"
#include "midroman/labeling.hpp"
#include "midroman/middle.hpp"
#include "midroman/random_graphs.hpp"
#include "midroman/solve.hpp"

using namespace midroman;

namespace {
Labeling lab(std::vector<std::uint8_t> v) { return Labeling(std::move(v)); }
} // namespace

TEST_CASE("validity predicates") {
    Graph p3 = path_graph(3);
    CHECK(is_rdf(p3, lab({1, 1, 1})));
    CHECK(is_rdf(p3, lab({0, 2, 0})));
    CHECK(!is_rdf(complete_graph(2), lab({0, 0})));

    CHECK(is_prdf(p3, lab({0, 2, 0})));
    // each 0-vertex of the 4-cycle sees both opposite 2s
    CHECK(!is_prdf(cycle_graph(4), lab({2, 0, 2, 0})));
    CHECK(is_prdf(cycle_graph(4), lab({1, 1, 1, 1})));

    CHECK_THROWS_AS(is_rdf(p3, lab({0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(lab({0, 3, 0}), std::invalid_argument);
}

TEST_CASE("brute force oracle anchors") {
    CHECK(brute_force_oracle(path_graph(4), true) == 3);
    CHECK(brute_force_oracle(complete_graph(2), false) == 2);
    CHECK(brute_force_oracle(complete_graph(1), false) == 1);
    CHECK(brute_force_oracle(complete_graph(1), true) == 1);
    CHECK_THROWS_AS(brute_force_oracle(empty_graph(13), false), size_guard_error);
}

TEST_CASE("gamma_r anchors") {
    for (int n = 2; n <= 6; ++n) CHECK(gamma_r(complete_graph(n)).optimum == 2);
    // frozen from the 3^5 brute force; equals ceil(2*5/3)
    CHECK(brute_force_oracle(cycle_graph(5), false) == 4);
    CHECK(gamma_r(cycle_graph(5)).optimum == 4);
    CHECK(gamma_r(build_middle_graph(path_graph(3)).graph).optimum == 3);
    CHECK(gamma_r(empty_graph(0)).optimum == 0);
}

TEST_CASE("gamma_pr anchors") {
    CHECK(gamma_pr(star_graph(3)).optimum == 2);
    CHECK(gamma_pr(star_graph(3)).witness.values[0] == 2);
    CHECK(gamma_pr(path_graph(4)).optimum == 3);
    for (int n = 1; n <= 8; ++n) CHECK(gamma_pr(empty_graph(n)).optimum == n);
}

TEST_CASE("solver agrees with oracle on all small graphs") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : all_graphs_upto_iso(n)) {
            CHECK(gamma_r(g).optimum == brute_force_oracle(g, false));
            CHECK(gamma_pr(g).optimum == brute_force_oracle(g, true));
        }
    }
}

TEST_CASE("solver agrees with oracle on random graphs") {
    std::mt19937 gen(101);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(1 + gen() % 9, survey_edge_probs[trial % 3], gen);
        CHECK(gamma_r(g).optimum == brute_force_oracle(g, false));
        CHECK(gamma_pr(g).optimum == brute_force_oracle(g, true));
    }
}

TEST_CASE("witnesses validate and match the optimum") {
    std::mt19937 gen(55);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = erdos_renyi(1 + gen() % 10, 0.4, gen);
        SolveResult r = gamma_r(g);
        CHECK(is_rdf(g, r.witness));
        CHECK(r.witness.weight == r.optimum);
        for (int v : r.two_set) CHECK(r.witness.values[v] == 2);

        SolveResult p = gamma_pr(g);
        CHECK(is_prdf(g, p.witness));
        CHECK(p.witness.weight == p.optimum);
        CHECK(p.optimum >= r.optimum); // every perfect function is a plain one
    }
}

TEST_CASE("isolated vertices get label 1 in witnesses") {
    Graph g = disjoint_union(path_graph(3), empty_graph(2));
    SolveResult r = gamma_r(g);
    CHECK(r.witness.values[3] == 1);
    CHECK(r.witness.values[4] == 1);
    SolveResult p = gamma_pr(g);
    CHECK(p.witness.values[3] == 1);
    CHECK(p.witness.values[4] == 1);
}

TEST_CASE("deterministic witnesses and tie-breaking") {
    std::mt19937 gen(77);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = erdos_renyi(2 + gen() % 8, 0.5, gen);
        SolveResult a = gamma_r(g);
        SolveResult b = gamma_r(g);
        CHECK(a.witness == b.witness);
        CHECK(a.two_set == b.two_set);
    }
    // P3's optimum has the center as its unique smallest 2-set
    CHECK(gamma_r(path_graph(3)).two_set == std::vector<int>{1});
}

TEST_CASE("optimal two-set enumeration") {
    auto p3 = enumerate_optimal_two_sets(path_graph(3), false);
    REQUIRE(p3.size() == 1);
    CHECK(p3[0] == std::vector<int>{1});

    auto k1 = enumerate_optimal_two_sets(complete_graph(1), false);
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].empty());
    CHECK(enumerate_optimal_two_sets(complete_graph(1), true) == k1);

    auto c3 = enumerate_optimal_two_sets(cycle_graph(3), false);
    REQUIRE(c3.size() == 3);
    for (int v = 0; v < 3; ++v) CHECK(c3[v] == std::vector<int>{v});

    // every enumerated set completes to the optimum; distinct sets give
    // distinct minimum-weight functions
    std::mt19937 gen(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = erdos_renyi(1 + gen() % 7, 0.4, gen);
        for (bool perfect : {false, true}) {
            int opt = (perfect ? gamma_pr(g) : gamma_r(g)).optimum;
            auto sets = enumerate_optimal_two_sets(g, perfect);
            CHECK(!sets.empty());
            for (const auto& s : sets) {
                Labeling f = forced_completion(g, s, perfect);
                CHECK(f.weight == opt);
                CHECK((perfect ? is_prdf(g, f) : is_rdf(g, f)));
            }
        }
    }
}

TEST_CASE("component additivity") {
    CHECK(solve_by_components(disjoint_union(complete_graph(2), complete_graph(2)), true).optimum == 4);
    CHECK(solve_by_components(empty_graph(3), false).optimum == 3);
    CHECK(solve_by_components(path_graph(4), true).optimum == gamma_pr(path_graph(4)).optimum);

    std::mt19937 gen(21);
    for (const auto& g : random_disconnected_corpus(25, 31)) {
        for (bool perfect : {false, true}) {
            SolveResult split = solve_by_components(g, perfect);
            SolveResult mono = detail::solve_roman(g, perfect, default_size_guard);
            CHECK(split.optimum == mono.optimum);
            CHECK(split.witness.weight == split.optimum);
            CHECK((perfect ? is_prdf(g, split.witness) : is_rdf(g, split.witness)));
        }
    }
    (void)gen;
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(gamma_r(empty_graph(65)), size_guard_error);
    CHECK_THROWS_AS(gamma_r(complete_graph(12), 10), size_guard_error);
    CHECK_THROWS_AS(enumerate_optimal_two_sets(complete_graph(12), false, 10), size_guard_error);
    // per-component solves fit under the guard even when the union does not
    Graph g = disjoint_union(empty_graph(40), empty_graph(40));
    CHECK(solve_by_components(g, false).optimum == 80);
    CHECK_THROWS_AS(gamma_r(g), size_guard_error);
}

TEST_CASE("tree bound") {
    for (const auto& t : random_tree_corpus(40, 3, 12, 17))
        CHECK(5 * gamma_pr(t).optimum <= 4 * t.n);
}
