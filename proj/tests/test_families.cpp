#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "distspec/canonical.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/families.hpp"
#include "distspec/spectral.hpp"
#include "oracles.hpp"

using namespace distspec;

TEST_CASE("basic families")
{
    CHECK(complete(3) == cycle(3));
    for (int n = 2; n <= 9; ++n) CHECK(complete_bipartite(1, n - 1) == star(n));
    CHECK(path(2) == complete(2));
    CHECK(path(1).order() == 1);
    CHECK(complete(6).size() == 15);
    CHECK(cycle(7).size() == 7);
    CHECK_THROWS_AS(cycle(2), GraphError);
    CHECK_THROWS_AS(complete_bipartite(0, 3), GraphError);

    const auto b = bipartition(complete_bipartite(3, 4));
    REQUIRE(b);
    for (int v = 0; v < 7; ++v) CHECK((b->side[v] == Side::a) == (v < 3));
}

TEST_CASE("brooms")
{
    for (int n = 3; n <= 9; ++n) {
        CHECK(isomorphic(broom(n, 2), path(n)));
        CHECK(isomorphic(broom(n, n - 1), star(n)));
        for (int delta = 2; delta < n; ++delta) {
            const Graph g = broom(n, delta);
            CHECK(g.size() == n - 1);
            CHECK(is_connected(g));
            CHECK(degree_summary(g).max1 == delta);
        }
    }
    auto degrees = broom(6, 3).degrees();
    std::sort(degrees.rbegin(), degrees.rend());
    CHECK(degrees == std::vector<int>{3, 2, 2, 1, 1, 1});
    CHECK_THROWS_AS(broom(5, 1), GraphError);
    CHECK_THROWS_AS(broom(5, 5), GraphError);
}

TEST_CASE("cocktail party graphs")
{
    const Graph cp1 = cocktail_party(1);
    CHECK(cp1.order() == 2);
    CHECK(cp1.size() == 0);
    CHECK_FALSE(is_connected(cp1));

    CHECK(isomorphic(cocktail_party(2), cycle(4)));
    CHECK(cocktail_party(3).order() == 6);
    CHECK(cocktail_party(3).size() == 12);
    for (int a = 1; a <= 6; ++a) {
        const Graph g = cocktail_party(a);
        for (int d : g.degrees()) CHECK(d == 2 * a - 2);
        for (int i = 0; i < a; ++i) CHECK_FALSE(g.adjacent(2 * i, 2 * i + 1));
    }
}

TEST_CASE("line graphs")
{
    CHECK(isomorphic(line_graph(path(4)), path(3)));
    CHECK(isomorphic(line_graph(complete(3)), complete(3)));
    CHECK(isomorphic(line_graph(star(4)), complete(3)));
    CHECK(isomorphic(line_graph(cycle(5)), cycle(5)));
    CHECK_THROWS_AS(line_graph(Graph(3)), GraphError);

    // Line graphs of r-regular graphs are (2r - 2)-regular.
    const std::vector<std::pair<Graph, int>> regular{
        {complete(5), 4}, {cycle(6), 2}, {cocktail_party(3), 4}, {complete_bipartite(3, 3), 3}};
    for (const auto& [g, r] : regular)
        for (int d : line_graph(g).degrees()) CHECK(d == 2 * r - 2);
}

TEST_CASE("generalized line graphs")
{
    const Graph k4 = complete(4);
    const std::vector<int> zeros(4, 0);
    CHECK(generalized_line_graph(k4, zeros) == line_graph(k4));

    const std::vector<int> a{1, 0};
    const Graph g = generalized_line_graph(complete(2), a);
    CHECK(g.order() == 3);
    CHECK(g == from_edges(3, {{0, 1}, {0, 2}}));
    CHECK(isomorphic(g, path(3)));

    const std::vector<int> wrong{1};
    CHECK_THROWS_AS(generalized_line_graph(complete(2), wrong), GraphError);
    const std::vector<int> negative{-1, 0};
    CHECK_THROWS_AS(generalized_line_graph(complete(2), negative), GraphError);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> count(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 6;
        Graph base = oracle::random_graph(n, 0.5, rng);
        if (base.size() == 0) base = path(n);
        std::vector<int> mult(n);
        for (int& m : mult) m = count(rng);
        const Graph glg = generalized_line_graph(base, mult);
        CHECK(adjacency_spectrum(glg).smallest() >= -2 - 1e-8);
    }
}

TEST_CASE("random generators")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 2 + static_cast<int>(seed);
        const Graph t = random_tree(n, seed);
        CHECK(t.size() == n - 1);
        CHECK(is_connected(t));
        CHECK(random_tree(n, seed) == t);

        const Graph g = random_connected(n, 0.3, seed);
        CHECK(is_connected(g));
        CHECK(random_connected(n, 0.3, seed) == g);
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(random_connected(10, 1.0, seed) == complete(10));
    CHECK_THROWS_AS(random_connected(40, 1e-6, 1), GraphError);
    CHECK_THROWS_AS(random_connected(5, 0.0, 1), GraphError);
    CHECK_THROWS_AS(random_connected(1, 0.5, 1), GraphError);
}

TEST_CASE("Pruefer decoding agrees with the oracle and is a bijection")
{
    for (int n = 2; n <= 6; ++n) {
        std::set<std::vector<Edge>> seen;
        long long count = 0;
        std::vector<int> seq(n - 2, 0);
        for (;;) {
            const Graph t = tree_from_pruefer(n, seq);
            CHECK(is_connected(t));
            seen.insert(t.edges());
            ++count;
            int k = n - 3;
            while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
            if (k < 0) break;
            ++seq[k];
        }
        long long cayley = 1;
        for (int k = 0; k < n - 2; ++k) cayley *= n;
        CHECK(count == cayley);
        CHECK(static_cast<long long>(seen.size()) == cayley);

        std::set<std::vector<Edge>> oracle_trees;
        oracle::for_each_labelled_tree(n, [&](const Graph& t) { oracle_trees.insert(t.edges()); });
        CHECK(oracle_trees == seen);
    }
}

TEST_CASE("canonical forms match the brute-force permutation oracle")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 7;
        const Graph g = oracle::random_graph(n, 0.45, rng);
        CHECK(canonical_form(g).code == oracle::brute_canonical_code(g));

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        CHECK(canonical_form(h) == canonical_form(g));
        CHECK(canonical_graph(h) == canonical_graph(g));
        CHECK(isomorphic(g, h));
    }
    CHECK_FALSE(isomorphic(path(4), star(4)));
    CHECK_FALSE(isomorphic(path(4), path(5)));
    CHECK_THROWS_AS(canonical_form(Graph(12)), GraphError);
}

TEST_CASE("canonical labelling handles highly symmetric graphs")
{
    const Graph pet = from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    std::mt19937_64 rng(4);
    for (const Graph& g : {pet, cycle(11), complete_bipartite(5, 6), cocktail_party(5), Graph(9)}) {
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_graph(relabel(g, perm)) == canonical_graph(g));
    }
}

TEST_CASE("connected graph counts")
{
    const std::vector<std::size_t> expected{0, 0, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 2; n <= 8; ++n) CHECK(all_connected_graphs(n).size() == expected[n]);
    CHECK(all_graphs(1).size() == 1);
    CHECK(all_graphs(4).size() == 11);
    CHECK(all_graphs(5).size() == 34);
    CHECK_THROWS_AS(all_connected_graphs(1), GraphError);
    CHECK_THROWS_AS(all_connected_graphs(9), GraphError);
}

TEST_CASE("small classes match a direct brute-force classification")
{
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::set<std::uint64_t> classes;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if (mask >> bit & 1u) edges.emplace_back(i, j);
            const Graph g = from_edges(n, edges);
            if (is_connected(g)) classes.insert(oracle::brute_canonical_code(g));
        }
        std::set<std::uint64_t> ours;
        for (const auto& g : all_connected_graphs(n)) ours.insert(oracle::brute_canonical_code(g));
        CHECK(ours == classes);
    }
}

TEST_CASE("enumerated classes account for every labelled connected graph")
{
    // Each class contributes n!/|Aut| labelled graphs.
    for (int n = 2; n <= 7; ++n) {
        const auto graphs = all_connected_graphs(n);
        long long labelled = 0;
        std::set<std::uint64_t> codes;
        for (const auto& g : graphs) {
            labelled += oracle::factorial(n) / oracle::automorphism_count(g);
            codes.insert(canonical_form(g).code);
            CHECK(is_connected(g));
        }
        CHECK(codes.size() == graphs.size());
        CHECK(labelled == oracle::labelled_connected_count(n));
    }
}

TEST_CASE("tree enumeration")
{
    const std::vector<std::size_t> expected{0, 0, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 2; n <= 9; ++n) {
        const auto trees = all_trees(n);
        CHECK(trees.size() == expected[n]);
        long long labelled = 0;
        for (const auto& t : trees) {
            CHECK(t.size() == n - 1);
            CHECK(is_connected(t));
            labelled += oracle::factorial(n) / oracle::automorphism_count(t);
        }
        long long cayley = 1;
        for (int k = 0; k < n - 2; ++k) cayley *= n;
        CHECK(labelled == cayley);
    }

    std::set<CanonicalForm> five;
    for (const auto& t : all_trees(5)) five.insert(canonical_form(t));
    CHECK(five == std::set<CanonicalForm>{canonical_form(path(5)), canonical_form(star(5)),
                                          canonical_form(broom(5, 3))});

    for (int n = 2; n <= 7; ++n) {
        std::set<std::uint64_t> from_sequences;
        oracle::for_each_labelled_tree(n, [&](const Graph& t) { from_sequences.insert(canonical_form(t).code); });
        CHECK(from_sequences.size() == all_trees(n).size());
    }
    CHECK_THROWS_AS(all_trees(10), GraphError);
}

TEST_CASE("family specs")
{
    CHECK(parse_family("complete:4").name == "K4");
    CHECK(parse_family("complete:4").graph == complete(4));
    CHECK(parse_family("path:5").graph == path(5));
    CHECK(parse_family("cycle:6").name == "C6");
    CHECK(parse_family("kpq:2,3").graph == complete_bipartite(2, 3));
    CHECK(parse_family("kpq:2,3").name == "K2_3");
    CHECK(parse_family("star:5").graph == star(5));
    CHECK(parse_family("broom:6,3").graph == broom(6, 3));
    CHECK(parse_family("cp:3").graph == cocktail_party(3));
    CHECK(parse_family("line:complete:4").graph == line_graph(complete(4)));
    const std::vector<int> a{1, 0};
    CHECK(parse_family("glg:1,0@path:2").graph == generalized_line_graph(path(2), a));
    CHECK(parse_family("random:12,0.3:7").graph == random_connected(12, 0.3, 7));
    CHECK(parse_family("tree:9:4").graph == random_tree(9, 4));
    CHECK(parse_family("tree:9").graph == random_tree(9, 0));

    for (const char* bad : {"complete", "complete:x", "kpq:2", "broom:5,9", "widget:3", "path:4:2", "random:5",
                            "cycle:2", "glg:1@path:3", "complete:4,5"})
        CHECK_THROWS_AS(parse_family(bad), FamilySpecError);
}
