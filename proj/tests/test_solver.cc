/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/solver.hh>

#include "oracles.hh"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace boxcol;
using std::vector;

namespace
{
    /// The subgraph formed by the coloured edges, with their colours.
    auto partial_as_graph(const Graph & g, const vector<std::pair<EdgeIndex, unsigned>> & assigned) -> ColouredGraph
    {
        vector<Edge> edges;
        for (auto & [e, _] : assigned)
            edges.push_back(g.edge(e));
        Graph sub{ g.vertex_count(), edges };
        vector<unsigned> colours(sub.edge_count());
        unsigned k = 0;
        for (auto & [e, c] : assigned) {
            colours[*sub.edge_between(g.edge(e).u, g.edge(e).v)] = c;
            k = std::max(k, c + 1);
        }
        return { sub, EdgeColouring::from_indices(colours, k) };
    }
}

TEST_CASE("lower_bound")
{
    CHECK(lower_bound(path(2)) == 1);
    CHECK(lower_bound(cycle(4)) == 3);
    CHECK(lower_bound(hypercube(3)) == 4);
    CHECK(lower_bound(path(5)) == 2);
    CHECK(lower_bound(path(1)) == 0);
}

TEST_CASE("exact_aci on the named examples")
{
    CHECK(exact_aci(cycle(4)).aci == 3);
    CHECK(exact_aci(path(2)).aci == 1);
    CHECK(exact_aci(hypercube(3)).aci == 4);
    CHECK(exact_aci(path(1)).aci == 0);
}

TEST_CASE("exact_aci on C5 matches brute force")
{
    // brute force over every proper 2- and 3-edge-colouring of C5
    CHECK(! test::brute_force_acyclic(cycle(5), 2));
    CHECK(test::brute_force_acyclic(cycle(5), 3));
    unsigned expected = test::brute_force_aci(cycle(5));
    CHECK(expected == 3);

    auto result = exact_aci(cycle(5));
    CHECK(result.aci == expected);
    CHECK(colours_used(result.witness) == result.aci);
    CHECK(is_acyclic(cycle(5), result.witness));
}

TEST_CASE("exact_aci agrees with brute force on every connected graph up to five vertices")
{
    for (auto & g : test::all_connected_graphs_up_to(5)) {
        auto result = exact_aci(g);
        CHECK(result.aci == test::brute_force_aci(g));
        CHECK(! check_acyclic(g, result.witness));
        CHECK(colours_used(result.witness) == result.aci);
        CHECK(! result.stats.budget_exhausted);
    }
}

TEST_CASE("greedy_acyclic")
{
    CHECK(colours_used(greedy_acyclic(path(2))) == 1);
    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed)
        CHECK(colours_used(greedy_acyclic(path(5), seed)) == 2);

    auto k6 = complete(6);
    auto x = greedy_acyclic(k6);
    CHECK(colours_used(x) >= 5);
    CHECK(colours_used(x) <= 15);
    CHECK(is_acyclic(k6, x));

    CHECK(greedy_acyclic(petersen(), 3) == greedy_acyclic(petersen(), 3));
}

TEST_CASE("lower_bound <= exact_aci <= greedy")
{
    std::mt19937_64 rng{ 37 };
    vector<Graph> corpus = test::all_connected_graphs_up_to(5);
    for (int i = 0 ; i < 30 ; ++i)
        corpus.push_back(test::random_connected_graph(4 + i % 4, 0.4, rng));

    for (auto & g : corpus) {
        auto exact = exact_aci(g).aci;
        CHECK(lower_bound(g) <= exact);
        for (std::uint64_t seed = 0 ; seed < 3 ; ++seed)
            CHECK(exact <= colours_used(greedy_acyclic(g, seed)));
    }
}

TEST_CASE("alternating path tracker agrees with the full verifier on every graph up to six vertices")
{
    std::mt19937_64 rng{ 41 };
    for (std::size_t n = 2 ; n <= 6 ; ++n)
        for (auto & g : all_graphs(n)) {
            if (g.edge_count() == 0)
                continue;
            for (int trial = 0 ; trial < 3 ; ++trial) {
                unsigned k = unsigned(g.max_degree()) + unsigned(trial % 2);
                AlternatingPathTracker tracker{ g, k };
                vector<std::pair<EdgeIndex, unsigned>> assigned;
                vector<EdgeIndex> order(g.edge_count());
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);

                for (auto e : order)
                    for (unsigned c = 0 ; c < k ; ++c) {
                        auto candidate = assigned;
                        candidate.emplace_back(e, c);
                        auto [sub, x] = partial_as_graph(g, candidate);
                        bool full = ! check_acyclic(sub, x);
                        REQUIRE(tracker.can_assign(e, c) == full);
                        if (full) {
                            tracker.assign(e, c);
                            assigned = candidate;
                            break;
                        }
                    }
            }
        }
}

TEST_CASE("replayed solver traces stay proper and acyclic at every step")
{
    vector<Graph> graphs{ hypercube(3), complete(5), petersen(), cycle(6) };
    for (auto & g : connected_graphs(6))
        if (g.edge_count() >= 9)
            graphs.push_back(g);

    for (auto & g : graphs) {
        SearchTrace trace;
        exact_aci(g, {}, &trace);
        REQUIRE(! trace.steps.empty());

        vector<std::pair<EdgeIndex, unsigned>> stack;
        for (auto & step : trace.steps) {
            stack.resize(std::min(stack.size(), step.depth));
            REQUIRE(stack.size() == step.depth);
            stack.emplace_back(step.edge, step.colour);
            CHECK(step.colour < step.k);
            auto [sub, x] = partial_as_graph(g, stack);
            CHECK(! check_acyclic(sub, x));
        }
    }
}

TEST_CASE("budget exhaustion reports bounds")
{
    SearchBudget tiny{ 50, std::chrono::milliseconds{ 60'000 } };
    try {
        exact_aci(complete(7), tiny);
        FAIL("expected the budget to run out");
    }
    catch (const BudgetExhausted & e) {
        CHECK(e.lower >= lower_bound(complete(7)));
        CHECK(e.lower <= e.upper);
        CHECK(e.stats.budget_exhausted);
        CHECK(e.stats.nodes > 50);
    }
}

TEST_CASE("exact_aci is deterministic")
{
    auto a = exact_aci(petersen()), b = exact_aci(petersen());
    CHECK(a.aci == b.aci);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("search order sorts by degree sum, ties by index")
{
    // star with a pendant path: centre 0 has degree 3
    vector<Edge> edges{ { 0, 1 }, { 0, 2 }, { 0, 3 }, { 3, 4 } };
    Graph g{ 5, edges };
    CHECK(search_order(g) == vector<EdgeIndex>{ 2, 0, 1, 3 });
}
