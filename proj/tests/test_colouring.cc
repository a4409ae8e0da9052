/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/colouring.hh>
#include <boxcol/colouring_json.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>
#include <set>

using namespace boxcol;
using std::vector;

namespace
{
    /// Colours listed in walking order 0-1, 1-2, ..., (n-1)-0 around cycle(n).
    auto around_cycle(std::size_t n, vector<unsigned> walk, unsigned k) -> EdgeColouring
    {
        auto g = cycle(n);
        vector<unsigned> colours(g.edge_count());
        for (Vertex i = 0 ; i < n ; ++i)
            colours[*g.edge_between(i, (i + 1) % n)] = walk[i];
        return EdgeColouring::from_indices(colours, k);
    }

    auto random_proper_colouring(const Graph & g, unsigned k, std::mt19937_64 & rng) -> EdgeColouring
    {
        vector<unsigned> colours(g.edge_count(), ~0u);
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
            auto [u, v] = g.edge(e);
            vector<unsigned> free;
            for (unsigned c = 0 ; c < k ; ++c) {
                bool ok = true;
                for (auto w : { u, v })
                    for (auto & inc : g.neighbours(w))
                        if (colours[inc.edge] == c)
                            ok = false;
                if (ok)
                    free.push_back(c);
            }
            if (free.empty())
                colours[e] = k++;
            else
                colours[e] = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
        }
        return EdgeColouring::from_indices(colours, k);
    }

    /// Forest test by counting: a graph is a forest iff |E| = |V| - components.
    auto has_two_coloured_cycle(const Graph & g, const EdgeColouring & x) -> bool
    {
        std::set<Colour> palette(x.colours().begin(), x.colours().end());
        for (auto a : palette)
            for (auto b : palette) {
                if (! (a < b))
                    continue;
                vector<Edge> sub;
                for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
                    if (x.colour(e) == a || x.colour(e) == b)
                        sub.push_back(g.edge(e));
                Graph s{ g.vertex_count(), sub };
                vector<int> comp(g.vertex_count(), -1);
                std::size_t components = 0;
                for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
                    if (comp[v] != -1)
                        continue;
                    ++components;
                    vector<Vertex> stack{ v };
                    comp[v] = 1;
                    while (! stack.empty()) {
                        auto w = stack.back();
                        stack.pop_back();
                        for (auto & inc : s.neighbours(w))
                            if (comp[inc.neighbour] == -1) {
                                comp[inc.neighbour] = 1;
                                stack.push_back(inc.neighbour);
                            }
                    }
                }
                if (s.edge_count() != g.vertex_count() - components)
                    return true;
            }
        return false;
    }
}

TEST_CASE("colour identifiers")
{
    CHECK(to_string(Colour::unprimed(3)) == "3");
    CHECK(to_string(Colour::primed(0)) == "0'");
    CHECK(parse_colour("12'") == Colour::primed(12));
    CHECK(parse_colour("7") == Colour::unprimed(7));
    CHECK(Colour::unprimed(100) < Colour::primed(0));
    CHECK_THROWS_AS(parse_colour(""), ColouringError);
    CHECK_THROWS_AS(parse_colour("'"), ColouringError);
    CHECK_THROWS_AS(parse_colour("x1"), ColouringError);

    ColourPalette p{ 3, 2 };
    CHECK(p.size() == 5);
    CHECK(p.contains(Colour::primed(1)));
    CHECK(! p.contains(Colour::primed(2)));
    CHECK(! p.contains(Colour::unprimed(3)));
    CHECK(p.rank(Colour::primed(1)) == 4);
}

TEST_CASE("edge colourings reject colours outside their palette")
{
    CHECK_THROWS_AS((EdgeColouring{ { 2, 0 }, { Colour::unprimed(2) } }), ColouringError);
    CHECK_THROWS_AS((EdgeColouring{ { 2, 0 }, { Colour::primed(0) } }), ColouringError);

    EdgeColouring mixed{ { 2, 1 }, { Colour::unprimed(1), Colour::primed(0) } };
    auto flat = mixed.flattened();
    CHECK(flat.palette() == ColourPalette{ 3, 0 });
    CHECK(flat.colour(0) == Colour::unprimed(1));
    CHECK(flat.colour(1) == Colour::unprimed(2));
}

TEST_CASE("check_proper_edge")
{
    auto c4 = cycle(4);
    CHECK(! check_proper_edge(c4, around_cycle(4, { 0, 1, 0, 1 }, 2)));

    vector<unsigned> zero{ 0 };
    CHECK(! check_proper_edge(path(2), EdgeColouring::from_indices(zero, 1)));

    auto p3 = path(3);
    vector<unsigned> same{ 0, 0 };
    auto x = EdgeColouring::from_indices(same, 1);
    auto v = check_proper_edge(p3, x);
    REQUIRE(v);
    auto & np = std::get<NotProper>(*v);
    CHECK(np.vertex == 1);
    CHECK(np.first == 0);
    CHECK(np.second == 1);
    CHECK(witness_holds(p3, x, *v));

    CHECK_THROWS_AS(check_proper_edge(cycle(4), x), ColouringError);
}

TEST_CASE("find_bichromatic_cycle")
{
    auto c4 = cycle(4);
    auto alternating = around_cycle(4, { 0, 1, 0, 1 }, 2);
    auto found = find_bichromatic_cycle(c4, alternating);
    REQUIRE(found);
    CHECK(found->a == Colour::unprimed(0));
    CHECK(found->b == Colour::unprimed(1));
    CHECK(found->cycle == vector<Vertex>{ 0, 1, 2, 3 });
    CHECK(witness_holds(c4, alternating, *found));

    CHECK(! find_bichromatic_cycle(c4, around_cycle(4, { 0, 1, 0, 2 }, 3)));

    vector<unsigned> improper{ 0, 0, 1, 1 };
    CHECK_THROWS_AS(find_bichromatic_cycle(c4, EdgeColouring::from_indices(improper, 2)), ColouringError);
}

TEST_CASE("check_acyclic reports properness before cycles")
{
    auto c4 = cycle(4);
    auto two = check_acyclic(c4, around_cycle(4, { 0, 1, 0, 1 }, 2));
    REQUIRE(two);
    CHECK(std::holds_alternative<BichromaticCycle>(*two));

    vector<unsigned> improper{ 0, 0, 1, 1 };
    auto bad = check_acyclic(c4, EdgeColouring::from_indices(improper, 2));
    REQUIRE(bad);
    CHECK(std::holds_alternative<NotProper>(*bad));

    CHECK(! check_acyclic(c4, around_cycle(4, { 0, 1, 0, 2 }, 3)));
    CHECK(describe(c4, *two) == "bichromatic cycle in colours 0 and 1: 0 1 2 3");
}

TEST_CASE("check_proper_vertex")
{
    CHECK(! check_proper_vertex(cycle(4), VertexColouring{ { 0, 1, 0, 1 } }));
    auto bad = check_proper_vertex(path(2), VertexColouring{ { 0, 0 } });
    REQUIRE(bad);
    CHECK(*bad == Edge{ 0, 1 });
    CHECK(! check_proper_vertex(cycle(5), VertexColouring{ { 0, 1, 0, 1, 2 } }));
    CHECK_THROWS_AS(check_proper_vertex(cycle(5), VertexColouring{ { 0, 1 } }), ColouringError);
}

TEST_CASE("colours_used")
{
    vector<unsigned> zero{ 0 };
    CHECK(colours_used(EdgeColouring::from_indices(zero, 1)) == 1);
    CHECK(colours_used(around_cycle(4, { 0, 1, 0, 2 }, 3)) == 3);
    CHECK(colours_used(around_cycle(4, { 0, 1, 0, 1 }, 5)) == 2);
}

TEST_CASE("canonical_cycle rotates to the smallest vertex and turns towards the smaller neighbour")
{
    CHECK(canonical_cycle({ 5, 2, 7, 3 }) == vector<Vertex>{ 2, 5, 3, 7 });
    CHECK(canonical_cycle({ 4, 1, 2, 9 }) == vector<Vertex>{ 1, 2, 9, 4 });
}

TEST_CASE("verifier agrees with an independent forest count and every witness re-validates")
{
    std::mt19937_64 rng{ 23 };
    int with_cycle = 0, without = 0;
    for (int round = 0 ; round < 600 ; ++round) {
        auto g = test::random_connected_graph(3 + round % 8, 0.35, rng);
        auto x = random_proper_colouring(g, unsigned(g.max_degree()) + round % 3, rng);

        auto v = check_acyclic(g, x);
        CHECK(bool(v) == has_two_coloured_cycle(g, x));
        CHECK(colours_used(x) >= g.max_degree());
        if (v) {
            ++with_cycle;
            auto & bc = std::get<BichromaticCycle>(*v);
            CHECK(bc.cycle.size() % 2 == 0);
            CHECK(bc.cycle == canonical_cycle(bc.cycle));
            CHECK(witness_holds(g, x, *v));
        }
        else
            ++without;
    }
    CHECK(with_cycle > 50);
    CHECK(without > 50);
}

TEST_CASE("witness_holds rejects doctored witnesses")
{
    auto c4 = cycle(4);
    auto x = around_cycle(4, { 0, 1, 0, 1 }, 2);
    CHECK(! witness_holds(c4, x, BichromaticCycle{ Colour::unprimed(0), Colour::unprimed(1), { 0, 2, 1, 3 } }));
    CHECK(! witness_holds(c4, x, BichromaticCycle{ Colour::unprimed(0), Colour::unprimed(2), { 0, 1, 2, 3 } }));
    CHECK(! witness_holds(c4, x, NotProper{ 0, 0, 1 }));
    CHECK(! witness_holds(c4, around_cycle(4, { 0, 1, 0, 2 }, 3),
                BichromaticCycle{ Colour::unprimed(0), Colour::unprimed(1), { 0, 1, 2, 3 } }));
}

TEST_CASE("colouring JSON")
{
    auto g = path(3);
    EdgeColouring x{ { 1, 1 }, { Colour::unprimed(0), Colour::primed(0) } };
    auto doc = colouring_to_json(g, x);
    CHECK(doc.dump() == R"({"edges":[[0,1,"0"],[1,2,"0'"]],"n":3,"palette":{"g":1,"h":1}})");

    auto back = colouring_from_json(doc);
    CHECK(back.graph == g);
    CHECK(back.colouring == x);

    std::mt19937_64 rng{ 29 };
    for (int round = 0 ; round < 50 ; ++round) {
        auto r = test::random_connected_graph(2 + round % 9, 0.3, rng);
        auto rx = random_proper_colouring(r, unsigned(r.max_degree()), rng);
        auto again = colouring_from_json(r, nlohmann::json::parse(colouring_to_json(r, rx).dump()));
        CHECK(again == rx);
    }

    auto partial = nlohmann::json::parse(R"({"n":3,"palette":{"g":1,"h":0},"edges":[[0,1,"0"]]})");
    CHECK_THROWS_AS(colouring_from_json(g, partial), ColouringError);
    auto non_edge = nlohmann::json::parse(R"({"n":3,"palette":{"g":1,"h":0},"edges":[[0,1,"0"],[0,2,"0"]]})");
    CHECK_THROWS_AS(colouring_from_json(g, non_edge), ColouringError);
    auto outside = nlohmann::json::parse(R"({"n":3,"palette":{"g":1,"h":0},"edges":[[0,1,"0"],[1,2,"1"]]})");
    CHECK_THROWS_AS(colouring_from_json(g, outside), ColouringError);
    auto garbage = nlohmann::json::parse(R"({"n":"three"})");
    CHECK_THROWS_AS(colouring_from_json(garbage), ColouringError);

    CHECK(vertex_colouring_to_json(VertexColouring{ { 0, 1 } }).dump() == R"({"0":0,"1":1})");
}
