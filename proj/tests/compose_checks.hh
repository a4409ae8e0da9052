/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BOXCOL_GUARD_TESTS_COMPOSE_CHECKS_HH
#define BOXCOL_GUARD_TESTS_COMPOSE_CHECKS_HH 1

// Structural checks on a compose result, read straight off the product's
// coordinates rather than from compose's own bookkeeping.

#include <boxcol/compose.hh>

#include <string>
#include <vector>

namespace boxcol::test
{
    /// Empty when every invariant holds; otherwise one line per failure.
    inline auto compose_invariant_failures(const ComposeInput & in, const ComposeResult & r) -> std::vector<std::string>
    {
        std::vector<std::string> failures;
        auto fail = [&] (std::string s) { failures.push_back(std::move(s)); };

        const Graph & p = r.product.graph;
        const Graph & role_g = r.swapped ? in.h : in.g;
        const Graph & role_h = r.swapped ? in.g : in.h;
        auto x_g = (r.swapped ? in.x_h : in.x_g).flattened();
        auto x_h = (r.swapped ? in.x_g : in.x_h).flattened();

        // product edge joining (a, v)-(b, v) in role coordinates
        auto at = [&] (Vertex g_vertex, Vertex h_vertex) {
            return r.swapped ? r.product.index_of({ h_vertex, g_vertex }) : r.product.index_of({ g_vertex, h_vertex });
        };
        auto colour_between = [&] (Vertex a, Vertex b) -> Colour {
            return r.colouring.colour(*p.edge_between(a, b));
        };

        if (auto v = check_proper_edge(p, r.colouring))
            fail("not proper: " + describe(p, *v));
        if (auto v = find_bichromatic_cycle(p, r.colouring))
            fail("cyclic: " + describe(p, *v));
        if (colours_used(r.colouring) > r.eta + r.beta)
            fail("more than eta + beta colours");
        if (r.eta < r.d)
            fail("eta below d");

        // matching consistency and the H_u restriction
        for (EdgeIndex f = 0 ; f < role_h.edge_count() ; ++f) {
            auto [v1, v2] = role_h.edge(f);
            for (Vertex u = 0 ; u < role_g.vertex_count() ; ++u) {
                auto c = colour_between(at(u, v1), at(u, v2));
                if (! c.is_primed())
                    fail("H-edge carries an unprimed colour");
                if (c != Colour::primed(x_h.colour(f).index()))
                    fail("H-edge copy differs from X_H");
            }
        }

        // G_v restriction and palette discipline for G-edges
        for (EdgeIndex e = 0 ; e < role_g.edge_count() ; ++e) {
            auto [a, b] = role_g.edge(e);
            for (Vertex v = 0 ; v < role_h.vertex_count() ; ++v) {
                auto c = colour_between(at(a, v), at(b, v));
                if (c.is_primed())
                    fail("G-edge carries a primed colour");
                auto expected = (x_g.colour(e).index() + r.y_h.colours.at(v)) % r.eta;
                if (c.index() != expected)
                    fail("G-edge copy differs from the shifted X_G");
            }
            // adjacent-copy distinctness
            for (auto [v1, v2] : role_h.edges())
                if (colour_between(at(a, v1), at(b, v1)) == colour_between(at(a, v2), at(b, v2)))
                    fail("G-edge has equal colours in adjacent copies");
        }

        return failures;
    }
}

#endif
