/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/compose.hh>
#include <boxcol/vertex_colouring.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::size_t;
using std::string;
using std::vector;

using namespace boxcol;

ProductOfTwoK2::ProductOfTwoK2() :
    ComposeError("both factors are K2 with a single colour: K2□K2 is C4, whose acyclic chromatic index is 3, "
            "not 1 + 1; use compose_or_solve")
{
}

auto boxcol::sigma(unsigned shift, unsigned j, unsigned eta) -> unsigned
{
    if (shift >= eta || j >= eta)
        throw std::out_of_range{ "sigma(" + std::to_string(shift) + ", " + std::to_string(j) + ") outside modulus " + std::to_string(eta) };
    return (j + shift) % eta;
}

namespace
{
    auto require_factor(const Graph & g, const EdgeColouring & x, const string & name) -> void
    {
        if (g.vertex_count() < 2)
            throw ComposeError{ "factor " + name + " is trivial" };
        if (! is_connected(g))
            throw ComposeError{ "factor " + name + " is disconnected" };
        if (x.size() != g.edge_count())
            throw ComposeError{ "colouring of " + name + " does not cover its edges" };
        if (auto v = check_acyclic(g, x))
            throw ComposeError{ "colouring of " + name + " is not acyclic: " + describe(g, *v) };
    }
}

auto boxcol::compose(const ComposeInput & input) -> ComposeResult
{
    require_factor(input.g, input.x_g, "G");
    require_factor(input.h, input.x_h, "H");

    unsigned g_palette = input.x_g.palette().size(), h_palette = input.x_h.palette().size();
    if (g_palette == 1 && h_palette == 1)
        throw ProductOfTwoK2{};

    ComposeResult result;
    result.swapped = g_palette < h_palette;
    if (result.swapped && input.y_h)
        throw ComposeError{ "a vertex colouring of H was supplied, but H has the larger palette and takes the role of G" };

    const Graph & role_h = result.swapped ? input.g : input.h;
    auto flat_g = (result.swapped ? input.x_h : input.x_g).flattened();
    auto flat_h = (result.swapped ? input.x_g : input.x_h).flattened();

    result.eta = flat_g.palette().size();
    result.beta = flat_h.palette().size();
    result.d = d_of(role_h);

    if (input.y_h) {
        if (auto bad = check_proper_vertex(role_h, *input.y_h))
            throw ComposeError{ "supplied vertex colouring of H is not proper at edge {" + std::to_string(bad->u) + "," + std::to_string(bad->v) + "}" };
        result.y_h = *input.y_h;
    }
    else
        result.y_h = brooks_colouring(role_h);

    unsigned shifts = std::max(result.d, result.y_h.colour_count());
    if (result.eta < shifts) {
        result.warnings.push_back("G palette has " + std::to_string(result.eta) + " colours but " + std::to_string(shifts)
                + " shifts are needed; padding it to " + std::to_string(shifts));
        result.eta = shifts;
        result.padded = true;
    }

    result.product = cartesian_product(input.g, input.h);

    // In the caller's orientation a GEdge is a copy of a g-edge; whether that
    // is an e_v or an f_u edge of the construction depends on the swap.
    auto colour_g_copy = [&] (EdgeIndex e, Vertex at_h_vertex) {
        auto shift = ShiftPermutation{ result.y_h.colours.at(at_h_vertex), result.eta };
        return Colour::unprimed(shift(flat_g.colour(e).index()));
    };
    auto colour_h_copy = [&] (EdgeIndex f) {
        return Colour::primed(flat_h.colour(f).index());
    };

    vector<Colour> colours;
    colours.reserve(result.product.graph.edge_count());
    for (auto & kind : result.product.kinds) {
        if (auto ge = std::get_if<GEdge>(&kind))
            colours.push_back(result.swapped ? colour_h_copy(ge->e) : colour_g_copy(ge->e, ge->v));
        else {
            auto & he = std::get<HEdge>(kind);
            colours.push_back(result.swapped ? colour_g_copy(he.f, he.u) : colour_h_copy(he.f));
        }
    }
    result.colouring = EdgeColouring{ { result.eta, result.beta }, std::move(colours) };

    if (auto v = check_acyclic(result.product.graph, result.colouring))
        throw std::logic_error{ "composed colouring failed verification: " + describe(result.product.graph, *v) };
    if (colours_used(result.colouring) > result.eta + result.beta)
        throw std::logic_error{ "composed colouring uses more than eta + beta colours" };

    return result;
}

auto boxcol::compose_or_solve(const ComposeInput & input, const SearchBudget & budget) -> ColouredGraph
{
    try {
        auto result = compose(input);
        return { std::move(result.product.graph), std::move(result.colouring) };
    }
    catch (const ProductOfTwoK2 &) {
        auto product = cartesian_product(input.g, input.h);
        auto solved = exact_aci(product.graph, budget);
        return { std::move(product.graph), std::move(solved.witness) };
    }
}

auto boxcol::compose_many(std::span<const ColouredGraph> factors) -> ColouredGraph
{
    if (factors.size() < 2)
        throw ComposeError{ "compose_many needs at least two factors" };

    ColouredGraph acc = factors[0];
    for (size_t i = 1 ; i < factors.size() ; ++i)
        acc = compose_or_solve({ acc.graph, acc.colouring.flattened(), factors[i].graph, factors[i].colouring });
    return acc;
}

auto boxcol::hypercube_colouring(size_t d) -> ColouredGraph
{
    auto k2 = hypercube(1);
    vector<unsigned> one{ 0 };
    ColouredGraph k2_coloured{ k2, EdgeColouring::from_indices(one, 1) };
    if (d <= 1) {
        if (d == 0)
            throw GraphError{ "hypercube needs dimension at least 1" };
        return k2_coloured;
    }

    vector<ColouredGraph> factors(d, k2_coloured);
    auto result = compose_many(factors);
    if (colours_used(result.colouring) != d + 1)
        throw std::logic_error{ "hypercube colouring does not use d + 1 colours" };
    return result;
}
