/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/colouring.hh>

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

using namespace boxcol;

auto boxcol::to_string(Colour c) -> string
{
    auto result = std::to_string(c.index());
    if (c.is_primed())
        result.push_back('\'');
    return result;
}

auto boxcol::parse_colour(string_view text) -> Colour
{
    bool primed = false;
    if (! text.empty() && text.back() == '\'') {
        primed = true;
        text.remove_suffix(1);
    }
    unsigned index = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || index >= (1u << 31))
        throw ColouringError{ "bad colour '" + string(text) + "'" };
    return primed ? Colour::primed(index) : Colour::unprimed(index);
}

EdgeColouring::EdgeColouring(ColourPalette palette, vector<Colour> colours) :
    _palette(palette),
    _colours(std::move(colours))
{
    for (auto c : _colours)
        if (! _palette.contains(c))
            throw ColouringError{ "colour " + to_string(c) + " is outside the palette" };
}

auto EdgeColouring::from_indices(std::span<const unsigned> colours, unsigned k) -> EdgeColouring
{
    vector<Colour> result;
    result.reserve(colours.size());
    for (auto c : colours)
        result.push_back(Colour::unprimed(c));
    return EdgeColouring{ { k, 0 }, std::move(result) };
}

auto EdgeColouring::flattened() const -> EdgeColouring
{
    vector<Colour> result;
    result.reserve(_colours.size());
    for (auto c : _colours)
        result.push_back(Colour::unprimed(_palette.rank(c)));
    return EdgeColouring{ { _palette.size(), 0 }, std::move(result) };
}

auto VertexColouring::colour_count() const -> unsigned
{
    if (colours.empty())
        return 0;
    return *std::max_element(colours.begin(), colours.end()) + 1;
}

auto boxcol::describe(const Graph & g, const Violation & violation) -> string
{
    std::ostringstream out;
    if (auto np = std::get_if<NotProper>(&violation)) {
        auto e1 = g.edge(np->first), e2 = g.edge(np->second);
        out << "not proper at vertex " << np->vertex << ": edges {" << e1.u << "," << e1.v << "} and {"
            << e2.u << "," << e2.v << "} share a colour";
    }
    else {
        auto & bc = std::get<BichromaticCycle>(violation);
        out << "bichromatic cycle in colours " << to_string(bc.a) << " and " << to_string(bc.b) << ":";
        for (auto v : bc.cycle)
            out << ' ' << v;
    }
    return out.str();
}

auto boxcol::canonical_cycle(vector<Vertex> cycle) -> vector<Vertex>
{
    if (cycle.size() < 3)
        return cycle;
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

auto boxcol::require_total(const Graph & g, const EdgeColouring & x) -> void
{
    if (x.size() != g.edge_count())
        throw ColouringError{ "colouring covers " + std::to_string(x.size()) + " edges but the graph has " + std::to_string(g.edge_count()) };
}

auto boxcol::check_proper_edge(const Graph & g, const EdgeColouring & x) -> optional<Violation>
{
    require_total(g, x);
    for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
        std::map<Colour, EdgeIndex> seen;
        for (auto & [_, e] : g.neighbours(v)) {
            auto [it, fresh] = seen.emplace(x.colour(e), e);
            if (! fresh)
                return NotProper{ v, std::min(it->second, e), std::max(it->second, e) };
        }
    }
    return std::nullopt;
}

namespace
{
    struct DisjointSets
    {
        vector<Vertex> parent;

        explicit DisjointSets(size_t n) : parent(n)
        {
            std::iota(parent.begin(), parent.end(), 0);
        }

        auto find(Vertex v) -> Vertex
        {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        }

        auto unite(Vertex a, Vertex b) -> bool
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            parent[a] = b;
            return true;
        }
    };

    constexpr Vertex none = ~Vertex{ 0 };
}

auto boxcol::find_bichromatic_cycle(const Graph & g, const EdgeColouring & x) -> optional<BichromaticCycle>
{
    if (check_proper_edge(g, x))
        throw ColouringError{ "bichromatic cycle search needs a proper colouring" };

    std::map<Colour, vector<EdgeIndex>> classes;
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        classes[x.colour(e)].push_back(e);

    size_t n = g.vertex_count();
    // In a proper colouring each vertex has at most one edge of each of the
    // two colours, so the union is a set of paths and cycles.
    vector<Vertex> via_a(n, none), via_b(n, none);

    for (auto a = classes.begin() ; a != classes.end() ; ++a)
        for (auto b = std::next(a) ; b != classes.end() ; ++b) {
            DisjointSets sets{ n };
            vector<Vertex> touched;

            vector<EdgeIndex> both;
            std::merge(a->second.begin(), a->second.end(), b->second.begin(), b->second.end(), std::back_inserter(both));

            for (auto e : both) {
                auto [p, q] = g.edge(e);
                bool is_a = x.colour(e) == a->first;

                if (! sets.unite(p, q)) {
                    // walk the existing path from q back to p
                    vector<Vertex> cycle{ p, q };
                    Vertex previous = p, current = q;
                    while (true) {
                        Vertex next = via_a[current] != previous && via_a[current] != none ? via_a[current] : via_b[current];
                        if (next == p)
                            break;
                        cycle.push_back(next);
                        previous = current;
                        current = next;
                    }
                    for (auto v : touched)
                        via_a[v] = via_b[v] = none;
                    return BichromaticCycle{ a->first, b->first, canonical_cycle(std::move(cycle)) };
                }

                auto & via = is_a ? via_a : via_b;
                via[p] = q;
                via[q] = p;
                touched.push_back(p);
                touched.push_back(q);
            }

            for (auto v : touched)
                via_a[v] = via_b[v] = none;
        }

    return std::nullopt;
}

auto boxcol::check_acyclic(const Graph & g, const EdgeColouring & x) -> optional<Violation>
{
    if (auto v = check_proper_edge(g, x))
        return v;
    if (auto c = find_bichromatic_cycle(g, x))
        return Violation{ std::move(*c) };
    return std::nullopt;
}

auto boxcol::check_proper_vertex(const Graph & g, const VertexColouring & y) -> optional<Edge>
{
    if (y.colours.size() != g.vertex_count())
        throw ColouringError{ "vertex colouring covers " + std::to_string(y.colours.size()) + " vertices but the graph has "
            + std::to_string(g.vertex_count()) };
    for (auto e : g.edges())
        if (y.colours[e.u] == y.colours[e.v])
            return e;
    return std::nullopt;
}

auto boxcol::colours_used(const EdgeColouring & x) -> unsigned
{
    std::set<Colour> distinct(x.colours().begin(), x.colours().end());
    return unsigned(distinct.size());
}

auto boxcol::witness_holds(const Graph & g, const EdgeColouring & x, const Violation & violation) -> bool
{
    if (x.size() != g.edge_count())
        return false;

    if (auto np = std::get_if<NotProper>(&violation)) {
        if (np->first == np->second || np->first >= g.edge_count() || np->second >= g.edge_count())
            return false;
        auto e1 = g.edge(np->first), e2 = g.edge(np->second);
        auto touches = [&] (Edge e) { return e.u == np->vertex || e.v == np->vertex; };
        return touches(e1) && touches(e2) && x.colour(np->first) == x.colour(np->second);
    }

    auto & bc = std::get<BichromaticCycle>(violation);
    auto & cyc = bc.cycle;
    if (bc.a == bc.b || cyc.size() < 4 || cyc.size() % 2 != 0)
        return false;
    if (std::set<Vertex>(cyc.begin(), cyc.end()).size() != cyc.size())
        return false;

    // colours must alternate, starting with either of the two
    optional<Colour> first_colour;
    for (size_t i = 0 ; i < cyc.size() ; ++i) {
        auto e = g.edge_between(cyc[i], cyc[(i + 1) % cyc.size()]);
        if (! e)
            return false;
        auto c = x.colour(*e);
        if (c != bc.a && c != bc.b)
            return false;
        if (! first_colour)
            first_colour = c;
        bool expect_first = i % 2 == 0;
        if ((c == *first_colour) != expect_first)
            return false;
    }
    return true;
}
