/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/colouring_json.hh>

#include <string>
#include <tuple>
#include <vector>

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

using namespace boxcol;

namespace
{
    struct Entry
    {
        Edge edge;
        Colour colour;
    };

    auto parse_document(const json & doc) -> std::tuple<size_t, ColourPalette, vector<Entry>>
    {
        try {
            auto n = doc.at("n").get<size_t>();
            ColourPalette palette{ doc.at("palette").at("g").get<unsigned>(), doc.at("palette").value("h", 0u) };

            vector<Entry> entries;
            for (auto & item : doc.at("edges")) {
                if (! item.is_array() || item.size() != 3)
                    throw ColouringError{ "each edge entry must be [u, v, colour]" };
                auto c = item[2].is_string() ? parse_colour(item[2].get<string>()) : Colour::unprimed(item[2].get<unsigned>());
                entries.push_back({ { item[0].get<size_t>(), item[1].get<size_t>() }, c });
            }
            return { n, palette, std::move(entries) };
        }
        catch (const json::exception & e) {
            throw ColouringError{ string{ "malformed colouring document: " } + e.what() };
        }
    }
}

auto boxcol::colouring_to_json(const Graph & g, const EdgeColouring & x) -> json
{
    require_total(g, x);
    json edges = json::array();
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        edges.push_back({ g.edge(e).u, g.edge(e).v, to_string(x.colour(e)) });

    return {
        { "n", g.vertex_count() },
        { "palette", { { "g", x.palette().g_size }, { "h", x.palette().h_size } } },
        { "edges", std::move(edges) }
    };
}

auto boxcol::colouring_from_json(const json & doc) -> ColouredGraph
{
    auto [n, palette, entries] = parse_document(doc);
    vector<Edge> edges;
    for (auto & entry : entries)
        edges.push_back(entry.edge);
    Graph g{ n, edges };
    if (g.edge_count() != entries.size())
        throw ColouringError{ "colouring document lists an edge twice" };

    auto x = colouring_from_json(g, doc);
    return { std::move(g), std::move(x) };
}

auto boxcol::colouring_from_json(const Graph & g, const json & doc) -> EdgeColouring
{
    auto [n, palette, entries] = parse_document(doc);
    if (n != g.vertex_count())
        throw ColouringError{ "colouring is for " + std::to_string(n) + " vertices, graph has " + std::to_string(g.vertex_count()) };

    vector<Colour> colours(g.edge_count());
    vector<char> seen(g.edge_count(), 0);
    for (auto & [edge, colour] : entries) {
        auto e = g.edge_between(edge.u, edge.v);
        if (! e)
            throw ColouringError{ "colouring mentions non-edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "}" };
        if (seen[*e])
            throw ColouringError{ "colouring mentions edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "} twice" };
        seen[*e] = 1;
        colours[*e] = colour;
    }
    if (entries.size() != g.edge_count())
        throw ColouringError{ "colouring is partial: " + std::to_string(entries.size()) + " of " + std::to_string(g.edge_count()) + " edges" };

    return EdgeColouring{ palette, std::move(colours) };
}

auto boxcol::vertex_colouring_to_json(const VertexColouring & y) -> json
{
    json result = json::object();
    for (size_t v = 0 ; v < y.colours.size() ; ++v)
        result[std::to_string(v)] = y.colours[v];
    return result;
}
