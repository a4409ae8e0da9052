/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/graph.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

using namespace boxcol;

Graph::Graph(size_t n, span<const Edge> edges, vector<VertexLabel> labels) :
    _n(n),
    _adjacency(n),
    _labels(std::move(labels))
{
    _edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError{ "edge {" + to_string(u) + "," + to_string(v) + "} has an endpoint outside 0.." + to_string(n) };
        if (u == v)
            throw GraphError{ "self-loop at vertex " + to_string(u) };
        _edges.push_back(u < v ? Edge{ u, v } : Edge{ v, u });
    }

    std::sort(_edges.begin(), _edges.end());
    _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());

    for (EdgeIndex e = 0 ; e < _edges.size() ; ++e) {
        _adjacency[_edges[e].u].push_back({ _edges[e].v, e });
        _adjacency[_edges[e].v].push_back({ _edges[e].u, e });
    }

    for (auto & a : _adjacency) {
        std::sort(a.begin(), a.end(), [] (const Incidence & x, const Incidence & y) { return x.neighbour < y.neighbour; });
        _max_degree = std::max(_max_degree, a.size());
    }

    if (! _labels.empty()) {
        if (_labels.size() != n)
            throw GraphError{ "expected " + to_string(n) + " labels, got " + to_string(_labels.size()) };
        std::set<VertexLabel> seen(_labels.begin(), _labels.end());
        if (seen.size() != _labels.size())
            throw GraphError{ "vertex labels are not pairwise distinct" };
    }
}

auto Graph::degree_sequence() const -> vector<size_t>
{
    vector<size_t> result;
    result.reserve(_n);
    for (auto & a : _adjacency)
        result.push_back(a.size());
    std::sort(result.begin(), result.end(), std::greater<>{});
    return result;
}

auto Graph::edge_between(Vertex u, Vertex v) const -> std::optional<EdgeIndex>
{
    if (u >= _n || v >= _n)
        return std::nullopt;
    auto & a = _adjacency[u];
    auto i = std::lower_bound(a.begin(), a.end(), v, [] (const Incidence & x, Vertex w) { return x.neighbour < w; });
    if (i != a.end() && i->neighbour == v)
        return i->edge;
    return std::nullopt;
}

auto Graph::label(Vertex v) const -> VertexLabel
{
    if (v >= _n)
        throw GraphError{ "vertex " + to_string(v) + " out of range" };
    if (_labels.empty())
        return { to_string(v) };
    return _labels[v];
}

auto boxcol::new_graph(size_t n, span<const Edge> edges) -> Graph
{
    return Graph{ n, edges };
}

auto boxcol::path(size_t n) -> Graph
{
    if (n < 1)
        throw GraphError{ "path needs at least one vertex" };
    vector<Edge> edges;
    for (Vertex v = 0 ; v + 1 < n ; ++v)
        edges.push_back({ v, v + 1 });
    return Graph{ n, edges };
}

auto boxcol::cycle(size_t n) -> Graph
{
    if (n < 3)
        throw GraphError{ "cycle needs at least three vertices" };
    vector<Edge> edges;
    for (Vertex v = 0 ; v < n ; ++v)
        edges.push_back({ v, (v + 1) % n });
    return Graph{ n, edges };
}

auto boxcol::complete(size_t n) -> Graph
{
    if (n < 1)
        throw GraphError{ "complete graph needs at least one vertex" };
    vector<Edge> edges;
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = u + 1 ; v < n ; ++v)
            edges.push_back({ u, v });
    return Graph{ n, edges };
}

auto boxcol::grid(size_t m, size_t n) -> Graph
{
    return cartesian_product(path(m), path(n)).graph;
}

auto boxcol::hypercube(size_t d) -> Graph
{
    if (d < 1)
        throw GraphError{ "hypercube needs dimension at least 1" };
    vector<Edge> k2_edge{ { 0, 1 } };
    Graph k2{ 2, k2_edge, { { "0" }, { "1" } } };
    Graph result = k2;
    for (size_t i = 1 ; i < d ; ++i)
        result = cartesian_product(result, k2).graph;
    return result;
}

auto boxcol::petersen() -> Graph
{
    vector<Edge> edges;
    for (Vertex i = 0 ; i < 5 ; ++i) {
        edges.push_back({ i, (i + 1) % 5 });
        edges.push_back({ i, i + 5 });
        edges.push_back({ i + 5, (i + 2) % 5 + 5 });
    }
    return Graph{ 10, edges };
}

auto boxcol::cartesian_product(const Graph & g, const Graph & h) -> Product
{
    size_t ng = g.vertex_count(), nh = h.vertex_count();
    auto index = [nh] (Vertex a, Vertex b) { return a * nh + b; };

    vector<Edge> edges;
    edges.reserve(g.edge_count() * nh + h.edge_count() * ng);
    for (auto [a, b] : g.edges())
        for (Vertex v = 0 ; v < nh ; ++v)
            edges.push_back({ index(a, v), index(b, v) });
    for (auto [x, y] : h.edges())
        for (Vertex u = 0 ; u < ng ; ++u)
            edges.push_back({ index(u, x), index(u, y) });

    vector<VertexLabel> labels;
    if (ng * nh > 0) {
        labels.reserve(ng * nh);
        for (Vertex u = 0 ; u < ng ; ++u)
            for (Vertex v = 0 ; v < nh ; ++v) {
                auto l = g.label(u);
                auto r = h.label(v);
                l.insert(l.end(), r.begin(), r.end());
                labels.push_back(std::move(l));
            }
    }

    Product result{ Graph{ ng * nh, edges, std::move(labels) }, nh, {} };

    result.kinds.reserve(result.graph.edge_count());
    for (auto [p, q] : result.graph.edges()) {
        auto pv = result.vertex_at(p), qv = result.vertex_at(q);
        if (pv.g_index == qv.g_index)
            result.kinds.push_back(HEdge{ *h.edge_between(pv.h_index, qv.h_index), pv.g_index });
        else
            result.kinds.push_back(GEdge{ *g.edge_between(pv.g_index, qv.g_index), pv.h_index });
    }

    return result;
}

auto boxcol::endpoints_of(const Graph & g, const Graph & h, const ProductEdgeKind & kind) -> Edge
{
    size_t nh = h.vertex_count();
    if (auto ge = std::get_if<GEdge>(&kind)) {
        auto [a, b] = g.edge(ge->e);
        return { a * nh + ge->v, b * nh + ge->v };
    }
    auto & he = std::get<HEdge>(kind);
    auto [x, y] = h.edge(he.f);
    return { he.u * nh + x, he.u * nh + y };
}

auto boxcol::is_connected(const Graph & g) -> bool
{
    if (g.vertex_count() == 0)
        return true;

    vector<char> seen(g.vertex_count(), 0);
    vector<Vertex> stack{ 0 };
    seen[0] = 1;
    size_t count = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto & [w, _] : g.neighbours(v))
            if (! seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.vertex_count();
}

auto boxcol::classify(const Graph & g) -> Classification
{
    size_t n = g.vertex_count();
    if (n < 2)
        throw GraphError{ "classify needs a non-trivial graph" };
    if (! is_connected(g))
        throw GraphError{ "classify needs a connected graph" };

    Classification result{ g.max_degree(), true, false, false };
    for (Vertex v = 0 ; v < n ; ++v)
        if (g.degree(v) != g.max_degree())
            result.is_regular = false;

    result.is_complete = g.edge_count() == n * (n - 1) / 2;
    result.is_odd_cycle = result.is_regular && result.max_degree == 2 && n % 2 == 1;
    return result;
}

auto boxcol::induced_subgraph(const Graph & g, span<const Vertex> vertices) -> Graph
{
    vector<size_t> position(g.vertex_count(), g.vertex_count());
    for (size_t i = 0 ; i < vertices.size() ; ++i)
        position.at(vertices[i]) = i;

    vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (position[u] != g.vertex_count() && position[v] != g.vertex_count())
            edges.push_back({ position[u], position[v] });
    return Graph{ vertices.size(), edges };
}
