/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/vertex_colouring.hh>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

using namespace boxcol;

namespace
{
    constexpr unsigned uncoloured = std::numeric_limits<unsigned>::max();
    constexpr size_t exhaustive_fallback_limit = 12;

    /// Greedy colouring in the given order; vertices outside the order stay
    /// uncoloured.
    auto greedy(const Graph & g, const vector<Vertex> & order) -> vector<unsigned>
    {
        vector<unsigned> colour(g.vertex_count(), uncoloured);
        vector<char> blocked;
        for (auto v : order) {
            blocked.assign(g.degree(v) + 1, 0);
            for (auto & [w, _] : g.neighbours(v))
                if (colour[w] != uncoloured && colour[w] <= g.degree(v))
                    blocked[colour[w]] = 1;
            colour[v] = unsigned(std::find(blocked.begin(), blocked.end(), 0) - blocked.begin());
        }
        return colour;
    }

    auto smallest_last_order(const Graph & g) -> vector<Vertex>
    {
        size_t n = g.vertex_count();
        vector<size_t> degree(n);
        vector<char> removed(n, 0);
        for (Vertex v = 0 ; v < n ; ++v)
            degree[v] = g.degree(v);

        vector<Vertex> removal;
        for (size_t step = 0 ; step < n ; ++step) {
            Vertex best = n;
            for (Vertex v = 0 ; v < n ; ++v)
                if (! removed[v] && (best == n || degree[v] < degree[best]))
                    best = v;
            removed[best] = 1;
            removal.push_back(best);
            for (auto & [w, _] : g.neighbours(best))
                if (! removed[w])
                    --degree[w];
        }
        std::reverse(removal.begin(), removal.end());
        return removal;
    }

    /// Vertices reachable from start without entering a blocked vertex, with
    /// their BFS distances (max size_t for unreached ones).
    auto distances_avoiding(const Graph & g, Vertex start, const vector<char> & blocked) -> vector<size_t>
    {
        vector<size_t> dist(g.vertex_count(), std::numeric_limits<size_t>::max());
        vector<Vertex> queue{ start };
        dist[start] = 0;
        for (size_t i = 0 ; i < queue.size() ; ++i)
            for (auto & [w, _] : g.neighbours(queue[i]))
                if (! blocked[w] && dist[w] == std::numeric_limits<size_t>::max()) {
                    dist[w] = dist[queue[i]] + 1;
                    queue.push_back(w);
                }
        return dist;
    }

    auto reached_count(const vector<size_t> & dist) -> size_t
    {
        return size_t(std::count_if(dist.begin(), dist.end(), [] (size_t d) { return d != std::numeric_limits<size_t>::max(); }));
    }

    auto bipartition(const Graph & g) -> vector<unsigned>
    {
        vector<char> none(g.vertex_count(), 0);
        auto dist = distances_avoiding(g, 0, none);
        vector<unsigned> colour(g.vertex_count());
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            colour[v] = unsigned(dist[v] % 2);
        return colour;
    }

    /// Cut vertex case: colour each piece H[C ∪ {v}] in fewer than Δ colours
    /// (v has degree below Δ in every piece), then rename so v agrees.
    auto colour_around_cut_vertex(const Graph & g, Vertex cut) -> vector<unsigned>
    {
        size_t n = g.vertex_count();
        vector<char> blocked(n, 0);
        blocked[cut] = 1;
        vector<unsigned> result(n, uncoloured);
        result[cut] = 0;

        for (Vertex start = 0 ; start < n ; ++start) {
            if (start == cut || result[start] != uncoloured)
                continue;
            auto dist = distances_avoiding(g, start, blocked);
            vector<Vertex> piece;
            for (Vertex v = 0 ; v < n ; ++v)
                if (dist[v] != std::numeric_limits<size_t>::max())
                    piece.push_back(v);
            piece.push_back(cut);

            auto sub = induced_subgraph(g, piece);
            auto colour = greedy(sub, smallest_last_order(sub));
            unsigned at_cut = colour.back();
            for (size_t i = 0 ; i + 1 < piece.size() ; ++i) {
                unsigned c = colour[i];
                result[piece[i]] = c == at_cut ? 0 : c == 0 ? at_cut : c;
            }
        }
        return result;
    }

    auto find_cut_vertex(const Graph & g) -> optional<Vertex>
    {
        size_t n = g.vertex_count();
        for (Vertex v = 0 ; v < n ; ++v) {
            vector<char> blocked(n, 0);
            blocked[v] = 1;
            auto dist = distances_avoiding(g, v == 0 ? 1 : 0, blocked);
            if (reached_count(dist) != n - 1)
                return v;
        }
        return std::nullopt;
    }

    /// Two-connected, regular, Δ >= 3, not complete: find v with non-adjacent
    /// neighbours x, y such that H - {x, y} stays connected, colour x and y
    /// alike first, then everything else from farthest to v inwards.
    auto colour_two_connected_regular(const Graph & g) -> optional<vector<unsigned>>
    {
        size_t n = g.vertex_count();
        for (Vertex v = 0 ; v < n ; ++v) {
            auto nbrs = g.neighbours(v);
            for (size_t i = 0 ; i < nbrs.size() ; ++i)
                for (size_t j = i + 1 ; j < nbrs.size() ; ++j) {
                    Vertex x = nbrs[i].neighbour, y = nbrs[j].neighbour;
                    if (g.adjacent(x, y))
                        continue;
                    vector<char> blocked(n, 0);
                    blocked[x] = blocked[y] = 1;
                    auto dist = distances_avoiding(g, v, blocked);
                    if (reached_count(dist) != n - 2)
                        continue;

                    vector<Vertex> rest;
                    for (Vertex w = 0 ; w < n ; ++w)
                        if (w != x && w != y)
                            rest.push_back(w);
                    std::stable_sort(rest.begin(), rest.end(), [&] (Vertex a, Vertex b) { return dist[a] > dist[b]; });

                    vector<Vertex> order{ x, y };
                    order.insert(order.end(), rest.begin(), rest.end());
                    return greedy(g, order);
                }
        }
        return std::nullopt;
    }

    auto normalised(vector<unsigned> colour) -> vector<unsigned>
    {
        vector<unsigned> rename;
        for (auto & c : colour) {
            if (c >= rename.size())
                rename.resize(c + 1, uncoloured);
            if (rename[c] == uncoloured)
                rename[c] = unsigned(std::count_if(rename.begin(), rename.end(), [] (unsigned r) { return r != uncoloured; }));
            c = rename[c];
        }
        return colour;
    }
}

auto boxcol::d_of(const Graph & h) -> unsigned
{
    auto c = classify(h);
    return unsigned(c.is_complete || c.is_odd_cycle ? c.max_degree + 1 : c.max_degree);
}

auto boxcol::exhaustive_vertex_colouring(const Graph & g, unsigned k) -> optional<VertexColouring>
{
    size_t n = g.vertex_count();
    vector<unsigned> colour(n, uncoloured);

    std::function<bool (Vertex, unsigned)> extend = [&] (Vertex v, unsigned used) -> bool {
        if (v == n)
            return true;
        for (unsigned c = 0 ; c < std::min(k, used + 1) ; ++c) {
            bool clash = false;
            for (auto & [w, _] : g.neighbours(v))
                if (colour[w] == c)
                    clash = true;
            if (clash)
                continue;
            colour[v] = c;
            if (extend(v + 1, std::max(used, c + 1)))
                return true;
        }
        colour[v] = uncoloured;
        return false;
    };

    if (! extend(0, 0))
        return std::nullopt;
    return VertexColouring{ colour };
}

auto boxcol::brooks_colouring(const Graph & h) -> VertexColouring
{
    auto info = classify(h);
    unsigned d = d_of(h);

    optional<vector<unsigned>> colour;
    if (info.is_complete || info.is_odd_cycle) {
        vector<Vertex> order(h.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        colour = greedy(h, order);
    }
    else if (info.max_degree <= 2)
        colour = bipartition(h);
    else if (! info.is_regular)
        colour = greedy(h, smallest_last_order(h));
    else if (auto cut = find_cut_vertex(h))
        colour = colour_around_cut_vertex(h, *cut);
    else
        colour = colour_two_connected_regular(h);

    auto fits = [&] (const optional<vector<unsigned>> & c) {
        return c && ! check_proper_vertex(h, VertexColouring{ *c }) && VertexColouring{ *c }.colour_count() <= d;
    };

    if (! fits(colour) && h.vertex_count() <= exhaustive_fallback_limit)
        if (auto found = exhaustive_vertex_colouring(h, d))
            colour = found->colours;

    if (! fits(colour))
        throw std::logic_error{ "failed to colour a graph on " + std::to_string(h.vertex_count()) + " vertices with "
            + std::to_string(d) + " colours" };

    return VertexColouring{ normalised(std::move(*colour)) };
}
