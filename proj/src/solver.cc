/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/solver.hh>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

using std::optional;
using std::size_t;
using std::uint64_t;
using std::vector;

using std::chrono::duration_cast;
using std::chrono::microseconds;
using std::chrono::steady_clock;

using namespace boxcol;

BudgetExhausted::BudgetExhausted(unsigned l, unsigned u, SearchStats s) :
    std::runtime_error("search budget exhausted with a' in [" + std::to_string(l) + ", " + std::to_string(u) + "]"),
    lower(l),
    upper(u),
    stats(s)
{
}

AlternatingPathTracker::AlternatingPathTracker(const Graph & g, unsigned colours) :
    _graph(g),
    _via(colours, vector<Vertex>(g.vertex_count(), none)),
    _colour(g.edge_count())
{
}

auto AlternatingPathTracker::add_colour() -> void
{
    _via.emplace_back(_graph.vertex_count(), none);
}

auto AlternatingPathTracker::can_assign(EdgeIndex e, unsigned c) const -> bool
{
    auto [u, w] = _graph.edge(e);
    if (_via[c][u] != none || _via[c][w] != none)
        return false;

    for (unsigned other = 0 ; other < _via.size() ; ++other) {
        if (other == c || _via[other][u] == none || _via[other][w] == none)
            continue;

        // the {c, other} subgraph is a union of paths; follow the one
        // leaving w, and if it ends at u the new edge would close a cycle
        Vertex at = w;
        unsigned along = other;
        while (true) {
            Vertex next = _via[along][at];
            if (next == none)
                break;
            if (next == u)
                return false;
            at = next;
            along = along == other ? c : other;
        }
    }
    return true;
}

auto AlternatingPathTracker::assign(EdgeIndex e, unsigned c) -> void
{
    auto [u, w] = _graph.edge(e);
    _via[c][u] = w;
    _via[c][w] = u;
    _colour[e] = c;
}

auto AlternatingPathTracker::unassign(EdgeIndex e) -> void
{
    if (! _colour[e])
        return;
    auto [u, w] = _graph.edge(e);
    _via[*_colour[e]][u] = none;
    _via[*_colour[e]][w] = none;
    _colour[e].reset();
}

auto boxcol::lower_bound(const Graph & g) -> unsigned
{
    auto delta = g.max_degree();
    bool regular = true;
    for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
        if (g.degree(v) != delta)
            regular = false;
    return unsigned(regular && delta > 1 ? delta + 1 : delta);
}

auto boxcol::search_order(const Graph & g) -> vector<EdgeIndex>
{
    vector<EdgeIndex> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    auto weight = [&] (EdgeIndex e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
    std::stable_sort(order.begin(), order.end(), [&] (EdgeIndex a, EdgeIndex b) { return weight(a) > weight(b); });
    return order;
}

namespace
{
    struct OutOfBudget
    {
    };

    class Search
    {
        private:
            const Graph & _graph;
            const SearchBudget & _budget;
            SearchTrace * _trace;
            vector<EdgeIndex> _order;
            steady_clock::time_point _start;
            uint64_t _nodes = 0;

            auto tick() -> void
            {
                ++_nodes;
                if (_nodes > _budget.max_nodes)
                    throw OutOfBudget{};
                if ((_nodes & 0x3ff) == 0 && steady_clock::now() - _start > _budget.max_time)
                    throw OutOfBudget{};
            }

            auto expand(AlternatingPathTracker & tracker, size_t depth, unsigned k, unsigned used) -> bool
            {
                if (depth == _order.size())
                    return true;

                EdgeIndex e = _order[depth];
                // colour c may be opened only once 0..c-1 are in use
                for (unsigned c = 0 ; c < std::min(k, used + 1) ; ++c) {
                    tick();
                    if (! tracker.can_assign(e, c))
                        continue;
                    if (_trace && _trace->steps.size() < _trace->limit)
                        _trace->steps.push_back({ k, depth, e, c });
                    tracker.assign(e, c);
                    if (expand(tracker, depth + 1, k, std::max(used, c + 1)))
                        return true;
                    tracker.unassign(e);
                }
                return false;
            }

        public:
            Search(const Graph & g, const SearchBudget & budget, SearchTrace * trace) :
                _graph(g),
                _budget(budget),
                _trace(trace),
                _order(search_order(g)),
                _start(steady_clock::now())
            {
            }

            auto try_colours(unsigned k) -> optional<EdgeColouring>
            {
                AlternatingPathTracker tracker{ _graph, k };
                if (! expand(tracker, 0, k, 0))
                    return std::nullopt;

                vector<unsigned> colours(_graph.edge_count());
                for (EdgeIndex e = 0 ; e < _graph.edge_count() ; ++e)
                    colours[e] = *tracker.colour_of(e);
                return EdgeColouring::from_indices(colours, k);
            }

            auto stats(bool exhausted) const -> SearchStats
            {
                return { _nodes, duration_cast<microseconds>(steady_clock::now() - _start), exhausted };
            }
    };
}

auto boxcol::exact_aci(const Graph & g, const SearchBudget & budget, SearchTrace * trace) -> AciResult
{
    Search search{ g, budget, trace };
    unsigned k = lower_bound(g);
    try {
        while (true) {
            if (auto witness = search.try_colours(k)) {
                if (check_acyclic(g, *witness))
                    throw std::logic_error{ "exact search produced a colouring that fails verification" };
                return { k, std::move(*witness), search.stats(false) };
            }
            ++k;
        }
    }
    catch (const OutOfBudget &) {
        throw BudgetExhausted{ k, colours_used(greedy_acyclic(g)), search.stats(true) };
    }
}

auto boxcol::greedy_acyclic(const Graph & g, uint64_t seed) -> EdgeColouring
{
    // Breadth-first from a seeded root, neighbours in seeded order; edges are
    // coloured as their first endpoint is reached. On a tree every new edge
    // meets coloured edges at one endpoint only, so forests get Δ colours.
    std::mt19937_64 rng{ seed };
    size_t n = g.vertex_count();
    vector<char> seen(n, 0), edge_seen(g.edge_count(), 0);
    vector<EdgeIndex> order;
    order.reserve(g.edge_count());

    vector<Vertex> roots(n);
    std::iota(roots.begin(), roots.end(), 0);
    if (n > 0)
        std::swap(roots[0], roots[std::uniform_int_distribution<size_t>(0, n - 1)(rng)]);

    for (auto root : roots) {
        if (seen[root])
            continue;
        vector<Vertex> queue{ root };
        seen[root] = 1;
        for (size_t i = 0 ; i < queue.size() ; ++i) {
            auto nbrs = g.neighbours(queue[i]);
            vector<Incidence> shuffled(nbrs.begin(), nbrs.end());
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (auto & [w, e] : shuffled) {
                if (! edge_seen[e]) {
                    edge_seen[e] = 1;
                    order.push_back(e);
                }
                if (! seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }

    AlternatingPathTracker tracker{ g, 0 };
    for (auto e : order) {
        unsigned c = 0;
        while (c < tracker.colour_count() && ! tracker.can_assign(e, c))
            ++c;
        if (c == tracker.colour_count())
            tracker.add_colour();
        tracker.assign(e, c);
    }

    vector<unsigned> colours(g.edge_count());
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        colours[e] = *tracker.colour_of(e);
    auto result = EdgeColouring::from_indices(colours, tracker.colour_count());
    if (check_acyclic(g, result))
        throw std::logic_error{ "greedy produced a colouring that fails verification" };
    return result;
}
