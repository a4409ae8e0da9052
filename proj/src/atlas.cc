/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/graph.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

using std::size_t;
using std::uint64_t;
using std::vector;

using namespace boxcol;

namespace
{
    constexpr size_t max_atlas_order = 9;

    auto pair_bit(size_t i, size_t j) -> uint64_t
    {
        // column-major upper triangle, as in graph6
        return uint64_t{ 1 } << (j * (j - 1) / 2 + i);
    }

    struct Canon
    {
        uint64_t code;
        vector<Vertex> order;
    };

    /// Minimum code over all relabellings that list vertices by decreasing
    /// degree. The degree partition is isomorphism-invariant, so the minimum
    /// is a canonical form.
    auto canonical(size_t n, const vector<uint64_t> & adj) -> Canon
    {
        vector<size_t> degree(n);
        for (size_t v = 0 ; v < n ; ++v)
            degree[v] = size_t(__builtin_popcountll(adj[v]));

        vector<Vertex> by_degree(n);
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(), [&] (Vertex a, Vertex b) { return degree[a] > degree[b]; });

        Canon best{ ~uint64_t{ 0 }, {} };
        vector<Vertex> order(n);
        vector<char> used(n, 0);

        std::function<void (size_t, uint64_t)> place = [&] (size_t pos, uint64_t code) {
            if (code > best.code)
                return;
            if (pos == n) {
                if (code < best.code || best.order.empty())
                    best = { code, order };
                return;
            }
            size_t want = degree[by_degree[pos]];
            for (Vertex v : by_degree) {
                if (used[v] || degree[v] != want)
                    continue;
                uint64_t extra = 0;
                for (size_t i = 0 ; i < pos ; ++i)
                    if ((adj[v] >> order[i]) & 1)
                        extra |= pair_bit(i, pos);
                used[v] = 1;
                order[pos] = v;
                place(pos + 1, code | extra);
                used[v] = 0;
            }
        };
        place(0, 0);
        return best;
    }

    auto from_code(size_t n, uint64_t code) -> Graph
    {
        vector<Edge> edges;
        for (size_t j = 1 ; j < n ; ++j)
            for (size_t i = 0 ; i < j ; ++i)
                if (code & pair_bit(i, j))
                    edges.push_back({ i, j });
        return Graph{ n, edges };
    }

    auto all_codes(size_t n) -> std::set<uint64_t>
    {
        if (n <= 1)
            return { 0 };

        std::set<uint64_t> result;
        for (uint64_t base : all_codes(n - 1)) {
            vector<uint64_t> adj(n, 0);
            for (size_t j = 1 ; j + 1 < n ; ++j)
                for (size_t i = 0 ; i < j ; ++i)
                    if (base & pair_bit(i, j)) {
                        adj[i] |= uint64_t{ 1 } << j;
                        adj[j] |= uint64_t{ 1 } << i;
                    }

            for (uint64_t subset = 0 ; subset < (uint64_t{ 1 } << (n - 1)) ; ++subset) {
                auto with_new = adj;
                with_new[n - 1] = subset;
                for (size_t i = 0 ; i + 1 < n ; ++i)
                    if ((subset >> i) & 1)
                        with_new[i] |= uint64_t{ 1 } << (n - 1);
                result.insert(canonical(n, with_new).code);
            }
        }
        return result;
    }
}

auto boxcol::all_graphs(size_t n) -> vector<Graph>
{
    if (n > max_atlas_order)
        throw GraphError{ "graph enumeration is limited to small orders" };
    vector<Graph> result;
    for (auto code : all_codes(n))
        result.push_back(from_code(n, code));
    return result;
}

auto boxcol::connected_graphs(size_t n) -> vector<Graph>
{
    auto all = all_graphs(n);
    vector<Graph> result;
    std::copy_if(all.begin(), all.end(), std::back_inserter(result), is_connected);
    return result;
}
