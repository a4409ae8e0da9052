/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BOXCOL_GUARD_COLOURING_JSON_HH
#define BOXCOL_GUARD_COLOURING_JSON_HH 1

#include <boxcol/colouring.hh>

#include <json.hpp>

namespace boxcol
{
    /// {"n": ..., "palette": {"g": η, "h": β}, "edges": [[u, v, "c" | "c'"], ...]}
    /// with edges in the graph's edge order.
    auto colouring_to_json(const Graph &, const EdgeColouring &) -> nlohmann::json;

    /// Rebuilds both the graph and the colouring from a colouring document.
    auto colouring_from_json(const nlohmann::json &) -> ColouredGraph;

    /// Reads a colouring document against a known graph. The document must
    /// colour exactly the graph's edges, in any order.
    auto colouring_from_json(const Graph &, const nlohmann::json &) -> EdgeColouring;

    auto vertex_colouring_to_json(const VertexColouring &) -> nlohmann::json;
}

#endif
