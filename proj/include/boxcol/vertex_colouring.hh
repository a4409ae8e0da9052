/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BOXCOL_GUARD_VERTEX_COLOURING_HH
#define BOXCOL_GUARD_VERTEX_COLOURING_HH 1

#include <boxcol/colouring.hh>
#include <boxcol/graph.hh>

namespace boxcol
{
    /// The number of colours Brooks' theorem guarantees: Δ + 1 for complete
    /// graphs and odd cycles, Δ otherwise. Throws GraphError for trivial or
    /// disconnected graphs.
    auto d_of(const Graph &) -> unsigned;

    /// A proper vertex colouring with at most d_of(h) colours, normalised so
    /// that colours appear in order of first use by vertex index. Throws
    /// std::logic_error if the bound is somehow missed.
    auto brooks_colouring(const Graph & h) -> VertexColouring;

    /// Exhaustive search for a proper colouring with at most k colours.
    auto exhaustive_vertex_colouring(const Graph &, unsigned k) -> std::optional<VertexColouring>;
}

#endif
