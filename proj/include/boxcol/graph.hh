/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BOXCOL_GUARD_GRAPH_HH
#define BOXCOL_GUARD_GRAPH_HH 1

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace boxcol
{
    using Vertex = std::size_t;
    using EdgeIndex = std::size_t;

    /// A vertex label is a tuple of opaque tokens. Products concatenate the
    /// labels of their factors, so a vertex of G□H□K carries three tokens.
    using VertexLabel = std::vector<std::string>;

    class GraphError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Unordered edge, stored normalised with u < v.
    struct Edge
    {
        Vertex u, v;

        auto operator<=> (const Edge &) const = default;
    };

    struct Incidence
    {
        Vertex neighbour;
        EdgeIndex edge;
    };

    /// Simple undirected finite graph. Immutable once built: edges are
    /// normalised (u < v), deduplicated and sorted lexicographically, and the
    /// adjacency lists are sorted by neighbour.
    class Graph
    {
        private:
            std::size_t _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Incidence>> _adjacency;
            std::vector<VertexLabel> _labels;
            std::size_t _max_degree = 0;

        public:
            Graph() = default;

            /// Throws GraphError on an out-of-range endpoint, a self-loop, or
            /// labels that are the wrong length or not pairwise distinct.
            Graph(std::size_t n, std::span<const Edge> edges, std::vector<VertexLabel> labels = {});

            auto vertex_count() const -> std::size_t { return _n; }
            auto edge_count() const -> std::size_t { return _edges.size(); }
            auto edges() const -> std::span<const Edge> { return _edges; }
            auto edge(EdgeIndex e) const -> const Edge & { return _edges.at(e); }

            auto degree(Vertex v) const -> std::size_t { return _adjacency.at(v).size(); }
            auto max_degree() const -> std::size_t { return _max_degree; }
            auto neighbours(Vertex v) const -> std::span<const Incidence> { return _adjacency.at(v); }
            auto degree_sequence() const -> std::vector<std::size_t>;

            auto edge_between(Vertex u, Vertex v) const -> std::optional<EdgeIndex>;
            auto adjacent(Vertex u, Vertex v) const -> bool { return edge_between(u, v).has_value(); }

            auto has_labels() const -> bool { return ! _labels.empty(); }
            auto labels() const -> std::span<const VertexLabel> { return _labels; }

            /// The label of v, or the single token "v" for unlabelled graphs.
            auto label(Vertex v) const -> VertexLabel;

            auto operator== (const Graph & other) const -> bool
            {
                return _n == other._n && _edges == other._edges;
            }
    };

    auto new_graph(std::size_t n, std::span<const Edge> edges) -> Graph;

    auto path(std::size_t n) -> Graph;
    auto cycle(std::size_t n) -> Graph;
    auto complete(std::size_t n) -> Graph;
    auto grid(std::size_t m, std::size_t n) -> Graph;
    auto hypercube(std::size_t d) -> Graph;
    auto petersen() -> Graph;

    /// Vertex of G□H, addressed by its two coordinates.
    struct ProductVertex
    {
        Vertex g_index;
        Vertex h_index;

        auto operator<=> (const ProductVertex &) const = default;
    };

    /// Edge e_v: a copy of G-edge e inside the copy G_v.
    struct GEdge
    {
        EdgeIndex e;
        Vertex v;

        auto operator<=> (const GEdge &) const = default;
    };

    /// Edge f_u: a copy of H-edge f inside the copy H_u.
    struct HEdge
    {
        EdgeIndex f;
        Vertex u;

        auto operator<=> (const HEdge &) const = default;
    };

    using ProductEdgeKind = std::variant<GEdge, HEdge>;

    /// The product graph together with the provenance of its vertices and
    /// edges. Vertex (g, h) has index g * |V_H| + h.
    struct Product
    {
        Graph graph;
        std::size_t h_order = 0;
        std::vector<ProductEdgeKind> kinds;

        auto index_of(ProductVertex p) const -> Vertex { return p.g_index * h_order + p.h_index; }
        auto vertex_at(Vertex x) const -> ProductVertex { return { x / h_order, x % h_order }; }
        auto kind_of(EdgeIndex e) const -> const ProductEdgeKind & { return kinds.at(e); }
    };

    auto cartesian_product(const Graph & g, const Graph & h) -> Product;

    /// Endpoints of the product edge described by a kind, as product indices.
    auto endpoints_of(const Graph & g, const Graph & h, const ProductEdgeKind & kind) -> Edge;

    auto is_connected(const Graph & g) -> bool;

    struct Classification
    {
        std::size_t max_degree;
        bool is_regular;
        bool is_complete;
        bool is_odd_cycle;
    };

    /// Throws GraphError for trivial (fewer than two vertices) or disconnected graphs.
    auto classify(const Graph & g) -> Classification;

    /// Induced subgraph on the listed vertices, renumbered in the given order.
    auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> Graph;

    /// Edge-list text: "n m" then m lines "u v"; '#' starts a comment.
    auto read_edge_list(std::istream &) -> Graph;
    auto write_edge_list(std::ostream &, const Graph &) -> void;

    /// graph6, as described in nauty's formats.txt. Only the graph part of a
    /// line is accepted; an optional ">>graph6<<" header is skipped.
    auto parse_graph6(std::string_view line) -> Graph;
    auto to_graph6(const Graph &) -> std::string;
    auto read_graph6_stream(std::istream &) -> std::vector<Graph>;

    enum class GraphFormat { edge_list, graph6 };

    auto read_graph(std::istream &, GraphFormat) -> Graph;
    auto read_graph_file(const std::string & filename, GraphFormat) -> Graph;

    /// All graphs on n vertices up to isomorphism, each in a canonical
    /// labelling, in increasing order of canonical code. Intended for n <= 8.
    auto all_graphs(std::size_t n) -> std::vector<Graph>;
    auto connected_graphs(std::size_t n) -> std::vector<Graph>;
}

#endif
