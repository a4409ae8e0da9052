/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BOXCOL_GUARD_COLOURING_HH
#define BOXCOL_GUARD_COLOURING_HH 1

#include <boxcol/graph.hh>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace boxcol
{
    class ColouringError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An edge colour: a small index plus a flag saying whether it belongs to
    /// the primed family. Unprimed colours sort before primed ones.
    class Colour
    {
        private:
            static constexpr std::uint32_t primed_flag = std::uint32_t{ 1 } << 31;

            std::uint32_t _raw = 0;

            constexpr explicit Colour(std::uint32_t raw) : _raw(raw) { }

        public:
            constexpr Colour() = default;

            static constexpr auto unprimed(unsigned index) -> Colour { return Colour{ index }; }
            static constexpr auto primed(unsigned index) -> Colour { return Colour{ index | primed_flag }; }

            constexpr auto index() const -> unsigned { return _raw & ~primed_flag; }
            constexpr auto is_primed() const -> bool { return _raw & primed_flag; }

            auto operator<=> (const Colour &) const = default;
    };

    /// "3" for an unprimed colour, "3'" for a primed one.
    auto to_string(Colour) -> std::string;
    auto parse_colour(std::string_view) -> Colour;

    /// The unprimed family [g_size] followed by the primed family [h_size'].
    /// A single-family colouring has h_size == 0.
    struct ColourPalette
    {
        unsigned g_size = 0;
        unsigned h_size = 0;

        auto size() const -> unsigned { return g_size + h_size; }
        auto contains(Colour c) const -> bool
        {
            return c.is_primed() ? c.index() < h_size : c.index() < g_size;
        }

        /// Position of c in the total order, unprimed first.
        auto rank(Colour c) const -> unsigned { return c.is_primed() ? g_size + c.index() : c.index(); }

        auto operator== (const ColourPalette &) const -> bool = default;
    };

    class EdgeColouring
    {
        private:
            ColourPalette _palette;
            std::vector<Colour> _colours;

        public:
            EdgeColouring() = default;

            /// Throws ColouringError if some colour is outside the palette.
            EdgeColouring(ColourPalette palette, std::vector<Colour> colours);

            /// Single-family colouring with colours 0..k-1.
            static auto from_indices(std::span<const unsigned> colours, unsigned k) -> EdgeColouring;

            auto palette() const -> const ColourPalette & { return _palette; }
            auto size() const -> std::size_t { return _colours.size(); }
            auto colour(EdgeIndex e) const -> Colour { return _colours.at(e); }
            auto colours() const -> std::span<const Colour> { return _colours; }

            /// Same colouring over a single family, each colour replaced by
            /// its rank in the palette's total order.
            auto flattened() const -> EdgeColouring;

            auto operator== (const EdgeColouring &) const -> bool = default;
    };

    struct ColouredGraph
    {
        Graph graph;
        EdgeColouring colouring;
    };

    struct VertexColouring
    {
        std::vector<unsigned> colours;

        /// One more than the largest colour used, or 0 if there are no vertices.
        auto colour_count() const -> unsigned;
    };

    struct NotProper
    {
        Vertex vertex;
        EdgeIndex first;
        EdgeIndex second;
    };

    /// Vertices of a closed two-coloured cycle, listed without repeating the
    /// start. Canonical: starts at its smallest vertex and continues towards
    /// the smaller of that vertex's two cycle neighbours.
    struct BichromaticCycle
    {
        Colour a;
        Colour b;
        std::vector<Vertex> cycle;
    };

    using Violation = std::variant<NotProper, BichromaticCycle>;

    auto describe(const Graph &, const Violation &) -> std::string;

    auto canonical_cycle(std::vector<Vertex> cycle) -> std::vector<Vertex>;

    /// Throws ColouringError if the colouring does not cover exactly the
    /// edges of the graph.
    auto require_total(const Graph &, const EdgeColouring &) -> void;

    auto check_proper_edge(const Graph &, const EdgeColouring &) -> std::optional<Violation>;

    /// Searches every pair of colour classes for a cycle, pairs in increasing
    /// order, and returns the first one found. Throws ColouringError on an
    /// improper colouring.
    auto find_bichromatic_cycle(const Graph &, const EdgeColouring &) -> std::optional<BichromaticCycle>;

    /// Properness first, then bichromatic cycles.
    auto check_acyclic(const Graph &, const EdgeColouring &) -> std::optional<Violation>;

    inline auto is_acyclic(const Graph & g, const EdgeColouring & x) -> bool { return ! check_acyclic(g, x); }

    /// Returns a monochromatic edge, if any. Throws ColouringError if the
    /// colouring does not cover every vertex.
    auto check_proper_vertex(const Graph &, const VertexColouring &) -> std::optional<Edge>;

    auto colours_used(const EdgeColouring &) -> unsigned;

    /// Re-checks a reported violation directly against the graph and the
    /// colouring, without reusing any of the detection code.
    auto witness_holds(const Graph &, const EdgeColouring &, const Violation &) -> bool;
}

#endif
