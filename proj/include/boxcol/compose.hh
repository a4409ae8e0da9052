/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BOXCOL_GUARD_COMPOSE_HH
#define BOXCOL_GUARD_COMPOSE_HH 1

#include <boxcol/colouring.hh>
#include <boxcol/graph.hh>
#include <boxcol/solver.hh>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxcol
{
    class ComposeError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Both factors are K2 with one colour each. Their product is C4, which
    /// needs three colours, one more than the two factors supply together.
    class ProductOfTwoK2 : public ComposeError
    {
        public:
            ProductOfTwoK2();
    };

    /// j -> (j + shift) mod eta. Throws std::out_of_range unless
    /// shift < eta and j < eta.
    auto sigma(unsigned shift, unsigned j, unsigned eta) -> unsigned;

    /// The shift σ_i on [eta]. For i != k below eta, σ_i and σ_k disagree
    /// everywhere.
    struct ShiftPermutation
    {
        unsigned shift;
        unsigned eta;

        auto operator() (unsigned j) const -> unsigned { return sigma(shift, j, eta); }
        auto inverse(unsigned j) const -> unsigned { return sigma((eta - shift) % eta, j, eta); }
    };

    struct ComposeInput
    {
        Graph g;
        EdgeColouring x_g;
        Graph h;
        EdgeColouring x_h;

        /// Proper colouring of h's vertices; computed with brooks_colouring
        /// when absent. Not allowed when the factors get swapped.
        std::optional<VertexColouring> y_h = std::nullopt;
    };

    struct ComposeResult
    {
        /// Always indexed by the caller's (g, h), whatever the orientation.
        Product product;
        EdgeColouring colouring;

        /// True if the caller's h played the role of G because it came with
        /// the larger palette.
        bool swapped = false;

        /// Palette sizes after orientation; eta includes any padding.
        unsigned eta = 0;
        unsigned beta = 0;
        bool padded = false;

        unsigned d = 0;
        VertexColouring y_h;

        std::vector<std::string> warnings;
    };

    /// Colours G□H from acyclic colourings of G and H: each copy H_u repeats
    /// X_H in primed colours, and the copy G_v repeats X_G shifted by
    /// σ_{Y_H(v)}. Input palette sizes stand in for a'(G) and a'(H). The
    /// result is verified acyclic with at most eta + beta colours before it
    /// is returned.
    auto compose(const ComposeInput &) -> ComposeResult;

    /// compose, except that K2□K2 is solved exactly instead of rejected.
    auto compose_or_solve(const ComposeInput &, const SearchBudget & = {}) -> ColouredGraph;

    /// Left fold of compose_or_solve over at least two coloured factors.
    auto compose_many(std::span<const ColouredGraph> factors) -> ColouredGraph;

    /// The hypercube of dimension d coloured with one colour for d = 1 and
    /// d + 1 colours otherwise, built from the 3-colouring of C4 by adding
    /// one K2 factor at a time.
    auto hypercube_colouring(std::size_t d) -> ColouredGraph;
}

#endif
