/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BOXCOL_GUARD_SOLVER_HH
#define BOXCOL_GUARD_SOLVER_HH 1

#include <boxcol/colouring.hh>
#include <boxcol/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace boxcol
{
    struct SearchBudget
    {
        std::uint64_t max_nodes = 100'000'000;
        std::chrono::milliseconds max_time{ 60'000 };
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::chrono::microseconds time{ 0 };
        bool budget_exhausted = false;
    };

    struct AciResult
    {
        unsigned aci = 0;
        EdgeColouring witness;
        SearchStats stats;
    };

    /// Thrown by exact_aci when the budget runs out. Everything below lower
    /// has been refuted; upper is the best colouring count known.
    class BudgetExhausted : public std::runtime_error
    {
        public:
            unsigned lower;
            unsigned upper;
            SearchStats stats;

            BudgetExhausted(unsigned lower, unsigned upper, SearchStats stats);
    };

    /// One accepted assignment during the exact search. Edges at depths
    /// 0..depth-1 of the current branch keep the colours most recently
    /// recorded for them.
    struct TraceStep
    {
        unsigned k;
        std::size_t depth;
        EdgeIndex edge;
        unsigned colour;
    };

    struct SearchTrace
    {
        std::size_t limit = 100'000;
        std::vector<TraceStep> steps;
    };

    /// Δ + 1 for Δ-regular graphs with Δ > 1, otherwise Δ.
    auto lower_bound(const Graph &) -> unsigned;

    /// Edges sorted by decreasing degree sum, ties broken by edge index.
    auto search_order(const Graph &) -> std::vector<EdgeIndex>;

    /// Iterative deepening from lower_bound(g): each k is either refuted by
    /// exhausting the search or yields the witness.
    auto exact_aci(const Graph &, const SearchBudget & = {}, SearchTrace * trace = nullptr) -> AciResult;

    /// Greedy over a seeded breadth-first edge order: each edge takes the
    /// smallest colour that keeps the partial colouring proper and acyclic,
    /// opening a new colour when none does.
    auto greedy_acyclic(const Graph &, std::uint64_t seed = 0) -> EdgeColouring;

    /// Partial edge colouring that answers "may edge e take colour c" in time
    /// proportional to the alternating paths at e's endpoints.
    class AlternatingPathTracker
    {
        private:
            static constexpr Vertex none = ~Vertex{ 0 };

            const Graph & _graph;
            // _via[c][v] is v's neighbour along its c-coloured edge
            std::vector<std::vector<Vertex>> _via;
            std::vector<std::optional<unsigned>> _colour;

        public:
            AlternatingPathTracker(const Graph &, unsigned colours);

            auto colour_count() const -> unsigned { return unsigned(_via.size()); }
            auto add_colour() -> void;

            auto can_assign(EdgeIndex e, unsigned c) const -> bool;
            auto assign(EdgeIndex e, unsigned c) -> void;
            auto unassign(EdgeIndex e) -> void;

            auto colour_of(EdgeIndex e) const -> std::optional<unsigned> { return _colour.at(e); }
    };
}

#endif
