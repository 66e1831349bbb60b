#pragma once

#include "tdg/game.hpp"
#include "tdg/graph.hpp"
#include "tdg/variant.hpp"

#include <chrono>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace tdg
{
    struct SolveOptions
    {
        std::uint64_t max_nodes = 4'000'000'000ULL;
        std::uint64_t max_table = 40'000'000ULL;
        unsigned threads = 1;
        /// Windowed search with bound-typed table entries instead of plain
        /// memoized minimax.  Values are identical either way.
        bool alpha_beta = false;

        /// Defaults, overridden by TDG_MAX_NODES / TDG_MAX_TABLE when set.
        static auto from_environment() -> SolveOptions;
    };

    struct SolveStats
    {
        std::uint64_t nodes_expanded = 0;
        std::uint64_t table_entries = 0;
        std::chrono::milliseconds elapsed{0};
    };

    class ResourceError : public std::runtime_error
    {
    public:
        ResourceError(const std::string & what, SolveStats partial) : std::runtime_error(what), partial_(partial) {}
        auto partial() const noexcept -> const SolveStats & { return partial_; }

    private:
        SolveStats partial_;
    };

    struct SolveResult
    {
        /// Counted moves under optimal play from the analysed state.
        unsigned value = 0;
        VertexSet first_moves;
        /// An optional pass is among the optimal first actions.
        bool pass_optimal = false;
        SolveStats stats;
    };

    /// {"value", "first_moves", "nodes", "table_entries", "millis"}, in that order.
    auto to_json(const SolveResult & r) -> nlohmann::ordered_json;

    class TranspositionTable;

    /// Exact minimax for one graph and variant.  Dominator minimises and
    /// Staller maximises the number of counted moves.  The table persists
    /// across calls, so analysing many states of one game is cheap.
    class Solver
    {
    public:
        Solver(const Graph & g, VariantSpec spec, SolveOptions options = {});
        ~Solver();
        Solver(const Solver &) = delete;
        auto operator=(const Solver &) -> Solver & = delete;

        auto solve() -> SolveResult { return analyse(initial_state(graph_, spec_)); }
        /// Value plus the optimal first actions at `s`.
        auto analyse(const GameState & s) -> SolveResult;
        /// Optimal remaining counted moves from `s`.
        auto value(const GameState & s) -> unsigned;
        /// One optimal play from the initial state, lowest index first among ties.
        auto best_line() -> Transcript;

        void clear();
        auto stats() const -> SolveStats;
        auto graph() const noexcept -> const Graph & { return graph_; }
        auto spec() const noexcept -> const VariantSpec & { return spec_; }

    private:
        struct Search;

        Graph graph_;
        VariantSpec spec_;
        SolveOptions options_;
        std::unique_ptr<TranspositionTable> table_;
        std::uint64_t nodes_ = 0;
    };

    auto solve(const Graph & g, const VariantSpec & spec, const SolveOptions & options = {}) -> SolveResult;
    auto best_line(const Graph & g, const VariantSpec & spec, const SolveOptions & options = {}) -> Transcript;

    /// Graph order accepted by oracle_solve.
    inline constexpr unsigned oracle_max_order = 12;

    /// Memo-free plain recursion over the complete play tree, with its own
    /// rule bookkeeping.  Certifies Solver on small graphs.
    auto oracle_solve(const Graph & g, const VariantSpec & spec) -> unsigned;

    /// Graph order accepted by total_domination_number.
    inline constexpr unsigned tdn_max_order = 32;

    /// Size of a smallest set whose open neighbourhoods cover V.
    auto total_domination_number(const Graph & g) -> unsigned;

    /// solve(G, game|{v}) for every v, indexed by v.
    auto values_all_single_predominations(const Graph & g, Player first, const SolveOptions & options = {}) -> std::vector<unsigned>;

    /// Every single-vertex predomination strictly lowers the D-game value.
    auto is_critical(const Graph & g, const SolveOptions & options = {}) -> bool;
}
