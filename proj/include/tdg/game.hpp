#pragma once

#include "tdg/graph.hpp"
#include "tdg/variant.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdg
{
    class GameError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// A decision point of a game.  Pending forced and trigger passes are
    /// resolved eagerly, so `to_move` is always the player who acts next.
    struct GameState
    {
        VertexSet dominated;
        unsigned moves_played = 0;
        Player to_move = Player::Dominator;
        std::array<std::uint8_t, 2> passes_remaining{0, 0};
        std::uint8_t triggers_fired = 0;
        /// Trigger passes owed by Staller but not yet reached (only non-zero
        /// when a schedule prefix gives Dominator consecutive turns).
        std::uint8_t pending_trigger_passes = 0;
        /// Turn-slot cursor, saturated once past the schedule prefix.
        std::uint8_t slot = 0;
        std::uint8_t forced_cursor = 0;
        std::uint8_t events_cursor = 0;

        auto operator==(const GameState &) const -> bool = default;
    };

    enum class ActionKind : std::uint8_t
    {
        Move,
        Pass,
        ForcedPass,
        Event
    };

    /// One entry of a play transcript.  Forced passes and events are
    /// recorded for readability; replay only consumes Move and Pass.
    struct Action
    {
        ActionKind kind;
        Player player;
        Vertex vertex = 0;
        VertexSet newly_dominated;

        auto operator==(const Action &) const -> bool = default;
    };

    using Transcript = std::vector<Action>;

    struct Transition
    {
        GameState state;
        /// The chosen action followed by any automatic passes and events it set off.
        Transcript actions;
    };

    auto initial_state(const Graph & g, const VariantSpec & spec) -> GameState;
    auto initial_actions(const Graph & g, const VariantSpec & spec) -> Transcript;

    inline auto is_terminal(const Graph & g, const GameState & s) -> bool { return s.dominated == g.vertices(); }

    /// Vertices that totally dominate at least one undominated vertex, plus
    /// the trigger vertices while Dominator's first-trigger exemption is open.
    /// Throws GameError on a terminal state.
    auto legal_moves(const Graph & g, const GameState & s, const VariantSpec & spec) -> VertexSet;

    /// Whether the player to move may spend an optional pass.
    auto can_pass(const Graph & g, const GameState & s) -> bool;

    auto step_move(const Graph & g, const GameState & s, const VariantSpec & spec, Vertex x) -> Transition;
    auto step_pass(const Graph & g, const GameState & s, const VariantSpec & spec) -> Transition;

    /// Unchecked, unlogged transitions for search loops; `x` must be legal
    /// and a pass must be available.
    auto successor(const Graph & g, const GameState & s, const VariantSpec & spec, Vertex x) -> GameState;
    auto successor_pass(const Graph & g, const GameState & s, const VariantSpec & spec) -> GameState;

    inline auto apply_move(const Graph & g, const GameState & s, const VariantSpec & spec, Vertex x) -> GameState
    {
        return step_move(g, s, spec, x).state;
    }

    inline auto apply_pass(const Graph & g, const GameState & s, const VariantSpec & spec) -> GameState
    {
        return step_pass(g, s, spec).state;
    }

    /// Replays the Move and Pass entries of `t` from the initial state.
    auto replay(const Graph & g, const VariantSpec & spec, const Transcript & t) -> GameState;

    auto counted_moves(const Transcript & t) -> unsigned;
}
