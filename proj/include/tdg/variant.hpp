#pragma once

#include "tdg/graph.hpp"
#include "tdg/vertex_set.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tdg
{
    enum class Player : std::uint8_t
    {
        Dominator = 0,
        Staller = 1
    };

    constexpr auto other(Player p) noexcept -> Player { return p == Player::Dominator ? Player::Staller : Player::Dominator; }
    constexpr auto index(Player p) noexcept -> std::size_t { return static_cast<std::size_t>(p); }
    auto to_string(Player p) -> std::string_view;

    class VariantError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// An uncounted pass that `player` must make right after counted move
    /// number `after_move` (0 = before the first move).
    struct ForcedPass
    {
        unsigned after_move;
        Player player;
        auto operator==(const ForcedPass &) const -> bool = default;
    };

    /// Vertices that become totally dominated for free right after counted
    /// move number `after_move`.
    struct PredominationEvent
    {
        unsigned after_move;
        VertexSet vertices;
        auto operator==(const PredominationEvent &) const -> bool = default;
    };

    /// Every Dominator move on either vertex turns Staller's next turn into an
    /// uncounted pass.
    struct TriggerPair
    {
        Vertex first;
        Vertex second;
        auto contains(Vertex v) const noexcept -> bool { return v == first || v == second; }
        auto operator==(const TriggerPair &) const -> bool = default;
    };

    /// Complete rule description of one game variant.
    ///
    /// Turn slots are handed out from `schedule_prefix` first and then
    /// alternate; a pass consumes a slot but is never counted as a move.
    struct VariantSpec
    {
        std::string label;
        Player first_player = Player::Dominator;
        std::vector<Player> schedule_prefix;
        VertexSet initial_dominated;
        std::array<std::uint8_t, 2> optional_passes{0, 0};
        std::vector<ForcedPass> forced_passes;
        std::vector<PredominationEvent> events;
        std::optional<TriggerPair> triggers;
        bool first_move_exemption = false;

        /// Player holding turn slot `slot` when nothing else intervenes.
        auto slot_holder(unsigned slot, Player previous) const -> Player;

        /// Rule consistency independent of any graph; throws VariantError.
        void validate() const;
        /// validate() plus vertex-range checks against `g`.
        void validate(const Graph & g) const;

        auto has_schedule_dependence() const noexcept -> bool { return ! forced_passes.empty() || ! events.empty(); }

        auto operator==(const VariantSpec &) const -> bool = default;
    };

    auto dgame(VertexSet predominated = {}) -> VariantSpec;
    auto sgame(VertexSet predominated = {}) -> VariantSpec;
    auto staller_pass(Player first, VertexSet predominated = {}) -> VariantSpec;
    auto dominator_pass(Player first, VertexSet predominated = {}) -> VariantSpec;
    /// Staller plays twice, then strict alternation.
    auto double_staller() -> VariantSpec;
    /// D-game in which `vertices` become dominated after move `m`.
    auto delayed_predom(unsigned m, VertexSet vertices) -> VariantSpec;
    /// D-game with a forced Staller pass after move k and a forced Dominator
    /// pass after move l.  Throws VariantError unless each pass falls on its
    /// player's turn.
    auto sdp(unsigned k, unsigned l) -> VariantSpec;
    /// sdp(k, l) where `vertices` become dominated when Dominator passes.
    auto sdp_predom(unsigned k, unsigned l, VertexSet vertices) -> VariantSpec;
    /// sdp(k, l) with the predomination after move m (which may differ from l).
    auto sdp_delayed(unsigned k, unsigned l, unsigned m, VertexSet vertices) -> VariantSpec;
    /// D-game with trigger vertices u', u'' and Dominator's first-trigger exemption.
    auto ssp(Vertex first, Vertex second) -> VariantSpec;

    /// Whether sdp(k, l) is admissible (both passes fall on the passer's turn).
    auto sdp_admissible(unsigned k, unsigned l) -> bool;

    struct ScheduledTurn
    {
        Player player;
        bool pass;
        auto operator==(const ScheduledTurn &) const -> bool = default;
    };

    /// The turn sequence of a pass/event schedule for the first `moves`
    /// counted moves, assuming the game lasts that long.  Only defined for
    /// variants without optional passes or triggers.
    auto unfold_schedule(const VariantSpec & spec, unsigned moves) -> std::vector<ScheduledTurn>;

    /// Variant DSL: "d", "s", "d|S=1,5", "spass:d", "dpass:s|S=w1", "ss",
    /// "delayed:m=3,S=1,5", "sdp:k=1,l=3", "sdp:k=1,l=3,S=1,5", "ssp:u=1,v=5".
    auto parse_variant(std::string_view text, const Graph & g) -> VariantSpec;
}
