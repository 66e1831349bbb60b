#include "tdg/game.hpp"

#include <algorithm>

namespace tdg
{
    namespace
    {
        void advance_turn(const VariantSpec & spec, GameState & s)
        {
            auto cap = static_cast<unsigned>(spec.schedule_prefix.size()) + 1;
            s.slot = static_cast<std::uint8_t>(std::min<unsigned>(s.slot + 1U, cap));
            s.to_move = spec.slot_holder(s.slot, s.to_move);
        }

        void apply_events(const VariantSpec & spec, GameState & s, Transcript * log)
        {
            while (s.events_cursor < spec.events.size() && spec.events[s.events_cursor].after_move == s.moves_played) {
                auto & e = spec.events[s.events_cursor++];
                if (log)
                    log->push_back({ActionKind::Event, s.to_move, 0, e.vertices - s.dominated});
                s.dominated |= e.vertices;
            }
        }

        /// Consume forced passes due now, then trigger passes owed by Staller.
        void resolve_passes(const Graph & g, const VariantSpec & spec, GameState & s, Transcript * log)
        {
            while (! is_terminal(g, s)) {
                if (s.forced_cursor < spec.forced_passes.size()) {
                    auto & fp = spec.forced_passes[s.forced_cursor];
                    if (fp.after_move == s.moves_played && fp.player == s.to_move) {
                        if (log)
                            log->push_back({ActionKind::ForcedPass, s.to_move, 0, {}});
                        ++s.forced_cursor;
                        advance_turn(spec, s);
                        continue;
                    }
                }
                if (s.pending_trigger_passes > 0 && s.to_move == Player::Staller) {
                    if (log)
                        log->push_back({ActionKind::ForcedPass, s.to_move, 0, {}});
                    --s.pending_trigger_passes;
                    advance_turn(spec, s);
                    continue;
                }
                break;
            }
        }

        auto move_core(const Graph & g, const GameState & s, const VariantSpec & spec, Vertex x, Transcript * log) -> GameState
        {
            GameState next = s;
            auto mover = s.to_move;
            auto gained = g.neighbourhoods()[x] - s.dominated;
            if (log)
                log->push_back({ActionKind::Move, mover, x, gained});

            next.dominated |= gained;
            ++next.moves_played;
            if (spec.triggers && mover == Player::Dominator && spec.triggers->contains(x) && next.triggers_fired < 2) {
                ++next.triggers_fired;
                ++next.pending_trigger_passes;
            }
            apply_events(spec, next, log);
            advance_turn(spec, next);
            resolve_passes(g, spec, next, log);
            return next;
        }

        auto pass_core(const Graph & g, const GameState & s, const VariantSpec & spec, Transcript * log) -> GameState
        {
            GameState next = s;
            if (log)
                log->push_back({ActionKind::Pass, s.to_move, 0, {}});
            --next.passes_remaining[index(s.to_move)];
            advance_turn(spec, next);
            resolve_passes(g, spec, next, log);
            return next;
        }

        auto exemption_open(const GameState & s, const VariantSpec & spec) -> bool
        {
            return spec.first_move_exemption && spec.triggers && s.to_move == Player::Dominator && s.triggers_fired == 0;
        }
    }

    auto initial_state(const Graph & g, const VariantSpec & spec) -> GameState
    {
        GameState s;
        s.dominated = spec.initial_dominated;
        s.to_move = spec.slot_holder(0, spec.first_player);
        s.passes_remaining = spec.optional_passes;
        apply_events(spec, s, nullptr);
        resolve_passes(g, spec, s, nullptr);
        return s;
    }

    auto initial_actions(const Graph & g, const VariantSpec & spec) -> Transcript
    {
        Transcript log;
        GameState s;
        s.dominated = spec.initial_dominated;
        s.to_move = spec.slot_holder(0, spec.first_player);
        apply_events(spec, s, &log);
        resolve_passes(g, spec, s, &log);
        return log;
    }

    auto legal_moves(const Graph & g, const GameState & s, const VariantSpec & spec) -> VertexSet
    {
        if (is_terminal(g, s))
            throw GameError{"no moves: every vertex is totally dominated"};
        VertexSet out;
        auto & nbhd = g.neighbourhoods();
        for (Vertex x = 0; x < g.order(); ++x)
            if (! nbhd[x].subset_of(s.dominated))
                out.insert(x);
        if (exemption_open(s, spec)) {
            out.insert(spec.triggers->first);
            out.insert(spec.triggers->second);
        }
        return out;
    }

    auto can_pass(const Graph & g, const GameState & s) -> bool
    {
        return ! is_terminal(g, s) && s.passes_remaining[index(s.to_move)] > 0;
    }

    auto step_move(const Graph & g, const GameState & s, const VariantSpec & spec, Vertex x) -> Transition
    {
        if (x >= g.order() || ! legal_moves(g, s, spec).contains(x))
            throw GameError{"illegal move " + std::to_string(x) + " for " + std::string{to_string(s.to_move)}};
        Transition t;
        t.state = move_core(g, s, spec, x, &t.actions);
        return t;
    }

    auto step_pass(const Graph & g, const GameState & s, const VariantSpec & spec) -> Transition
    {
        if (! can_pass(g, s))
            throw GameError{std::string{to_string(s.to_move)} + " has no pass available"};
        Transition t;
        t.state = pass_core(g, s, spec, &t.actions);
        return t;
    }

    auto successor(const Graph & g, const GameState & s, const VariantSpec & spec, Vertex x) -> GameState
    {
        return move_core(g, s, spec, x, nullptr);
    }

    auto successor_pass(const Graph & g, const GameState & s, const VariantSpec & spec) -> GameState
    {
        return pass_core(g, s, spec, nullptr);
    }

    auto replay(const Graph & g, const VariantSpec & spec, const Transcript & t) -> GameState
    {
        auto s = initial_state(g, spec);
        for (auto & a : t) {
            if (a.kind == ActionKind::Move) {
                if (a.player != s.to_move)
                    throw GameError{"transcript move out of turn"};
                s = apply_move(g, s, spec, a.vertex);
            }
            else if (a.kind == ActionKind::Pass) {
                if (a.player != s.to_move)
                    throw GameError{"transcript pass out of turn"};
                s = apply_pass(g, s, spec);
            }
        }
        return s;
    }

    auto counted_moves(const Transcript & t) -> unsigned
    {
        return static_cast<unsigned>(std::count_if(t.begin(), t.end(), [](const Action & a) { return a.kind == ActionKind::Move; }));
    }
}
