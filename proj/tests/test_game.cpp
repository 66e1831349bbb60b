#include "support.hpp"

#include "tdg/game.hpp"
#include "tdg/variant.hpp"

#include <doctest.h>

using namespace tdg;

namespace
{
    constexpr auto D = Player::Dominator;
    constexpr auto S = Player::Staller;

    auto turns(std::initializer_list<std::pair<Player, bool>> list) -> std::vector<ScheduledTurn>
    {
        std::vector<ScheduledTurn> out;
        for (auto [p, pass] : list)
            out.push_back({p, pass});
        return out;
    }

    /// Plays the lowest (or highest) legal vertex until the game ends.
    auto playout(const Graph & g, const VariantSpec & spec, bool lowest) -> std::pair<GameState, Transcript>
    {
        auto s = initial_state(g, spec);
        Transcript log = initial_actions(g, spec);
        while (! is_terminal(g, s)) {
            auto legal = legal_moves(g, s, spec).to_vector();
            auto x = lowest ? legal.front() : legal.back();
            auto t = step_move(g, s, spec, x);
            CHECK(s.dominated.subset_of(t.state.dominated));
            log.insert(log.end(), t.actions.begin(), t.actions.end());
            s = t.state;
        }
        return {s, log};
    }
}

TEST_SUITE("game")
{
    TEST_CASE("legal moves")
    {
        auto c4 = build_cycle(4);
        auto s = initial_state(c4, dgame());
        CHECK(legal_moves(c4, s, dgame()) == c4.vertices());

        s.dominated = c4.vertices();
        CHECK_THROWS_AS(legal_moves(c4, s, dgame()), GameError);

        // P3 with both ends dominated: the centre dominates nothing new.
        auto p3 = build_path(3);
        auto ends = VertexSet::of({0, 2});
        auto spec = dgame(ends);
        CHECK(legal_moves(p3, initial_state(p3, spec), spec) == VertexSet::of({0, 2}));
    }

    TEST_CASE("apply_move")
    {
        auto c8 = build_cycle(8);
        auto s = apply_move(c8, initial_state(c8, dgame()), dgame(), c8.landmark("u2"));
        CHECK(s.dominated == VertexSet::of({c8.landmark("u1"), c8.landmark("u3")}));
        CHECK(s.moves_played == 1);
        CHECK(s.to_move == S);
        CHECK_THROWS_AS(apply_move(c8, s, dgame(), c8.landmark("u2")), GameError);
    }

    TEST_CASE("delayed predomination fires after the chosen move")
    {
        auto c8 = build_cycle(8);
        auto u15 = VertexSet::of({0, 4});
        auto spec = delayed_predom(1, u15);
        auto s0 = initial_state(c8, spec);
        CHECK(s0.dominated.empty());
        auto t = step_move(c8, s0, spec, 2);
        CHECK(t.state.dominated == VertexSet::of({0, 1, 3, 4}));
        CHECK(t.actions.size() == 2);
        CHECK(t.actions[1].kind == ActionKind::Event);
        CHECK(t.actions[1].newly_dominated == VertexSet::of({0, 4}));

        // m = 0 is plain predomination.
        CHECK(initial_state(c8, delayed_predom(0, u15)).dominated == u15);
    }

    TEST_CASE("trigger moves make Staller pass")
    {
        auto c8 = build_cycle(8);
        auto spec = ssp(c8.landmark("u1"), c8.landmark("u5"));
        auto s = initial_state(c8, spec);
        auto t = step_move(c8, s, spec, c8.landmark("u1"));
        CHECK(t.state.to_move == D);
        CHECK(t.state.moves_played == 1);
        REQUIRE(t.actions.size() == 2);
        CHECK(t.actions[1].kind == ActionKind::ForcedPass);
        CHECK(t.actions[1].player == S);

        // Second trigger fires once more; a third play of a trigger would not.
        auto t2 = step_move(c8, t.state, spec, c8.landmark("u5"));
        CHECK(t2.state.to_move == D);
        CHECK(t2.state.triggers_fired == 2);
    }

    TEST_CASE("first trigger move may dominate nothing new, later ones may not")
    {
        auto c8 = build_cycle(8);
        auto u1 = c8.landmark("u1"), u5 = c8.landmark("u5");
        auto spec = ssp(u1, u5);
        GameState s = initial_state(c8, spec);
        s.dominated = c8.neighbourhood(u1) | c8.neighbourhood(u5);
        CHECK(legal_moves(c8, s, spec).contains(u1));
        auto after = apply_move(c8, s, spec, u1);
        CHECK(after.moves_played == 1);
        CHECK(after.dominated == s.dominated);
        CHECK(after.to_move == D);
        CHECK_FALSE(legal_moves(c8, after, spec).contains(u5));
    }

    TEST_CASE("double-Staller schedule")
    {
        CHECK(unfold_schedule(double_staller(), 5) == turns({{S, false}, {S, false}, {D, false}, {S, false}, {D, false}}));
        auto c8 = build_cycle(8);
        auto s = initial_state(c8, double_staller());
        CHECK(s.to_move == S);
        s = apply_move(c8, s, double_staller(), 0);
        CHECK(s.to_move == S);
        s = apply_move(c8, s, double_staller(), 4);
        CHECK(s.to_move == D);
    }

    TEST_CASE("forced-pass schedules")
    {
        CHECK_THROWS_AS(sdp(1, 2), VariantError);
        CHECK_THROWS_AS(sdp(3, 1), VariantError);
        CHECK_FALSE(sdp_admissible(0, 0));
        CHECK(sdp_admissible(1, 3));
        CHECK(unfold_schedule(sdp(1, 3), 4)
              == turns({{D, false}, {S, true}, {D, false}, {S, false}, {D, true}, {S, false}}));
        // Both passes after the same move: Staller passes, then Dominator.
        CHECK(sdp_admissible(1, 1));
        CHECK(unfold_schedule(sdp(1, 1), 3) == turns({{D, false}, {S, true}, {D, true}, {S, false}, {D, false}}));

        auto c8 = build_cycle(8);
        auto spec = sdp_predom(1, 3, VertexSet::of({0, 4}));
        auto s = initial_state(c8, spec);
        s = apply_move(c8, s, spec, 2);
        CHECK(s.to_move == D);
        s = apply_move(c8, s, spec, 6);
        CHECK(s.to_move == S);
        s = apply_move(c8, s, spec, 1);
        CHECK(s.to_move == S);
        CHECK(s.dominated.contains(4));
    }

    TEST_CASE("optional passes")
    {
        auto c8 = build_cycle(8);
        auto spec = staller_pass(D);
        auto s = apply_move(c8, initial_state(c8, spec), spec, 0);
        CHECK(can_pass(c8, s));
        auto p = apply_pass(c8, s, spec);
        CHECK(p.to_move == D);
        CHECK(p.moves_played == 1);
        p = apply_move(c8, p, spec, 2);
        CHECK_FALSE(can_pass(c8, p));
        CHECK_THROWS_AS(apply_pass(c8, p, spec), GameError);
    }

    TEST_CASE("variant validation")
    {
        CHECK_THROWS_AS(ssp(3, 3), VariantError);
        auto bad = dgame();
        bad.optional_passes = {2, 0};
        CHECK_THROWS_AS(bad.validate(), VariantError);
        auto mixed = ssp(0, 4);
        mixed.optional_passes = {0, 1};
        CHECK_THROWS_AS(mixed.validate(), VariantError);
        CHECK_THROWS_AS(dgame(VertexSet::of({9})).validate(build_cycle(8)), VariantError);
    }

    TEST_CASE("variant strings")
    {
        auto c8 = build_cycle(8);
        CHECK(parse_variant("d", c8) == dgame());
        CHECK(parse_variant("s", c8) == sgame());
        CHECK(parse_variant("d|S=u1,u5", c8) == dgame(VertexSet::of({0, 4})));
        CHECK(parse_variant("d|S=1,5", c8) == dgame(VertexSet::of({1, 5})));
        CHECK(parse_variant("spass:d", c8) == staller_pass(D));
        CHECK(parse_variant("dpass:s|S=u2", c8) == dominator_pass(S, VertexSet::of({1})));
        CHECK(parse_variant("ss", c8) == double_staller());
        CHECK(parse_variant("delayed:m=3,S=1,5", c8) == delayed_predom(3, VertexSet::of({1, 5})));
        CHECK(parse_variant("sdp:k=1,l=3", c8) == sdp(1, 3));
        CHECK(parse_variant("sdp:k=1,l=3,S=u1,u5", c8) == sdp_predom(1, 3, VertexSet::of({0, 4})));
        CHECK(parse_variant("sdp:k=1,l=3,m=2,S=u1,u5", c8) == sdp_delayed(1, 3, 2, VertexSet::of({0, 4})));
        CHECK(parse_variant("ssp:u=u1,v=u5", c8) == ssp(0, 4));
        CHECK_THROWS_AS(parse_variant("sdp:k=1,l=2", c8), VariantError);
        CHECK_THROWS_AS(parse_variant("x", c8), VariantError);
        CHECK_THROWS_AS(parse_variant("d|S=nowhere", c8), std::exception);
    }

    TEST_CASE("plays terminate, count only moves and replay exactly")
    {
        std::mt19937_64 rng(7);
        std::vector<VariantSpec> specs{dgame(), sgame(), staller_pass(D), double_staller(), delayed_predom(2, VertexSet::of({0, 1})),
                                       sdp(1, 3), ssp(0, 1)};
        for (int i = 0; i < 40; ++i) {
            auto g = test_support::random_graph(4 + static_cast<unsigned>(rng() % 6), rng);
            for (auto & spec : specs)
                for (bool lowest : {true, false}) {
                    auto [end, log] = playout(g, spec, lowest);
                    CHECK(is_terminal(g, end));
                    CHECK(end.moves_played <= 2 * g.order());
                    CHECK(counted_moves(log) == end.moves_played);
                    CHECK(replay(g, spec, log) == end);
                }
        }
    }
}
