#include "tdg/strategies.hpp"

#include <memory>

namespace tdg
{
    namespace
    {
        auto is_plain(const VariantSpec & spec) -> bool
        {
            return spec.schedule_prefix.empty() && spec.optional_passes[0] == 0 && spec.optional_passes[1] == 0 && spec.forced_passes.empty()
                && spec.events.empty() && ! spec.triggers;
        }

        void require_cycle(const Graph & g)
        {
            if (! is_cycle(g))
                throw StrategyError{"cycle strategies need a cycle graph"};
        }

        /// The neighbour of `current` that is not `previous`.
        auto step_away(const Graph & cycle, Vertex previous, Vertex current) -> Vertex
        {
            return (cycle.neighbourhood(current) - VertexSet::singleton(previous)).first();
        }

        auto lowest_legal(const Graph & g, VertexSet dominated) -> Vertex
        {
            for (Vertex x = 0; x < g.order(); ++x)
                if (! g.neighbourhood(x).subset_of(dominated))
                    return x;
            throw StrategyError{"no legal move: every vertex is dominated"};
        }
    }

    auto to_string(PolicyKind k) -> std::string_view
    {
        switch (k) {
            case PolicyKind::Optimal: return "optimal";
            case PolicyKind::S1: return "s1";
            case PolicyKind::D1: return "d1";
            case PolicyKind::FirstLegal: return "first-legal";
        }
        return "?";
    }

    auto parse_policy(std::string_view text) -> PolicyKind
    {
        for (auto k : {PolicyKind::Optimal, PolicyKind::S1, PolicyKind::D1, PolicyKind::FirstLegal})
            if (to_string(k) == text)
                return k;
        throw std::invalid_argument{"unknown policy '" + std::string{text} + "'"};
    }

    auto is_cycle(const Graph & g) -> bool
    {
        if (g.order() < 3)
            return false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) != 2)
                return false;
        return g.connected();
    }

    auto s1_choice(const Graph & cycle, VertexSet dominated) -> StallerChoice
    {
        require_cycle(cycle);
        if (dominated.empty() || dominated == cycle.vertices())
            throw StrategyError{"S1 needs a dominated set that is neither empty nor everything"};

        // x sits at the end of a run or anti-run exactly when one of its two
        // neighbours is dominated and the other is not.
        for (Vertex x = 0; x < cycle.order(); ++x)
            if ((cycle.neighbourhood(x) - dominated).size() == 1)
                return {x, false};
        return {lowest_legal(cycle, dominated), true};
    }

    auto d1_move(const Graph & cycle, VertexSet dominated_before, VertexSet dominated, Vertex last_staller_move) -> Vertex
    {
        require_cycle(cycle);
        if (dominated == cycle.vertices())
            throw StrategyError{"D1: no legal move"};

        auto v1 = last_staller_move;
        for (auto v2 : cycle.neighbourhood(v1) - dominated_before) {
            auto v3 = step_away(cycle, v1, v2);
            auto v4 = step_away(cycle, v2, v3);
            auto v5 = step_away(cycle, v3, v4);
            if (v5 != v1 && v5 != v3 && ! dominated.contains(v4))
                return v5;
        }
        return lowest_legal(cycle, dominated);
    }

    auto make_policy(PolicyKind kind, const Graph & g, const VariantSpec & spec, const SolveOptions & options) -> Policy
    {
        if (kind != PolicyKind::Optimal) {
            if (! is_plain(spec))
                throw StrategyError{std::string{to_string(kind)} + " only plays plain D- and S-games"};
            require_cycle(g);
        }

        std::shared_ptr<Solver> solver;
        if (kind == PolicyKind::Optimal || kind == PolicyKind::D1)
            solver = std::make_shared<Solver>(g, spec, options);
        auto optimal = [solver](const PolicyView & view) -> std::optional<Vertex> {
            auto r = solver->analyse(view.state);
            if (r.first_moves.empty())
                return std::nullopt;
            return r.first_moves.first();
        };

        switch (kind) {
            case PolicyKind::Optimal: return {"optimal", optimal};
            case PolicyKind::FirstLegal:
                return {"first-legal", [](const PolicyView & view) -> std::optional<Vertex> {
                            return legal_moves(view.graph, view.state, view.spec).first();
                        }};
            case PolicyKind::S1:
                return {"s1", [](const PolicyView & view) -> std::optional<Vertex> { return s1_move(view.graph, view.state.dominated); }};
            case PolicyKind::D1:
                return {"d1", [optimal](const PolicyView & view) -> std::optional<Vertex> {
                            // The strategy is a reply; the opening comes from the solver.
                            if (! view.last_staller_move)
                                return optimal(view);
                            return d1_move(view.graph, *view.before_staller_move, view.state.dominated, *view.last_staller_move);
                        }};
        }
        throw std::invalid_argument{"unknown policy"};
    }

    auto play_match(const Graph & g, const VariantSpec & spec, const Policy & dominator, const Policy & staller) -> MatchResult
    {
        MatchResult out;
        auto s = initial_state(g, spec);
        out.transcript = initial_actions(g, spec);
        std::optional<VertexSet> before_staller;
        std::optional<Vertex> last_staller;

        while (! is_terminal(g, s)) {
            auto & policy = s.to_move == Player::Dominator ? dominator : staller;
            auto choice = policy.choose(PolicyView{g, spec, s, before_staller, last_staller});

            Transition t;
            if (! choice) {
                if (! can_pass(g, s))
                    throw PolicyFault{policy.name, "policy '" + policy.name + "' passed without a pass available"};
                t = step_pass(g, s, spec);
            }
            else {
                if (*choice >= g.order() || ! legal_moves(g, s, spec).contains(*choice))
                    throw PolicyFault{policy.name, "policy '" + policy.name + "' chose illegal vertex " + std::to_string(*choice)};
                if (s.to_move == Player::Staller) {
                    before_staller = s.dominated;
                    last_staller = *choice;
                }
                t = step_move(g, s, spec, *choice);
            }
            out.transcript.insert(out.transcript.end(), t.actions.begin(), t.actions.end());
            s = t.state;
        }
        out.length = counted_moves(out.transcript);
        return out;
    }

    auto play_match(const Graph & g, const VariantSpec & spec, PolicyKind dominator, PolicyKind staller, const SolveOptions & options)
        -> MatchResult
    {
        return play_match(g, spec, make_policy(dominator, g, spec, options), make_policy(staller, g, spec, options));
    }

    auto to_json(const Transcript & t) -> nlohmann::ordered_json
    {
        auto out = nlohmann::ordered_json::array();
        for (auto & a : t) {
            nlohmann::ordered_json row;
            row["player"] = std::string{to_string(a.player)};
            switch (a.kind) {
                case ActionKind::Move: row["action"] = a.vertex; break;
                case ActionKind::Pass: row["action"] = "pass"; break;
                case ActionKind::ForcedPass: row["action"] = "forced-pass"; break;
                case ActionKind::Event: row["action"] = "event"; break;
            }
            row["newly_dominated"] = a.newly_dominated.to_vector();
            out.push_back(std::move(row));
        }
        return out;
    }

    auto to_json(const MatchResult & m) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["length"] = m.length;
        j["transcript"] = to_json(m.transcript);
        return j;
    }
}
