#pragma once

#include "tdg/game.hpp"
#include "tdg/graph.hpp"
#include "tdg/solver.hpp"
#include "tdg/variant.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace tdg
{
    enum class PolicyKind
    {
        Optimal,
        S1,
        D1,
        FirstLegal
    };

    auto to_string(PolicyKind k) -> std::string_view;
    /// "optimal", "s1", "d1", "first-legal"; throws std::invalid_argument.
    auto parse_policy(std::string_view text) -> PolicyKind;

    class StrategyError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when a policy hands back an action the rules forbid.
    class PolicyFault : public std::runtime_error
    {
    public:
        PolicyFault(std::string policy, const std::string & what) : std::runtime_error(what), policy_(std::move(policy)) {}
        auto policy() const noexcept -> const std::string & { return policy_; }

    private:
        std::string policy_;
    };

    /// Whether `g` is a single cycle.
    auto is_cycle(const Graph & g) -> bool;

    struct StallerChoice
    {
        Vertex vertex;
        /// No run or anti-run exists, so the move dominates two new vertices.
        bool concession;
    };

    /// Staller's cycle strategy: play next to the end of a run or anti-run so
    /// that exactly one new vertex gets dominated.  Lowest index wins ties.
    auto s1_choice(const Graph & cycle, VertexSet dominated) -> StallerChoice;
    inline auto s1_move(const Graph & cycle, VertexSet dominated) -> Vertex { return s1_choice(cycle, dominated).vertex; }

    /// Dominator's cycle reply to Staller's move on v1: walking away from a
    /// newly dominated neighbour v2, play v5 while v4 is still undominated,
    /// otherwise the lowest legal vertex.
    auto d1_move(const Graph & cycle, VertexSet dominated_before, VertexSet dominated, Vertex last_staller_move) -> Vertex;

    /// What a policy sees when asked for an action.
    struct PolicyView
    {
        const Graph & graph;
        const VariantSpec & spec;
        const GameState & state;
        /// Dominated set just before Staller's latest move, and that move.
        std::optional<VertexSet> before_staller_move;
        std::optional<Vertex> last_staller_move;
    };

    /// A deterministic choice; nullopt means an optional pass.
    using PolicyFn = std::function<std::optional<Vertex>(const PolicyView &)>;

    struct Policy
    {
        std::string name;
        PolicyFn choose;
    };

    /// Built-in policies.  Optimal shares one Solver per match; non-Optimal
    /// ones only accept plain D- and S-games on cycles.
    auto make_policy(PolicyKind kind, const Graph & g, const VariantSpec & spec, const SolveOptions & options = {}) -> Policy;

    struct MatchResult
    {
        Transcript transcript;
        unsigned length = 0;
    };

    auto play_match(const Graph & g, const VariantSpec & spec, const Policy & dominator, const Policy & staller) -> MatchResult;
    auto play_match(const Graph & g, const VariantSpec & spec, PolicyKind dominator, PolicyKind staller, const SolveOptions & options = {})
        -> MatchResult;

    /// {"length", "transcript": [{"player", "action", "newly_dominated"}]}.
    auto to_json(const Transcript & t) -> nlohmann::ordered_json;
    auto to_json(const MatchResult & m) -> nlohmann::ordered_json;
}
