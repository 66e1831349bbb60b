#include "tdg/solver.hpp"
#include "tdg/transposition_table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace tdg
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        constexpr int unbounded_low = -1;
        constexpr int unbounded_high = 256;

        auto env_count(const char * name, std::uint64_t fallback) -> std::uint64_t
        {
            if (const char * raw = std::getenv(name)) {
                char * end = nullptr;
                auto v = std::strtoull(raw, &end, 10);
                if (end && *end == '\0' && v > 0)
                    return v;
            }
            return fallback;
        }
    }

    auto SolveOptions::from_environment() -> SolveOptions
    {
        SolveOptions o;
        o.max_nodes = env_count("TDG_MAX_NODES", o.max_nodes);
        o.max_table = env_count("TDG_MAX_TABLE", o.max_table);
        return o;
    }

    auto to_json(const SolveResult & r) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json moves = nlohmann::ordered_json::array();
        for (auto v : r.first_moves)
            moves.push_back(v);
        if (r.pass_optimal)
            moves.push_back("pass");
        nlohmann::ordered_json j;
        j["value"] = r.value;
        j["first_moves"] = std::move(moves);
        j["nodes"] = r.stats.nodes_expanded;
        j["table_entries"] = r.stats.table_entries;
        j["millis"] = r.stats.elapsed.count();
        return j;
    }

    struct Solver::Search
    {
        const Graph & g;
        const VariantSpec & spec;
        TranspositionTable & table;
        std::atomic<std::uint64_t> & nodes;
        const SolveOptions & options;
        VertexSet all;

        auto key(const GameState & s) const -> StateKey
        {
            std::uint64_t aux = static_cast<std::uint64_t>(s.to_move);
            aux |= std::uint64_t{s.passes_remaining[0]} << 1;
            aux |= std::uint64_t{s.passes_remaining[1]} << 2;
            aux |= std::uint64_t{s.triggers_fired} << 3;
            aux |= std::uint64_t{s.pending_trigger_passes} << 5;
            aux |= std::uint64_t{s.slot} << 7;
            aux |= std::uint64_t{s.forced_cursor} << 11;
            aux |= std::uint64_t{s.events_cursor} << 15;
            bool schedule_pending = s.forced_cursor < spec.forced_passes.size() || s.events_cursor < spec.events.size();
            if (schedule_pending)
                aux |= std::uint64_t{s.moves_played} << 19;
            return {s.dominated.bits(), aux};
        }

        void count_node()
        {
            if (nodes.fetch_add(1, std::memory_order_relaxed) >= options.max_nodes)
                throw ResourceError{"node budget of " + std::to_string(options.max_nodes) + " exceeded", partial()};
        }

        auto partial() const -> SolveStats { return SolveStats{nodes.load(), table.size(), std::chrono::milliseconds{0}}; }

        void remember(const StateKey & k, Bounds b)
        {
            if (! table.store(k, b, options.max_table))
                throw ResourceError{"table budget of " + std::to_string(options.max_table) + " entries exceeded", partial()};
        }

        auto legal(const GameState & s) const -> VertexSet
        {
            VertexSet out;
            auto & nbhd = g.neighbourhoods();
            for (Vertex x = 0; x < g.order(); ++x)
                if (! nbhd[x].subset_of(s.dominated))
                    out.insert(x);
            if (spec.first_move_exemption && s.to_move == Player::Dominator && s.triggers_fired == 0) {
                out.insert(spec.triggers->first);
                out.insert(spec.triggers->second);
            }
            return out;
        }

        auto minimax(const GameState & s) -> int
        {
            if (s.dominated == all)
                return 0;
            auto k = key(s);
            if (auto b = table.find(k); b && b->exact())
                return b->lower;
            count_node();

            bool minimising = s.to_move == Player::Dominator;
            int best = minimising ? unbounded_high : unbounded_low;
            for (auto x : legal(s)) {
                int v = 1 + minimax(successor(g, s, spec, x));
                best = minimising ? std::min(best, v) : std::max(best, v);
                if (minimising && best == 1)
                    break;
            }
            if (s.passes_remaining[index(s.to_move)] > 0) {
                int v = minimax(successor_pass(g, s, spec));
                best = minimising ? std::min(best, v) : std::max(best, v);
            }
            auto b8 = static_cast<std::uint8_t>(best);
            remember(k, {b8, b8});
            return best;
        }

        auto ordered_moves(const GameState & s) const -> std::vector<Vertex>
        {
            std::vector<std::pair<unsigned, Vertex>> scored;
            for (auto x : legal(s))
                scored.emplace_back((g.neighbourhoods()[x] - s.dominated).size(), x);
            if (s.to_move == Player::Dominator)
                std::stable_sort(scored.begin(), scored.end(), [](auto & a, auto & b) { return a.first > b.first; });
            else
                std::stable_sort(scored.begin(), scored.end(), [](auto & a, auto & b) { return a.first < b.first; });
            std::vector<Vertex> out;
            out.reserve(scored.size());
            for (auto & [_, x] : scored)
                out.push_back(x);
            return out;
        }

        /// Fail-soft windowed search: the result r satisfies r <= alpha ->
        /// value <= r, r >= beta -> value >= r, otherwise value == r.
        auto alphabeta(const GameState & s, int alpha, int beta) -> int
        {
            if (s.dominated == all)
                return 0;
            auto k = key(s);
            if (auto b = table.find(k)) {
                if (b->exact() || b->lower >= beta)
                    return b->lower;
                if (b->upper <= alpha)
                    return b->upper;
                alpha = std::max<int>(alpha, b->lower);
                beta = std::min<int>(beta, b->upper);
            }
            count_node();

            const int alpha0 = alpha, beta0 = beta;
            bool minimising = s.to_move == Player::Dominator;
            int best = minimising ? unbounded_high : unbounded_low;

            auto consider = [&](int v) {
                if (minimising) {
                    best = std::min(best, v);
                    beta = std::min(beta, best);
                }
                else {
                    best = std::max(best, v);
                    alpha = std::max(alpha, best);
                }
                return alpha >= beta;
            };

            bool cut = false;
            for (auto x : ordered_moves(s))
                if ((cut = consider(1 + alphabeta(successor(g, s, spec, x), alpha - 1, beta - 1))))
                    break;
            if (! cut && s.passes_remaining[index(s.to_move)] > 0)
                consider(alphabeta(successor_pass(g, s, spec), alpha, beta));

            auto b8 = static_cast<std::uint8_t>(best);
            if (best <= alpha0)
                remember(k, {0, b8});
            else if (best >= beta0)
                remember(k, {b8, 255});
            else
                remember(k, {b8, b8});
            return best;
        }

        auto exact(const GameState & s) -> unsigned
        {
            return static_cast<unsigned>(options.alpha_beta ? alphabeta(s, unbounded_low, unbounded_high) : minimax(s));
        }
    };

    Solver::Solver(const Graph & g, VariantSpec spec, SolveOptions options) :
        graph_(g),
        spec_(std::move(spec)),
        options_(options),
        table_(std::make_unique<TranspositionTable>(options.threads > 1))
    {
        spec_.validate(graph_);
    }

    Solver::~Solver() = default;

    void Solver::clear()
    {
        table_->clear();
        nodes_ = 0;
    }

    auto Solver::stats() const -> SolveStats
    {
        return SolveStats{nodes_, table_->size(), std::chrono::milliseconds{0}};
    }

    auto Solver::value(const GameState & s) -> unsigned
    {
        std::atomic<std::uint64_t> nodes{nodes_};
        Search search{graph_, spec_, *table_, nodes, options_, graph_.vertices()};
        try {
            auto v = search.exact(s);
            nodes_ = nodes.load();
            return v;
        }
        catch (...) {
            nodes_ = nodes.load();
            throw;
        }
    }

    auto Solver::analyse(const GameState & s) -> SolveResult
    {
        auto start = Clock::now();
        SolveResult result;
        if (is_terminal(graph_, s)) {
            result.stats = stats();
            return result;
        }

        // Root children: every legal move, then the optional pass.
        struct Child
        {
            GameState state;
            unsigned increment;
            std::optional<Vertex> move;
            unsigned value = 0;
        };
        std::vector<Child> children;
        for (auto x : legal_moves(graph_, s, spec_))
            children.push_back({successor(graph_, s, spec_, x), 1, x});
        if (can_pass(graph_, s))
            children.push_back({successor_pass(graph_, s, spec_), 0, std::nullopt});

        std::atomic<std::uint64_t> nodes{nodes_};
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            Search search{graph_, spec_, *table_, nodes, options_, graph_.vertices()};
            try {
                for (auto i = next.fetch_add(1); i < children.size(); i = next.fetch_add(1))
                    children[i].value = search.exact(children[i].state);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
                next.store(children.size());
            }
        };

        auto threads = std::max(1U, std::min<unsigned>(options_.threads, static_cast<unsigned>(children.size())));
        if (threads == 1)
            worker();
        else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(worker);
        }
        nodes_ = nodes.load();
        if (failure)
            std::rethrow_exception(failure);

        bool minimising = s.to_move == Player::Dominator;
        unsigned best = minimising ? 1000U : 0U;
        for (auto & c : children) {
            auto total = c.increment + c.value;
            best = minimising ? std::min(best, total) : std::max(best, total);
        }
        result.value = best;
        for (auto & c : children)
            if (c.increment + c.value == best) {
                if (c.move)
                    result.first_moves.insert(*c.move);
                else
                    result.pass_optimal = true;
            }
        result.stats = stats();
        result.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        return result;
    }

    auto Solver::best_line() -> Transcript
    {
        auto s = initial_state(graph_, spec_);
        auto line = initial_actions(graph_, spec_);
        while (! is_terminal(graph_, s)) {
            auto r = analyse(s);
            auto t = r.first_moves.empty() ? step_pass(graph_, s, spec_) : step_move(graph_, s, spec_, r.first_moves.first());
            line.insert(line.end(), t.actions.begin(), t.actions.end());
            s = t.state;
        }
        return line;
    }

    auto solve(const Graph & g, const VariantSpec & spec, const SolveOptions & options) -> SolveResult
    {
        Solver solver(g, spec, options);
        return solver.solve();
    }

    auto best_line(const Graph & g, const VariantSpec & spec, const SolveOptions & options) -> Transcript
    {
        Solver solver(g, spec, options);
        return solver.best_line();
    }

    auto values_all_single_predominations(const Graph & g, Player first, const SolveOptions & options) -> std::vector<unsigned>
    {
        std::vector<unsigned> out;
        out.reserve(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            auto spec = first == Player::Dominator ? dgame(VertexSet::singleton(v)) : sgame(VertexSet::singleton(v));
            out.push_back(solve(g, spec, options).value);
        }
        return out;
    }

    auto is_critical(const Graph & g, const SolveOptions & options) -> bool
    {
        auto base = solve(g, dgame(), options).value;
        auto values = values_all_single_predominations(g, Player::Dominator, options);
        return std::all_of(values.begin(), values.end(), [&](unsigned v) { return v < base; });
    }
}
