// Plain-recursion game value, kept free of the engine's transition code so
// that it can cross-check Solver.

#include "tdg/solver.hpp"

#include <algorithm>
#include <vector>

namespace tdg
{
    namespace
    {
        struct Position
        {
            std::uint64_t dominated;
            int moves;
            int slots;
            Player holder;
            int passes[2];
            int triggers_played;
            int staller_passes_owed;
        };

        class Oracle
        {
        public:
            Oracle(const Graph & g, const VariantSpec & spec) : spec_(spec), full_(g.vertices().bits())
            {
                for (Vertex v = 0; v < g.order(); ++v)
                    nbhd_.push_back(g.neighbourhood(v).bits());
            }

            auto run() -> int
            {
                Position p{spec_.initial_dominated.bits(), 0, 0, holder_of_slot(0, spec_.first_player), {}, 0, 0};
                p.passes[0] = spec_.optional_passes[0];
                p.passes[1] = spec_.optional_passes[1];
                after_move(p);
                return value(p);
            }

        private:
            const VariantSpec & spec_;
            std::uint64_t full_;
            std::vector<std::uint64_t> nbhd_;

            auto holder_of_slot(int slot, Player previous) const -> Player
            {
                if (slot < static_cast<int>(spec_.schedule_prefix.size()))
                    return spec_.schedule_prefix[slot];
                return slot == 0 ? spec_.first_player : other(previous);
            }

            void next_slot(Position & p) const
            {
                ++p.slots;
                p.holder = holder_of_slot(p.slots, p.holder);
            }

            /// Everything that happens for free once the count reaches p.moves.
            void after_move(Position & p) const
            {
                for (auto & e : spec_.events)
                    if (static_cast<int>(e.after_move) == p.moves)
                        p.dominated |= e.vertices.bits();
                if (p.dominated == full_)
                    return;
                for (auto & f : spec_.forced_passes) {
                    if (static_cast<int>(f.after_move) != p.moves)
                        continue;
                    if (f.player != p.holder)
                        throw VariantError{"oracle: forced pass off-turn"};
                    next_slot(p);
                }
                while (p.staller_passes_owed > 0 && p.holder == Player::Staller) {
                    --p.staller_passes_owed;
                    next_slot(p);
                }
            }

            auto playable(const Position & p, Vertex x) const -> bool
            {
                if ((nbhd_[x] & ~p.dominated) != 0)
                    return true;
                return spec_.first_move_exemption && p.holder == Player::Dominator && p.triggers_played == 0 && spec_.triggers->contains(x);
            }

            auto value(const Position & p) const -> int
            {
                if (p.dominated == full_)
                    return 0;
                bool dominator = p.holder == Player::Dominator;
                int best = dominator ? 1 << 20 : -1;
                auto consider = [&](int v) { best = dominator ? std::min(best, v) : std::max(best, v); };

                for (Vertex x = 0; x < nbhd_.size(); ++x) {
                    if (! playable(p, x))
                        continue;
                    Position q = p;
                    q.dominated |= nbhd_[x];
                    ++q.moves;
                    if (dominator && spec_.triggers && spec_.triggers->contains(x) && q.triggers_played < 2) {
                        ++q.triggers_played;
                        ++q.staller_passes_owed;
                    }
                    next_slot(q);
                    after_move(q);
                    consider(1 + value(q));
                }
                if (p.passes[index(p.holder)] > 0) {
                    Position q = p;
                    --q.passes[index(p.holder)];
                    next_slot(q);
                    while (q.staller_passes_owed > 0 && q.holder == Player::Staller) {
                        --q.staller_passes_owed;
                        next_slot(q);
                    }
                    consider(value(q));
                }
                return best;
            }
        };
    }

    auto oracle_solve(const Graph & g, const VariantSpec & spec) -> unsigned
    {
        if (g.order() > oracle_max_order)
            throw ResourceError{"oracle is capped at " + std::to_string(oracle_max_order) + " vertices", {}};
        spec.validate(g);
        return static_cast<unsigned>(Oracle{g, spec}.run());
    }
}
