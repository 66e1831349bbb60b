#include "tdg/solver.hpp"

#include <algorithm>
#include <bit>

namespace tdg
{
    namespace
    {
        class TotalDominationSearch
        {
        public:
            explicit TotalDominationSearch(const Graph & g) : g_(g), full_(g.vertices())
            {
                for (Vertex v = 0; v < g.order(); ++v)
                    max_degree_ = std::max(max_degree_, g.degree(v));
            }

            auto run() -> unsigned
            {
                best_ = greedy();
                branch(VertexSet{}, 0);
                return best_;
            }

        private:
            const Graph & g_;
            VertexSet full_;
            unsigned max_degree_ = 0;
            unsigned best_ = 0;

            auto greedy() const -> unsigned
            {
                VertexSet covered;
                unsigned used = 0;
                while (covered != full_) {
                    Vertex pick = 0;
                    unsigned gain = 0;
                    for (Vertex v = 0; v < g_.order(); ++v) {
                        auto gv = (g_.neighbourhood(v) - covered).size();
                        if (gv > gain) {
                            gain = gv;
                            pick = v;
                        }
                    }
                    covered |= g_.neighbourhood(pick);
                    ++used;
                }
                return used;
            }

            void branch(VertexSet covered, unsigned used)
            {
                if (covered == full_) {
                    best_ = std::min(best_, used);
                    return;
                }
                auto missing = (full_ - covered).size();
                if (used + (missing + max_degree_ - 1) / max_degree_ >= best_)
                    return;

                // The uncovered vertex with fewest possible dominators.
                Vertex target = 0;
                unsigned fewest = ~0U;
                for (auto v : full_ - covered)
                    if (g_.degree(v) < fewest) {
                        fewest = g_.degree(v);
                        target = v;
                    }

                std::vector<std::pair<unsigned, Vertex>> options;
                for (auto t : g_.neighbourhood(target))
                    options.emplace_back((g_.neighbourhood(t) - covered).size(), t);
                std::stable_sort(options.begin(), options.end(), [](auto & a, auto & b) { return a.first > b.first; });
                for (auto & [_, t] : options)
                    branch(covered | g_.neighbourhood(t), used + 1);
            }
        };
    }

    auto total_domination_number(const Graph & g) -> unsigned
    {
        if (g.order() > tdn_max_order)
            throw ResourceError{"total domination search is capped at " + std::to_string(tdn_max_order) + " vertices", {}};
        return TotalDominationSearch{g}.run();
    }
}
