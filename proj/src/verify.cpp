#include "tdg/verify.hpp"
#include "tdg/strategies.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

namespace tdg
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto value(const Graph & g, const VariantSpec & spec, const SolveOptions & o) -> unsigned { return solve(g, spec, o).value; }

        /// (2n-1)/3, the D-game value of C_n for n = 2 mod 6.
        auto cycle_value(unsigned n) -> unsigned { return (2 * n - 1) / 3; }

        auto n_tag(unsigned n) -> std::string { return "n=" + std::to_string(n); }

        auto skip_hypothesis(std::string why) -> Outcome { return {std::move(why), "not evaluated", ClaimStatus::SkippedHypothesis}; }

        auto equal_claim(std::string id, std::string locus, unsigned expected, std::function<unsigned(const SolveOptions &)> compute) -> Claim
        {
            return {std::move(id), std::move(locus), [expected, compute](const SolveOptions & o) { return expect_equal(compute(o), expected); }};
        }

        auto at_least_claim(std::string id, std::string locus, unsigned bound, std::function<unsigned(const SolveOptions &)> compute) -> Claim
        {
            return {std::move(id), std::move(locus), [bound, compute](const SolveOptions & o) { return expect_at_least(compute(o), bound); }};
        }

        auto pair_set(Vertex a, Vertex b) -> VertexSet { return VertexSet::of({a, b}); }

        /// Vertices whose removal leaves no isolated vertex.
        auto removable(const Graph & g) -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            for (Vertex v = 0; v < g.order(); ++v) {
                bool ok = g.order() > 2;
                for (auto w : g.neighbourhood(v))
                    ok = ok && g.degree(w) > 1;
                if (ok)
                    out.push_back(v);
            }
            return out;
        }

        auto random_subset(unsigned order, std::mt19937_64 & rng) -> VertexSet
        {
            VertexSet s;
            for (Vertex v = 0; v < order; ++v)
                if (rng() & 1U)
                    s.insert(v);
            return s;
        }

        /// Counts checks of a universally quantified property and remembers
        /// the first counterexample.
        struct Tally
        {
            unsigned checks = 0;
            unsigned failures = 0;
            long long extreme = 0;
            bool has_extreme = false;
            std::string first_failure;

            void record(bool ok, const std::string & where)
            {
                ++checks;
                if (! ok && failures++ == 0)
                    first_failure = where;
            }

            void observe(long long v)
            {
                extreme = has_extreme ? std::max(extreme, v) : v;
                has_extreme = true;
            }

            auto outcome(std::string expected, const std::string & observed_label = {}) const -> Outcome
            {
                std::string computed = std::to_string(checks - failures) + "/" + std::to_string(checks) + " hold";
                if (has_extreme && ! observed_label.empty())
                    computed += ", " + observed_label + " " + std::to_string(extreme);
                if (failures > 0)
                    computed += ", first counterexample: " + first_failure;
                return {std::move(expected), computed, failures == 0 ? ClaimStatus::Pass : ClaimStatus::Fail};
            }
        };

        auto random_graphs(unsigned count, unsigned min_order, unsigned max_order, std::uint64_t seed) -> std::shared_ptr<std::vector<Graph>>
        {
            std::mt19937_64 rng(seed);
            auto out = std::make_shared<std::vector<Graph>>();
            for (unsigned i = 0; i < count; ++i) {
                auto order = min_order + static_cast<unsigned>(rng() % (max_order - min_order + 1));
                out->push_back(random_connected_graph(order, 40, rng));
            }
            return out;
        }

        auto describe(const Graph & g) -> std::string
        {
            std::ostringstream s;
            s << "n=" << g.order() << " edges";
            for (auto [a, b] : g.edges())
                s << ' ' << a << '-' << b;
            return s.str();
        }
    }

    auto to_string(ClaimStatus s) -> std::string_view
    {
        switch (s) {
            case ClaimStatus::Pass: return "pass";
            case ClaimStatus::Fail: return "fail";
            case ClaimStatus::SkippedResource: return "skipped(resource)";
            case ClaimStatus::SkippedHypothesis: return "skipped(hypothesis)";
        }
        return "?";
    }

    auto expect_equal(unsigned computed, unsigned expected) -> Outcome
    {
        return {"= " + std::to_string(expected), std::to_string(computed), computed == expected ? ClaimStatus::Pass : ClaimStatus::Fail};
    }

    auto expect_at_least(unsigned computed, unsigned bound) -> Outcome
    {
        return {">= " + std::to_string(bound), std::to_string(computed), computed >= bound ? ClaimStatus::Pass : ClaimStatus::Fail};
    }

    auto expect_at_most(unsigned computed, unsigned bound) -> Outcome
    {
        return {"<= " + std::to_string(bound), std::to_string(computed), computed <= bound ? ClaimStatus::Pass : ClaimStatus::Fail};
    }

    auto random_connected_graph(unsigned order, unsigned percent, std::mt19937_64 & rng) -> Graph
    {
        for (;;) {
            std::vector<Edge> edges;
            for (Vertex a = 0; a < order; ++a)
                for (Vertex b = a + 1; b < order; ++b)
                    if (rng() % 100 < percent)
                        edges.emplace_back(a, b);
            // Graph rejects isolated vertices, so screen for them first.
            bool isolated = false;
            std::vector<unsigned> degree(order, 0);
            for (auto [a, b] : edges)
                ++degree[a], ++degree[b];
            for (auto d : degree)
                isolated = isolated || d == 0;
            if (isolated)
                continue;
            auto g = Graph::from_edges(order, edges);
            if (g.connected())
                return g;
        }
    }

    // ---- cycles ----------------------------------------------------------

    auto cycle_closed_form_claims(const std::vector<unsigned> & ns, std::uint64_t seed) -> std::vector<Claim>
    {
        const std::string locus_d = "D-game on C_n, also with one vertex predominated, equals (2n-1)/3 when n = 2 mod 6";
        const std::string locus_s = "S-game on C_n, also with one vertex predominated, equals (2n-1)/3 - 1 when n = 2 mod 6";
        std::mt19937_64 rng(seed);
        std::vector<Claim> out;
        for (auto n : ns) {
            auto base = "cycles/" + n_tag(n);
            if (n % 6 != 2) {
                out.push_back({base, locus_d, [](const SolveOptions &) { return skip_hypothesis("n = 2 mod 6"); }});
                continue;
            }
            auto g = build_cycle(n);
            Vertex sampled = 1 + static_cast<Vertex>(rng() % (n - 1));
            auto tag_v = "v=" + std::to_string(sampled);
            out.push_back(equal_claim(base + "/d", locus_d, cycle_value(n), [g](auto & o) { return value(g, dgame(), o); }));
            out.push_back(equal_claim(base + "/s", locus_s, cycle_value(n) - 1, [g](auto & o) { return value(g, sgame(), o); }));
            for (auto v : {Vertex{0}, sampled}) {
                auto tag = v == 0 ? std::string{"u1"} : tag_v;
                out.push_back(equal_claim(base + "/d|" + tag, locus_d, cycle_value(n), [g, v](auto & o) {
                    return value(g, dgame(VertexSet::singleton(v)), o);
                }));
                out.push_back(equal_claim(base + "/s|" + tag, locus_s, cycle_value(n) - 1, [g, v](auto & o) {
                    return value(g, sgame(VertexSet::singleton(v)), o);
                }));
            }
        }
        return out;
    }

    auto cycle_variant_claims(const std::vector<unsigned> & ns, unsigned ss_max_n) -> std::vector<Claim>
    {
        std::vector<Claim> out;
        for (unsigned n = 3; n <= ss_max_n; ++n) {
            auto g = build_cycle(n);
            out.push_back({"cycle-variants/" + n_tag(n) + "/ss", "two opening Staller moves leave the D-game value of C_n unchanged",
                           [g](const SolveOptions & o) { return expect_equal(value(g, double_staller(), o), value(g, dgame(), o)); }});
        }

        for (auto n : ns) {
            auto base = "cycle-variants/" + n_tag(n);
            if (n % 6 != 2) {
                out.push_back({base, "cycle variant bounds", [](const SolveOptions &) { return skip_hypothesis("n = 2 mod 6"); }});
                continue;
            }
            auto g = build_cycle(n);
            auto target = cycle_value(n);
            auto u15 = pair_set(g.landmark("u1"), g.landmark("u5"));

            out.push_back(equal_claim(base + "/pre-u1u5", "predominating u1 and u5 leaves the D-game value of C_n at (2n-1)/3", target,
                                      [g, u15](auto & o) { return value(g, dgame(u15), o); }));

            for (unsigned m = 0; m <= target; ++m)
                out.push_back(at_least_claim(base + "/delayed/m=" + std::to_string(m),
                                             "predominating u1 and u5 after move m keeps C_n at least (2n-1)/3", target,
                                             [g, m, u15](auto & o) { return value(g, delayed_predom(m, u15), o); }));

            for (unsigned k = 0; k <= target; ++k)
                for (unsigned l = k; l <= target; ++l) {
                    if (! sdp_admissible(k, l))
                        continue;
                    auto kl = "/k=" + std::to_string(k) + ",l=" + std::to_string(l);
                    out.push_back(at_least_claim(base + "/sdp" + kl, "a forced Staller pass then a forced Dominator pass keep C_n at least (2n-1)/3",
                                                 target, [g, k, l](auto & o) { return value(g, sdp(k, l), o); }));
                    out.push_back(at_least_claim(base + "/sdp-pre" + kl,
                                                 "forced passes with u1, u5 predominated at Dominator's pass keep C_n at least (2n-1)/3", target,
                                                 [g, k, l, u15](auto & o) { return value(g, sdp_predom(k, l, u15), o); }));
                }

            out.push_back(at_least_claim(base + "/ssp-u1u5", "Staller passing after Dominator plays u1 or u5 keeps C_n at least (2n-1)/3", target,
                                         [g](auto & o) { return value(g, ssp(g.landmark("u1"), g.landmark("u5")), o); }));
        }
        return out;
    }

    // ---- clique attachments ----------------------------------------------

    auto hm_claims(const std::vector<unsigned> & ms) -> std::vector<Claim>
    {
        const std::string locus_flat = "H_m has D-game, S-game and every single-vertex predominated S-game value 2";
        const std::string locus_split = "H_m with one vertex predominated: D-game 1 at w1, w2 and 2 elsewhere";
        std::vector<Claim> out;
        for (auto m : ms) {
            auto g = build_hm(m);
            auto base = "hm/m=" + std::to_string(m);
            out.push_back(equal_claim(base + "/d", locus_flat, 2, [g](auto & o) { return value(g, dgame(), o); }));
            out.push_back(equal_claim(base + "/s", locus_flat, 2, [g](auto & o) { return value(g, sgame(), o); }));
            for (auto & [name, v] : g.landmarks()) {
                auto vv = v;
                out.push_back(equal_claim(base + "/s|" + name, locus_flat, 2, [g, vv](auto & o) { return value(g, sgame(VertexSet::singleton(vv)), o); }));
                unsigned expected = name == "w1" || name == "w2" ? 1 : 2;
                out.push_back(
                    equal_claim(base + "/d|" + name, locus_split, expected, [g, vv](auto & o) { return value(g, dgame(VertexSet::singleton(vv)), o); }));
            }
        }
        return out;
    }

    auto gnm_claims(unsigned n, unsigned m) -> std::vector<Claim>
    {
        auto base = "gnm/" + n_tag(n) + "/m=" + std::to_string(m);
        if (n % 6 != 2 || n < 8 || m < 4)
            return {{base, "G_{n,m} values", [](const SolveOptions &) { return skip_hypothesis("n = 2 mod 6, n >= 8, m >= 4"); }}};
        auto g = build_gndm(n, 4, m);
        auto w1 = VertexSet::singleton(g.landmark("w1"));
        return {
            equal_claim(base + "/d", "G_{n,m} has D-game value (2n-1)/3 + 2", cycle_value(n) + 2, [g](auto & o) { return value(g, dgame(), o); }),
            equal_claim(base + "/d|w1", "G_{n,m} with w1 predominated has D-game value (2n-1)/3", cycle_value(n),
                        [g, w1](auto & o) { return value(g, dgame(w1), o); }),
            {base + "/drop", "predominating w1 lowers the D-game value of G_{n,m} by exactly 2",
             [g, w1](const SolveOptions & o) {
                 auto whole = value(g, dgame(), o);
                 return expect_equal(value(g, dgame(w1), o), whole >= 2 ? whole - 2 : 0);
             }},
        };
    }

    auto tilde_claims(unsigned n, unsigned m) -> std::vector<Claim>
    {
        auto base = "tilde/" + n_tag(n) + "/m=" + std::to_string(m);
        // The values are stated without hypotheses; we assume those of G_{n,m}.
        if (n % 6 != 2 || m < 3)
            return {{base, "tilde G_{n,m} values", [](const SolveOptions &) { return skip_hypothesis("n = 2 mod 6, m >= 3 (assumed)"); }}};
        auto g = build_tilde(n, m);
        auto w = VertexSet::singleton(g.landmark("w"));
        return {
            equal_claim(base + "/d", "tilde G_{n,m} has D-game value (2n-1)/3 + 2 (assuming n = 2 mod 6)", cycle_value(n) + 2,
                        [g](auto & o) { return value(g, dgame(), o); }),
            equal_claim(base + "/d|w", "tilde G_{n,m} with w predominated has D-game value (2n-1)/3 (assuming n = 2 mod 6)", cycle_value(n),
                        [g, w](auto & o) { return value(g, dgame(w), o); }),
        };
    }

    auto two_predominated_claims(unsigned n) -> std::vector<Claim>
    {
        const std::string locus_d = "C_n with two vertices at distance d predominated: D-game drops by 0 (d = 4), 1 (d odd), 2 (d = 0, 2) mod 6";
        const std::string locus_s = "C_n with two vertices predominated has S-game value (2n-1)/3 - 1";
        auto base = "two-predominated/" + n_tag(n);
        if (n % 6 != 2)
            return {{base, locus_d, [](const SolveOptions &) { return skip_hypothesis("n = 2 mod 6"); }}};
        auto g = build_cycle(n);
        auto gamma = cycle_value(n);
        std::vector<Claim> out;
        for (unsigned d = 1; d <= n / 2; ++d) {
            unsigned drop = d % 6 == 4 ? 0 : d % 2 == 1 ? 1 : 2;
            auto pre = pair_set(0, d);
            out.push_back(equal_claim(base + "/d=" + std::to_string(d) + "/d-game", locus_d, gamma - drop, [g, pre](auto & o) {
                return value(g, dgame(pre), o);
            }));
            out.push_back(equal_claim(base + "/d=" + std::to_string(d) + "/s-game", locus_s, gamma - 1, [g, pre](auto & o) {
                return value(g, sgame(pre), o);
            }));
        }
        if (n / 2 < 6)
            out.push_back({base + "/residue-0", locus_d, [](const SolveOptions &) { return skip_hypothesis("some d = 0 mod 6 needs n >= 12"); }});
        return out;
    }

    auto sandwich_claims(const std::string & name, const Graph & h, Vertex a, Vertex b, unsigned m) -> std::vector<Claim>
    {
        auto base = "sandwich/" + name + "/m=" + std::to_string(m);
        return {{base, "min over delayed, ssp and sdp variants of H, plus 2 <= D-game of H with K_m attached <= max(D-game, double-Staller game of H) + 2",
                 [h, a, b, m](const SolveOptions & o) {
                     auto ab = pair_set(a, b);
                     auto horizon = h.order();
                     unsigned lower = ~0U;
                     for (unsigned p = 0; p <= horizon; ++p)
                         lower = std::min(lower, value(h, delayed_predom(p, ab), o));
                     lower = std::min(lower, value(h, ssp(a, b), o));
                     for (unsigned k = 0; k <= horizon; ++k)
                         for (unsigned l = k; l <= horizon; ++l) {
                             if (! sdp_admissible(k, l))
                                 continue;
                             for (unsigned q = 0; q <= horizon; ++q)
                                 lower = std::min(lower, value(h, sdp_delayed(k, l, q, ab), o));
                         }
                     auto middle = value(attach_complete(h, a, b, m), dgame(), o);
                     auto upper = std::max(value(h, dgame(), o), value(h, double_staller(), o));
                     bool ok = lower + 2 <= middle && middle <= upper + 2;
                     return Outcome{"left + 2 <= middle <= right + 2",
                                    "left=" + std::to_string(lower) + " middle=" + std::to_string(middle) + " right=" + std::to_string(upper),
                                    ok ? ClaimStatus::Pass : ClaimStatus::Fail};
                 }}};
    }

    auto problem1_claims(unsigned n, unsigned m) -> std::vector<Claim>
    {
        const std::string locus = "reproduction of reported computation: G_{n,d,m} has D-game value (2n-1)/3 + 1, or + 2 when d = 4 mod 6";
        const std::string locus_bracket = "D-game of C_n with u1, u2 predominated, plus 2 <= G_{n,d,m} <= D-game of C_n plus 2";
        auto base = "problem1/" + n_tag(n) + "/m=" + std::to_string(m);
        if (n % 6 != 2)
            return {{base, locus, [](const SolveOptions &) { return skip_hypothesis("n = 2 mod 6"); }}};
        std::vector<Claim> out;
        auto cycle = build_cycle(n);
        for (unsigned d = 1; d <= n / 2; ++d) {
            auto g = build_gndm(n, d, m);
            auto id = base + "/d=" + std::to_string(d);
            out.push_back(equal_claim(id, locus, cycle_value(n) + (d % 6 == 4 ? 2 : 1), [g](auto & o) { return value(g, dgame(), o); }));
            out.push_back({id + "/bracket", locus_bracket, [g, cycle, d](const SolveOptions & o) {
                               auto low = value(cycle, dgame(pair_set(0, d)), o) + 2;
                               auto high = value(cycle, dgame(), o) + 2;
                               auto mid = value(g, dgame(), o);
                               return Outcome{"[" + std::to_string(low) + ", " + std::to_string(high) + "]", std::to_string(mid),
                                              low <= mid && mid <= high ? ClaimStatus::Pass : ClaimStatus::Fail};
                           }});
        }
        return out;
    }

    // ---- vertex removal ----------------------------------------------------

    auto vertex_removal_claims(unsigned graphs, unsigned order, std::uint64_t seed) -> std::vector<Claim>
    {
        auto sample = random_graphs(graphs, order, order, seed);
        auto tag = "vertex-removal/random-" + std::to_string(graphs) + "x" + std::to_string(order) + "/seed=" + std::to_string(seed);

        auto removal_bound = [sample](Player first) {
            return [sample, first](const SolveOptions & o) {
                Tally t;
                for (auto & g : *sample) {
                    auto whole = value(g, first == Player::Dominator ? dgame() : sgame(), o);
                    for (auto v : removable(g)) {
                        auto rest = value(remove_vertex(g, v).graph, first == Player::Dominator ? dgame() : sgame(), o);
                        t.observe(static_cast<long long>(whole) - rest);
                        t.record(whole <= rest + 4, describe(g) + " v=" + std::to_string(v));
                    }
                }
                return t.outcome("G <= G-v + 4 for every removable v", "largest G - (G-v):");
            };
        };

        return {
            {tag + "/d-game", "D-game of G is at most D-game of G-v plus 4", removal_bound(Player::Dominator)},
            {tag + "/s-game", "S-game of G is at most S-game of G-v plus 4", removal_bound(Player::Staller)},
            {tag + "/predomination-drop", "predominating one vertex lowers the D-game value by at most 2",
             [sample](const SolveOptions & o) {
                 Tally t;
                 for (auto & g : *sample) {
                     auto whole = value(g, dgame(), o);
                     for (Vertex v = 0; v < g.order(); ++v) {
                         auto pre = value(g, dgame(VertexSet::singleton(v)), o);
                         t.observe(static_cast<long long>(whole) - pre);
                         t.record(pre + 2 >= whole, describe(g) + " v=" + std::to_string(v));
                     }
                 }
                 return t.outcome("G|v >= G - 2 for every v", "largest drop:");
             }},
        };
    }

    auto universal_join_claims() -> std::vector<Claim>
    {
        std::vector<std::pair<std::string, Graph>> bases{{"cycle8", build_cycle(8)}, {"path7", build_path(7)}, {"kleaves2", build_k_leaves(2)}};
        std::vector<Claim> out;
        for (auto & [name, h] : bases) {
            auto g = join_universal(h);
            auto id = "vertex-removal/join-" + name;
            out.push_back(equal_claim(id + "/whole", "joining a universal vertex gives D-game value 2", 2, [g](auto & o) { return value(g, dgame(), o); }));
            out.push_back({id + "/removed", "removing the universal vertex restores the D-game value of H", [g, hh = h](const SolveOptions & o) {
                               auto rest = remove_vertex(g, g.landmark("v")).graph;
                               return expect_equal(value(rest, dgame(), o), value(hh, dgame(), o));
                           }});
        }
        return out;
    }

    auto k_leaves_claims(const std::vector<unsigned> & ks) -> std::vector<Claim>
    {
        const std::string locus = "K_{k+2} with k pendant leaves: G and G-v both have D-game and S-game value k+1";
        std::vector<Claim> out;
        for (auto k : ks) {
            auto g = build_k_leaves(k);
            auto rest = remove_vertex(g, g.landmark("v")).graph;
            auto id = "vertex-removal/kleaves/k=" + std::to_string(k);
            out.push_back(equal_claim(id + "/d", locus, k + 1, [g](auto & o) { return value(g, dgame(), o); }));
            out.push_back(equal_claim(id + "/d-v", locus, k + 1, [rest](auto & o) { return value(rest, dgame(), o); }));
            out.push_back(equal_claim(id + "/s", locus, k + 1, [g](auto & o) { return value(g, sgame(), o); }));
            out.push_back(equal_claim(id + "/s-v", locus, k + 1, [rest](auto & o) { return value(rest, sgame(), o); }));
        }
        return out;
    }

    // ---- difference families -----------------------------------------------

    auto path_difference_claims(unsigned max_n) -> std::vector<Claim>
    {
        std::vector<Claim> out;
        for (unsigned n = 3; n <= max_n; ++n) {
            auto g = build_path(n);
            auto rest = remove_vertex(g, 0).graph;
            auto id = "differences/path/" + n_tag(n);
            for (auto first : {Player::Dominator, Player::Staller}) {
                bool stated = first == Player::Dominator ? (n % 6 == 0 || n % 6 == 1 || n % 6 == 2 || n % 6 == 4)
                                                         : (n % 6 == 1 || n % 6 == 2 || n % 6 == 4 || n % 6 == 5);
                auto locus = first == Player::Dominator ? "removing an end-vertex lowers the D-game value of P_n by 1 for n = 0, 1, 2, 4 mod 6"
                                                        : "removing an end-vertex lowers the S-game value of P_n by 1 for n = 1, 2, 4, 5 mod 6";
                out.push_back({id + (first == Player::Dominator ? "/d" : "/s"), locus, [g, rest, first, stated](const SolveOptions & o) {
                                   auto spec = first == Player::Dominator ? dgame() : sgame();
                                   long long diff = static_cast<long long>(value(g, spec, o)) - value(rest, spec, o);
                                   if (! stated)
                                       return Outcome{"residue not covered", "difference " + std::to_string(diff), ClaimStatus::SkippedHypothesis};
                                   return Outcome{"= 1", std::to_string(diff), diff == 1 ? ClaimStatus::Pass : ClaimStatus::Fail};
                               }});
            }
        }
        return out;
    }

    auto z_core_claims() -> std::vector<Claim>
    {
        const std::string locus = "the core Z has total domination number and all four D/S-game values (plain and with z predominated) equal to 4";
        auto z = build_z_core();
        auto at_z = VertexSet::singleton(z.landmark("z"));
        auto p6 = build_path(6);
        return {
            equal_claim("differences/z-core/total-domination", locus, 4, [z](auto &) { return total_domination_number(z); }),
            equal_claim("differences/z-core/d", locus, 4, [z](auto & o) { return value(z, dgame(), o); }),
            equal_claim("differences/z-core/s", locus, 4, [z](auto & o) { return value(z, sgame(), o); }),
            equal_claim("differences/z-core/d|z", locus, 4, [z, at_z](auto & o) { return value(z, dgame(at_z), o); }),
            equal_claim("differences/z-core/s|z", locus, 4, [z, at_z](auto & o) { return value(z, sgame(at_z), o); }),
            equal_claim("differences/p6/total-domination", "total domination number of P_6 stated as 3", 3,
                        [p6](auto &) { return total_domination_number(p6); }),
        };
    }

    auto z_family_claims(unsigned kmax) -> std::vector<Claim>
    {
        std::vector<Claim> out;
        for (unsigned k = 0; k <= kmax; ++k) {
            auto g = build_zk(k);
            auto rest = remove_vertex(g, g.landmark("v")).graph;
            auto id = "differences/zk/k=" + std::to_string(k);
            out.push_back(equal_claim(id + "/s", "S-game value of Z_k is 3k + 8", 3 * k + 8, [g](auto & o) { return value(g, sgame(), o); }));
            out.push_back(equal_claim(id + "/s-v", "S-game value of Z_k - v is 3k + 6", 3 * k + 6, [rest](auto & o) { return value(rest, sgame(), o); }));
        }
        return out;
    }

    // ---- random properties -------------------------------------------------

    auto random_property_claims(unsigned graphs, std::uint64_t seed) -> std::vector<Claim>
    {
        auto sample = random_graphs(graphs, 4, 8, seed);
        auto tag = "properties/random-" + std::to_string(graphs) + "/seed=" + std::to_string(seed);

        return {
            {tag + "/oracle", "the memoized solver, with and without pruning, agrees with plain recursion on a fixed variant sample",
             [sample, seed](const SolveOptions & o) {
                 std::mt19937_64 rng(seed ^ 0x5a5a5a5aULL);
                 auto pruned = o;
                 pruned.alpha_beta = true;
                 Tally t;
                 for (auto & g : *sample) {
                     auto n = g.order();
                     Vertex r1 = static_cast<Vertex>(rng() % n);
                     Vertex r2 = (r1 + 1 + static_cast<Vertex>(rng() % (n - 1))) % n;
                     auto one = VertexSet::singleton(r1);
                     auto two = pair_set(r1, r2);
                     std::vector<VariantSpec> variants{dgame(),
                                                       sgame(),
                                                       dgame(one),
                                                       sgame(two),
                                                       staller_pass(Player::Dominator),
                                                       staller_pass(Player::Staller, one),
                                                       dominator_pass(Player::Dominator),
                                                       dominator_pass(Player::Staller),
                                                       double_staller(),
                                                       delayed_predom(1, two),
                                                       sdp(1, 3),
                                                       sdp_predom(1, 3, two),
                                                       sdp_delayed(1, 3, 2, one),
                                                       ssp(r1, r2)};
                     for (auto & spec : variants) {
                         auto expected = oracle_solve(g, spec);
                         bool ok = value(g, spec, o) == expected && value(g, spec, pruned) == expected;
                         t.record(ok, describe(g) + " variant " + spec.label);
                     }
                 }
                 return t.outcome("solver = oracle");
             }},
            {tag + "/ds-gap", "D-game and S-game values differ by at most 1",
             [sample](const SolveOptions & o) {
                 Tally t;
                 for (auto & g : *sample) {
                     long long d = value(g, dgame(), o), s = value(g, sgame(), o);
                     t.observe(std::llabs(d - s));
                     t.record(std::llabs(d - s) <= 1, describe(g));
                 }
                 return t.outcome("|D - S| <= 1", "largest gap:");
             }},
            {tag + "/continuation", "enlarging the predominated set never raises the D-game or S-game value",
             [sample, seed](const SolveOptions & o) {
                 std::mt19937_64 rng(seed ^ 0xc0ffeeULL);
                 Tally t;
                 for (auto & g : *sample) {
                     auto big = random_subset(g.order(), rng);
                     auto small = big & random_subset(g.order(), rng);
                     auto where = describe(g) + " A=" + to_string(big) + " B=" + to_string(small);
                     t.record(value(g, dgame(big), o) <= value(g, dgame(small), o), where + " (D)");
                     t.record(value(g, sgame(big), o) <= value(g, sgame(small), o), where + " (S)");
                 }
                 return t.outcome("G|A <= G|B for B subset of A");
             }},
            {tag + "/predomination-drop", "predominating one vertex lowers the D-game value by at most 2",
             [sample](const SolveOptions & o) {
                 Tally t;
                 for (auto & g : *sample) {
                     auto whole = value(g, dgame(), o);
                     for (Vertex v = 0; v < g.order(); ++v)
                         t.record(value(g, dgame(VertexSet::singleton(v)), o) + 2 >= whole, describe(g) + " v=" + std::to_string(v));
                 }
                 return t.outcome("G|v >= G - 2 for every v");
             }},
            {tag + "/vertex-removal", "D-game and S-game of G are at most those of G-v plus 4",
             [sample](const SolveOptions & o) {
                 Tally t;
                 for (auto & g : *sample) {
                     auto d = value(g, dgame(), o), s = value(g, sgame(), o);
                     for (auto v : removable(g)) {
                         auto rest = remove_vertex(g, v).graph;
                         auto where = describe(g) + " v=" + std::to_string(v);
                         t.record(d <= value(rest, dgame(), o) + 4, where + " (D)");
                         t.record(s <= value(rest, sgame(), o) + 4, where + " (S)");
                     }
                 }
                 return t.outcome("G <= G-v + 4 for every removable v");
             }},
            {tag + "/staller-pass", "one optional Staller pass raises the D-game (any single predomination) or S-game by at most 1",
             [sample](const SolveOptions & o) {
                 Tally t;
                 for (auto & g : *sample) {
                     for (Vertex u = 0; u < g.order(); ++u) {
                         auto one = VertexSet::singleton(u);
                         t.record(value(g, staller_pass(Player::Dominator, one), o) <= value(g, dgame(one), o) + 1,
                                  describe(g) + " u=" + std::to_string(u));
                     }
                     t.record(value(g, staller_pass(Player::Staller), o) <= value(g, sgame(), o) + 1, describe(g) + " (S)");
                 }
                 return t.outcome("pass game <= game + 1");
             }},
        };
    }

    // ---- strategies --------------------------------------------------------

    auto cycle_strategy_claims(const std::vector<unsigned> & ns) -> std::vector<Claim>
    {
        std::vector<Claim> out;
        for (auto n : ns) {
            auto g = build_cycle(n);
            auto id = "strategies/" + n_tag(n);
            out.push_back({id + "/s1-bound", "Staller's run-extremity strategy forces at least (2n-1)/3 - 1 moves on C_n in the D-game",
                           [g, n](const SolveOptions & o) {
                               auto m = play_match(g, dgame(), PolicyKind::Optimal, PolicyKind::S1, o);
                               return expect_at_least(m.length, cycle_value(n) - 1);
                           }});
            out.push_back({id + "/dominance", "optimal vs S1 <= optimal vs optimal <= D1 vs optimal on C_n", [g](const SolveOptions & o) {
                               auto vs_s1 = play_match(g, dgame(), PolicyKind::Optimal, PolicyKind::S1, o).length;
                               auto opt = play_match(g, dgame(), PolicyKind::Optimal, PolicyKind::Optimal, o).length;
                               auto vs_d1 = play_match(g, dgame(), PolicyKind::D1, PolicyKind::Optimal, o).length;
                               bool ok = vs_s1 <= opt && opt <= vs_d1;
                               return Outcome{"S1 <= optimal <= D1",
                                              "S1=" + std::to_string(vs_s1) + " optimal=" + std::to_string(opt) + " D1=" + std::to_string(vs_d1),
                                              ok ? ClaimStatus::Pass : ClaimStatus::Fail};
                           }});
        }
        return out;
    }

    // ---- registry and runner -----------------------------------------------

    auto parse_profile(std::string_view text) -> Profile
    {
        if (text == "quick")
            return Profile::Quick;
        if (text == "full")
            return Profile::Full;
        throw std::invalid_argument{"unknown profile '" + std::string{text} + "' (expected quick or full)"};
    }

    auto claim_topics() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> topics{
            "ds-gap",           "continuation",     "predomination-drop", "gnm",          "hm",       "cycle-closed-forms",
            "cycle-variants",   "cycle-strategies", "tilde",              "sandwich",     "two-predominated",
            "problem1",         "vertex-removal",   "universal-join",     "k-leaves",     "path-differences",
            "z-family",         "staller-pass",
        };
        return topics;
    }

    auto suites() -> const std::vector<Suite> &
    {
        auto full = [](const VerifyConfig & c) { return c.profile == Profile::Full; };
        static const std::vector<Suite> all{
            {"cycles", {"cycle-closed-forms"},
             [full](const VerifyConfig & c) {
                 std::vector<unsigned> ns{8, 14};
                 if (full(c))
                     ns.push_back(20);
                 return cycle_closed_form_claims(ns, c.seed);
             }},
            {"cycle-variants", {"cycle-variants"}, [](const VerifyConfig &) { return cycle_variant_claims({8, 14}, 14); }},
            {"gnm", {"gnm", "hm", "predomination-drop"},
             [full](const VerifyConfig & c) {
                 auto out = hm_claims({4, 5, 6});
                 std::vector<unsigned> ns{8, 14};
                 if (full(c))
                     ns.push_back(20);
                 for (auto n : ns)
                     for (auto & claim : gnm_claims(n, 4))
                         out.push_back(std::move(claim));
                 return out;
             }},
            {"tilde", {"tilde"},
             [](const VerifyConfig &) {
                 std::vector<Claim> out;
                 for (auto [n, m] : {std::pair{8U, 3U}, {14U, 3U}, {8U, 4U}})
                     for (auto & claim : tilde_claims(n, m))
                         out.push_back(std::move(claim));
                 return out;
             }},
            {"two-predominated", {"two-predominated"},
             [](const VerifyConfig &) {
                 auto out = two_predominated_claims(8);
                 for (auto & claim : two_predominated_claims(14))
                     out.push_back(std::move(claim));
                 return out;
             }},
            {"sandwich", {"sandwich"},
             [](const VerifyConfig &) {
                 auto out = sandwich_claims("cycle8-d4", build_cycle(8), 0, 4, 4);
                 for (auto & claim : sandwich_claims("cycle8-d2", build_cycle(8), 0, 2, 4))
                     out.push_back(std::move(claim));
                 for (auto & claim : sandwich_claims("path6-ends", build_path(6), 0, 5, 3))
                     out.push_back(std::move(claim));
                 auto c8 = attach_complete(build_cycle(8), 0, 4, 4);
                 out.push_back(equal_claim("sandwich/cycle8-d4/middle", "the middle term for C_8 with u1, u5 attached to K_4 is 7", 7,
                                           [c8](auto & o) { return value(c8, dgame(), o); }));
                 return out;
             }},
            {"problem1", {"problem1"},
             [full](const VerifyConfig & c) {
                 std::vector<unsigned> ns{8, 14};
                 if (full(c))
                     ns.push_back(20);
                 std::vector<Claim> out;
                 for (auto n : ns)
                     for (auto & claim : problem1_claims(n, 4))
                         out.push_back(std::move(claim));
                 return out;
             }},
            {"vertex-removal", {"vertex-removal", "universal-join", "k-leaves", "predomination-drop"},
             [](const VerifyConfig & c) {
                 auto out = vertex_removal_claims(100, 8, c.seed);
                 for (auto & claim : universal_join_claims())
                     out.push_back(std::move(claim));
                 for (auto & claim : k_leaves_claims({2, 3, 4}))
                     out.push_back(std::move(claim));
                 return out;
             }},
            {"differences", {"path-differences", "z-family"},
             [full](const VerifyConfig & c) {
                 auto out = path_difference_claims(14);
                 for (auto & claim : z_core_claims())
                     out.push_back(std::move(claim));
                 for (auto & claim : z_family_claims(full(c) ? 2 : 1))
                     out.push_back(std::move(claim));
                 return out;
             }},
            {"properties", {"ds-gap", "continuation", "predomination-drop", "vertex-removal", "staller-pass"},
             [](const VerifyConfig & c) { return random_property_claims(200, c.seed); }},
            {"strategies", {"cycle-strategies"}, [](const VerifyConfig &) { return cycle_strategy_claims({8, 14}); }},
        };
        return all;
    }

    auto find_suite(std::string_view name) -> const Suite &
    {
        for (auto & s : suites())
            if (s.name == name)
                return s;
        throw std::invalid_argument{"unknown suite '" + std::string{name} + "'"};
    }

    auto run_claims(const std::vector<Claim> & claims, unsigned threads, const SolveOptions & options) -> std::vector<ClaimReport>
    {
        std::vector<ClaimReport> reports(claims.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (auto i = next.fetch_add(1); i < claims.size(); i = next.fetch_add(1)) {
                auto & c = claims[i];
                auto & r = reports[i];
                r.claim_id = c.id;
                r.locus = c.locus;
                auto start = Clock::now();
                try {
                    auto out = c.check(options);
                    r.expected = std::move(out.expected);
                    r.computed = std::move(out.computed);
                    r.status = out.status;
                }
                catch (const ResourceError & e) {
                    r.computed = std::string{"resource limit: "} + e.what();
                    r.status = ClaimStatus::SkippedResource;
                }
                catch (const std::exception & e) {
                    r.computed = std::string{"error: "} + e.what();
                    r.status = ClaimStatus::Fail;
                }
                r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            }
        };

        auto n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(claims.size())));
        if (n == 1)
            worker();
        else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < n; ++t)
                pool.emplace_back(worker);
        }
        return reports;
    }

    auto ReportBundle::count(ClaimStatus s) const -> std::size_t
    {
        return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [s](auto & r) { return r.status == s; }));
    }

    auto run_suites(const std::vector<std::string> & names, const VerifyConfig & config) -> ReportBundle
    {
        for (auto & n : names)
            find_suite(n);
        std::vector<Claim> claims;
        for (auto & s : suites())
            if (std::find(names.begin(), names.end(), s.name) != names.end())
                for (auto & c : s.claims(config))
                    claims.push_back(std::move(c));

        auto options = config.solve;
        options.threads = 1;
        ReportBundle out;
        out.profile = config.profile == Profile::Quick ? "quick" : "full";
        out.seed = config.seed;
        out.reports = run_claims(claims, config.threads, options);
        return out;
    }

    auto run_all(const VerifyConfig & config) -> ReportBundle
    {
        std::vector<std::string> names;
        for (auto & s : suites())
            names.push_back(s.name);
        return run_suites(names, config);
    }

    auto to_json(const ClaimReport & r, bool with_timing) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["claim_id"] = r.claim_id;
        j["locus"] = r.locus;
        j["expected"] = r.expected;
        j["computed"] = r.computed;
        j["status"] = std::string{to_string(r.status)};
        if (with_timing)
            j["millis"] = r.elapsed.count();
        return j;
    }

    auto to_json(const ReportBundle & b, bool with_timing) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["profile"] = b.profile;
        j["seed"] = b.seed;
        j["passed"] = b.count(ClaimStatus::Pass);
        j["failed"] = b.count(ClaimStatus::Fail);
        j["skipped"] = b.count(ClaimStatus::SkippedResource) + b.count(ClaimStatus::SkippedHypothesis);
        auto reports = nlohmann::ordered_json::array();
        for (auto & r : b.reports)
            reports.push_back(to_json(r, with_timing));
        j["reports"] = std::move(reports);
        return j;
    }

    namespace
    {
        auto csv_field(const std::string & s) -> std::string
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char c : s) {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + '"';
        }
    }

    auto to_csv(const ReportBundle & b, bool with_timing) -> std::string
    {
        std::ostringstream out;
        out << "claim_id,locus,expected,computed,status" << (with_timing ? ",millis" : "") << '\n';
        for (auto & r : b.reports) {
            out << csv_field(r.claim_id) << ',' << csv_field(r.locus) << ',' << csv_field(r.expected) << ',' << csv_field(r.computed) << ','
                << to_string(r.status);
            if (with_timing)
                out << ',' << r.elapsed.count();
            out << '\n';
        }
        return out.str();
    }

    auto summary(const ReportBundle & b) -> std::string
    {
        std::ostringstream out;
        for (auto & r : b.reports)
            if (r.status != ClaimStatus::Pass)
                out << to_string(r.status) << "  " << r.claim_id << "  expected " << r.expected << ", computed " << r.computed << '\n';
        out << b.reports.size() << " claims: " << b.count(ClaimStatus::Pass) << " passed, " << b.count(ClaimStatus::Fail) << " failed, "
            << b.count(ClaimStatus::SkippedResource) << " skipped (resource), " << b.count(ClaimStatus::SkippedHypothesis)
            << " skipped (hypothesis); profile " << b.profile << ", seed " << b.seed << '\n';
        return out.str();
    }
}
