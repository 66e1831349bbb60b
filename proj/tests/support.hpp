// Test-side oracles.  They deliberately share no code with the library
// beyond reading a Graph's adjacency.
#pragma once

#include "tdg/graph.hpp"
#include "tdg/variant.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace test_support
{
    inline auto adjacency(const tdg::Graph & g) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> adj(g.order(), 0);
        for (tdg::Vertex a = 0; a < g.order(); ++a)
            for (tdg::Vertex b = 0; b < g.order(); ++b)
                if (a != b && g.adjacent(a, b))
                    adj[a] |= std::uint64_t{1} << b;
        return adj;
    }

    inline auto count_edges(const tdg::Graph & g) -> unsigned
    {
        unsigned count = 0;
        for (tdg::Vertex a = 0; a < g.order(); ++a)
            for (tdg::Vertex b = a + 1; b < g.order(); ++b)
                count += g.adjacent(a, b) ? 1 : 0;
        return count;
    }

    /// Smallest total dominating set by enumerating subsets in size order.
    inline auto brute_total_domination(const tdg::Graph & g) -> unsigned
    {
        auto adj = adjacency(g);
        auto n = g.order();
        std::uint64_t all = (std::uint64_t{1} << n) - 1;
        unsigned best = n;
        for (std::uint64_t t = 1; t <= all; ++t) {
            auto size = static_cast<unsigned>(std::popcount(t));
            if (size >= best)
                continue;
            std::uint64_t cover = 0;
            for (unsigned v = 0; v < n; ++v)
                if ((t >> v) & 1U)
                    cover |= adj[v];
            if (cover == all)
                best = size;
        }
        return best;
    }

    /// Plain D- or S-game value from a dominated mask, by full recursion.
    inline auto brute_game(const std::vector<std::uint64_t> & adj, std::uint64_t all, std::uint64_t dominated, bool dominator) -> int
    {
        if (dominated == all)
            return 0;
        int best = dominator ? 1 << 20 : -1;
        for (std::size_t x = 0; x < adj.size(); ++x) {
            if ((adj[x] & ~dominated) == 0)
                continue;
            int v = 1 + brute_game(adj, all, dominated | adj[x], ! dominator);
            best = dominator ? std::min(best, v) : std::max(best, v);
        }
        return best;
    }

    inline auto brute_game(const tdg::Graph & g, tdg::Player first, tdg::VertexSet predominated = {}) -> unsigned
    {
        auto adj = adjacency(g);
        std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
        return static_cast<unsigned>(brute_game(adj, all, predominated.bits(), first == tdg::Player::Dominator));
    }

    /// Connected graph on `order` vertices, edges kept with probability 2/5.
    inline auto random_graph(unsigned order, std::mt19937_64 & rng) -> tdg::Graph
    {
        for (;;) {
            std::vector<tdg::Edge> edges;
            std::vector<unsigned> degree(order, 0);
            for (tdg::Vertex a = 0; a < order; ++a)
                for (tdg::Vertex b = a + 1; b < order; ++b)
                    if (rng() % 5 < 2) {
                        edges.emplace_back(a, b);
                        ++degree[a];
                        ++degree[b];
                    }
            if (std::count(degree.begin(), degree.end(), 0U) > 0)
                continue;
            auto g = tdg::Graph::from_edges(order, edges);
            if (g.connected())
                return g;
        }
    }
}
