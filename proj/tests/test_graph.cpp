#include "support.hpp"

#include "tdg/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace tdg;

namespace
{
    auto error_kind(auto && f) -> GraphErrorKind
    {
        try {
            f();
        }
        catch (const GraphError & e) {
            return e.kind();
        }
        FAIL("expected a GraphError");
        return GraphErrorKind::Malformed;
    }

    void check_simple(const Graph & g)
    {
        for (Vertex a = 0; a < g.order(); ++a) {
            CHECK_FALSE(g.adjacent(a, a));
            CHECK(g.degree(a) >= 1);
            for (auto b : g.neighbourhood(a))
                CHECK(g.adjacent(b, a));
        }
    }

    auto degree_sequence(const Graph & g) -> std::vector<unsigned>
    {
        std::vector<unsigned> d;
        for (Vertex v = 0; v < g.order(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }
}

TEST_SUITE("graph")
{
    TEST_CASE("vertex sets iterate in ascending order")
    {
        auto s = VertexSet::of({5, 0, 3});
        CHECK(s.to_vector() == std::vector<Vertex>{0, 3, 5});
        CHECK(s.size() == 3);
        CHECK(to_string(s) == "{0,3,5}");
        CHECK((s - VertexSet::singleton(3)) == VertexSet::of({0, 5}));
        CHECK(VertexSet::full(64).size() == 64);
    }

    TEST_CASE("cycles")
    {
        auto c3 = build_cycle(3);
        CHECK(c3.order() == 3);
        for (Vertex v = 0; v < 3; ++v)
            CHECK(c3.degree(v) == 2);

        auto c8 = build_cycle(8);
        CHECK(c8.neighbourhood(c8.landmark("u1")) == VertexSet::of({c8.landmark("u2"), c8.landmark("u8")}));

        auto c14 = build_cycle(14);
        CHECK(c14.order() == 14);
        CHECK(test_support::count_edges(c14) == 14);

        CHECK(error_kind([] { build_cycle(2); }) == GraphErrorKind::InvalidOrder);
    }

    TEST_CASE("paths")
    {
        auto p2 = build_path(2);
        CHECK(p2.order() == 2);
        CHECK(test_support::count_edges(p2) == 1);
        auto p7 = build_path(7);
        CHECK(test_support::count_edges(p7) == 6);
        CHECK(p7.degree(p7.landmark("u1")) == 1);
        CHECK(p7.degree(p7.landmark("u7")) == 1);
        CHECK(error_kind([] { build_path(1); }) == GraphErrorKind::InvalidOrder);
    }

    TEST_CASE("G_{n,d,m}")
    {
        auto g = build_gndm(14, 4, 4);
        CHECK(g.order() == 18);
        CHECK(g.distance(g.landmark("u1"), g.landmark("u2")).value() == 2);

        // Edge-for-edge against the written description of G_{n,m}: cycle u1..u14,
        // K_4 on w1 w2 v1 v2, and u1, u5 joined to w1, w2.
        std::vector<Edge> expected;
        for (Vertex i = 0; i < 14; ++i)
            expected.emplace_back(std::min(i, (i + 1) % 14), std::max(i, (i + 1) % 14));
        for (Vertex a = 14; a < 18; ++a)
            for (Vertex b = a + 1; b < 18; ++b)
                expected.emplace_back(a, b);
        expected.insert(expected.end(), {{0, 14}, {0, 15}, {4, 14}, {4, 15}});
        std::sort(expected.begin(), expected.end());
        CHECK(g.edges() == expected);

        auto g8 = build_gndm(8, 4, 4);
        CHECK(g8.order() == 12);
        CHECK(test_support::adjacency(g8)[g8.landmark("w1")] != 0);
        unsigned w1_degree = 0;
        for (Vertex v = 0; v < g8.order(); ++v)
            w1_degree += g8.adjacent(g8.landmark("w1"), v) ? 1 : 0;
        CHECK(w1_degree == 5);

        auto g1 = build_gndm(8, 1, 4);
        CHECK(g1.adjacent(g1.landmark("u1"), g1.landmark("u2")));

        CHECK(error_kind([] { build_gndm(8, 5, 4); }) == GraphErrorKind::InvalidDistance);
        CHECK(error_kind([] { build_gndm(8, 0, 4); }) == GraphErrorKind::InvalidDistance);
        CHECK(error_kind([] { build_gndm(8, 2, 2); }) == GraphErrorKind::InvalidOrder);
    }

    TEST_CASE("H_m")
    {
        auto h4 = build_hm(4);
        CHECK(h4.order() == 6);
        CHECK(h4.degree(h4.landmark("u1")) == 2);
        CHECK_FALSE(h4.adjacent(h4.landmark("u1"), h4.landmark("u5")));

        // C(5,2) clique edges plus four attachment edges, by enumeration.
        auto h5 = build_hm(5);
        CHECK(h5.order() == 7);
        CHECK(test_support::count_edges(h5) == 14);
        CHECK(error_kind([] { build_hm(2); }) == GraphErrorKind::InvalidOrder);
    }

    TEST_CASE("tilde G_{n,m}")
    {
        auto t8 = build_tilde(8, 3);
        CHECK(t8.order() == 11);
        CHECK_FALSE(remove_vertex(t8, t8.landmark("w")).graph.connected());

        auto t84 = build_tilde(8, 4);
        CHECK(t84.degree(t84.landmark("w")) == 4);

        auto t14 = build_tilde(14, 3);
        CHECK(t14.order() == 17);
        CHECK(test_support::count_edges(t14) == 14 + 3 + 1);
    }

    TEST_CASE("K_{k+2} with leaves")
    {
        auto k1 = build_k_leaves(1);
        CHECK(k1.order() == 4);
        CHECK(test_support::count_edges(k1) == 4);

        auto k3 = build_k_leaves(3);
        CHECK(k3.order() == 8);
        CHECK(k3.degree(k3.landmark("u")) == 4);

        auto k2 = build_k_leaves(2);
        CHECK(k2.degree(k2.landmark("y1")) == 1);
        CHECK(k2.degree(k2.landmark("y2")) == 1);
        CHECK(error_kind([] { build_k_leaves(0); }) == GraphErrorKind::InvalidOrder);
    }

    TEST_CASE("Z_k")
    {
        auto z0 = build_zk(0);
        CHECK(z0.order() == 14);
        CHECK(test_support::count_edges(z0) == 18);
        // Degree sequence of the drawing: a1 2, a2 3, a3 4, z 4, a5 2, a6 3,
        // a7 3, a8 3, a9 3, x 4, l1 1, l2 1, u 2, v 1.
        CHECK(degree_sequence(z0) == std::vector<unsigned>{1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4});

        for (unsigned k = 0; k <= 3; ++k) {
            auto g = build_zk(k);
            CHECK(g.order() == 14 + 5 * k);
            CHECK(test_support::count_edges(g) == 18 + 5 * k);
            check_simple(g);
        }
        auto z1 = build_zk(1);
        CHECK(z1.degree(z1.landmark("x")) == 5);
        CHECK(build_zk(3).order() == 29);

        auto core = build_z_core();
        CHECK(core.order() == 9);
        CHECK(core.has_landmark("z"));
        CHECK_FALSE(core.has_landmark("x"));
    }

    TEST_CASE("attach_complete")
    {
        auto c14 = build_cycle(14);
        auto g = attach_complete(c14, 0, 4, 4);
        CHECK(g.edges() == build_gndm(14, 4, 4).edges());

        auto p4 = build_path(4);
        CHECK(attach_complete(p4, 0, 3, 3).order() == 7);
        CHECK(attach_complete(build_path(5), 0, 4, 3).order() == 8);

        auto c8 = build_cycle(8);
        CHECK(attach_complete(c8, 0, 2, 4).edges() == build_gndm(8, 2, 4).edges());
        CHECK(error_kind([&] { attach_complete(c8, 1, 1, 4); }) == GraphErrorKind::InvalidLandmarks);
    }

    TEST_CASE("join_universal")
    {
        auto k3 = join_universal(build_complete(2));
        CHECK(k3.edges() == build_complete(3).edges());

        auto wheel = join_universal(build_cycle(5));
        CHECK(wheel.degree(wheel.landmark("v")) == 5);
        CHECK(wheel.order() == 6);
    }

    TEST_CASE("remove_vertex")
    {
        auto c4 = build_cycle(4);
        for (Vertex v = 0; v < 4; ++v) {
            auto p = remove_vertex(c4, v).graph;
            CHECK(p.order() == 3);
            CHECK(degree_sequence(p) == std::vector<unsigned>{1, 1, 2});
        }

        auto k3 = build_k_leaves(3);
        auto removal = remove_vertex(k3, k3.landmark("v"));
        CHECK(removal.graph.order() == 7);
        for (unsigned i = 1; i <= 3; ++i)
            CHECK(removal.graph.adjacent(removal.graph.landmark("x" + std::to_string(i)), removal.graph.landmark("y" + std::to_string(i))));
        CHECK_FALSE(removal.graph.has_landmark("v"));

        // The index map preserves adjacency among the survivors.
        for (Vertex a = 0; a < k3.order(); ++a)
            for (Vertex b = 0; b < k3.order(); ++b) {
                auto na = removal.old_to_new[a], nb = removal.old_to_new[b];
                if (na && nb)
                    CHECK(k3.adjacent(a, b) == removal.graph.adjacent(*na, *nb));
            }

        auto p3 = build_path(3);
        CHECK(remove_vertex(p3, 0).graph.edges() == build_path(2).edges());
        CHECK(error_kind([&] { remove_vertex(p3, 1); }) == GraphErrorKind::IsolatedVertex);
        CHECK(error_kind([&] { remove_vertex(p3, 7); }) == GraphErrorKind::InvalidVertex);
    }

    TEST_CASE("edge-list text")
    {
        auto tri = parse_graph("3\n0 1\n1 2\n2 0");
        CHECK(tri.edges() == build_complete(3).edges());

        auto text = "# a comment\n4\n3 2\n\n0 1\n1 2\n#landmark tip 3\n";
        auto g = parse_graph(text);
        auto canonical = serialize_graph(g);
        CHECK(canonical == "4\n0 1\n1 2\n2 3\n#landmark tip 3\n");
        CHECK(serialize_graph(parse_graph(canonical)) == canonical);
        CHECK(parse_graph(canonical) == g);

        auto z = build_zk(1);
        CHECK(parse_graph(serialize_graph(z)) == z);

        CHECK(error_kind([] { parse_graph("2\n0 0"); }) == GraphErrorKind::Loop);
        CHECK(error_kind([] { parse_graph("2\n0 1\n1 0"); }) == GraphErrorKind::DuplicateEdge);
        CHECK(error_kind([] { parse_graph("3\n0 1"); }) == GraphErrorKind::IsolatedVertex);
        CHECK(error_kind([] { parse_graph("3\n0 x"); }) == GraphErrorKind::Malformed);
        CHECK(error_kind([] { parse_graph("0"); }) == GraphErrorKind::InvalidOrder);
    }

    TEST_CASE("family strings")
    {
        CHECK(parse_family("cycle:n=14") == build_cycle(14));
        CHECK(parse_family("gndm:n=14,d=4,m=4") == build_gndm(14, 4, 4));
        CHECK(parse_family("hm:m=5") == build_hm(5));
        CHECK(parse_family("tilde:n=8,m=3") == build_tilde(8, 3));
        CHECK(parse_family("kleaves:k=3") == build_k_leaves(3));
        CHECK(parse_family("zk:k=1") == build_zk(1));
        CHECK(parse_family("zcore") == build_z_core());
        CHECK(parse_family("join:path:n=6") == join_universal(build_path(6)));
        CHECK(error_kind([] { parse_family("star:n=4"); }) == GraphErrorKind::Malformed);
        CHECK_THROWS(parse_family("cycle:m=4"));
    }

    TEST_CASE("every family constructor yields a simple graph without isolated vertices")
    {
        for (unsigned n = 3; n <= 20; ++n) {
            check_simple(build_cycle(n));
            check_simple(build_path(n));
            check_simple(build_complete(n));
            for (unsigned m = 3; m <= 6; ++m) {
                check_simple(build_tilde(n, m));
                for (unsigned d = 1; d <= n / 2; ++d)
                    check_simple(build_gndm(n, d, m));
            }
        }
        for (unsigned m = 3; m <= 8; ++m)
            check_simple(build_hm(m));
        for (unsigned k = 1; k <= 6; ++k)
            check_simple(build_k_leaves(k));
    }
}
