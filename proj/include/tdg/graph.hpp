#pragma once

#include "tdg/vertex_set.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdg
{
    enum class GraphErrorKind
    {
        InvalidOrder,
        InvalidDistance,
        InvalidLandmarks,
        InvalidVertex,
        IsolatedVertex,
        Loop,
        DuplicateEdge,
        Malformed
    };

    auto to_string(GraphErrorKind kind) -> std::string_view;

    class GraphError : public std::runtime_error
    {
    public:
        GraphError(GraphErrorKind kind, const std::string & what);
        auto kind() const noexcept -> GraphErrorKind { return kind_; }

    private:
        GraphErrorKind kind_;
    };

    using Edge = std::pair<Vertex, Vertex>;
    using Landmarks = std::map<std::string, Vertex, std::less<>>;

    /// An immutable simple undirected graph without isolated vertices, with
    /// optional named landmark vertices.
    class Graph
    {
    public:
        /// Validates symmetry-free input: rejects loops, duplicate edges,
        /// out-of-range endpoints, isolated vertices and bad landmarks.
        static auto from_edges(unsigned order, const std::vector<Edge> & edges, Landmarks landmarks = {}) -> Graph;

        auto order() const noexcept -> unsigned { return static_cast<unsigned>(neighbourhoods_.size()); }
        auto vertices() const noexcept -> VertexSet { return VertexSet::full(order()); }
        auto neighbourhood(Vertex v) const -> VertexSet { return neighbourhoods_.at(v); }
        auto neighbourhoods() const noexcept -> const std::vector<VertexSet> & { return neighbourhoods_; }
        auto degree(Vertex v) const -> unsigned { return neighbourhood(v).size(); }
        auto adjacent(Vertex a, Vertex b) const -> bool { return neighbourhood(a).contains(b); }
        auto edge_count() const noexcept -> unsigned;
        /// Edges (i, j) with i < j, lexicographically sorted.
        auto edges() const -> std::vector<Edge>;

        auto landmarks() const noexcept -> const Landmarks & { return landmarks_; }
        auto landmark(std::string_view name) const -> Vertex;
        auto has_landmark(std::string_view name) const -> bool { return landmarks_.find(name) != landmarks_.end(); }

        /// Accepts a landmark name or a decimal vertex index.
        auto resolve(std::string_view ref) const -> Vertex;
        auto resolve_set(const std::vector<std::string> & refs) const -> VertexSet;

        /// Breadth-first distance; nullopt when unreachable.
        auto distance(Vertex a, Vertex b) const -> std::optional<unsigned>;
        auto connected() const -> bool;

        auto operator==(const Graph &) const -> bool = default;

    private:
        Graph() = default;
        std::vector<VertexSet> neighbourhoods_;
        Landmarks landmarks_;
    };

    /// Result of deleting one vertex: the induced subgraph plus, for each old
    /// index, its new index (nullopt for the removed vertex).
    struct VertexRemoval
    {
        Graph graph;
        std::vector<std::optional<Vertex>> old_to_new;
    };

    /// Cycle u1 ... un on indices 0 .. n-1.
    auto build_cycle(unsigned n) -> Graph;
    /// Path u1 ... un on indices 0 .. n-1; u1 and un are the end-vertices.
    auto build_path(unsigned n) -> Graph;
    /// Complete graph on indices 0 .. n-1.
    auto build_complete(unsigned n) -> Graph;

    /// Cycle C_n (landmarks c1..cn) whose vertices c1 and c(1+d) are both
    /// joined to w1 and w2 of a K_m.  Layout: cycle, w1, w2, v1 .. v(m-2).
    auto build_gndm(unsigned n, unsigned d, unsigned m) -> Graph;

    /// K_m on {w1, w2, v1 .. v(m-2)} plus u1 and u5, each adjacent to exactly
    /// w1 and w2.  Layout: u1, u5, w1, w2, v1 ..
    auto build_hm(unsigned m) -> Graph;

    /// Cycle C_n plus K_m on {w, v1 .. v(m-1)} with the single bridge u1 w.
    auto build_tilde(unsigned n, unsigned m) -> Graph;

    /// K_(k+2) on {u, v, x1 .. xk} with a pendant leaf yi at each xi.
    /// Layout: u, v, x1 .. xk, y1 .. yk.
    auto build_k_leaves(unsigned k) -> Graph;

    /// The 14-vertex graph Z_0 followed by k pendant P_6 copies glued at x.
    ///
    /// Z_0 layout (indices 0..13): a1 a2 a3 z a5 a6 a7 a8 a9 x l1 l2 u v, where
    /// a1 a2 a3 z / a5 a6 a7 a8 form a 2x4 ladder (rungs a1a5, a2a6, a3a7, z a8),
    /// a9 is adjacent to a3, z, a8, and x carries leaves l1, l2 and the path x u v.
    /// The a9 decoding is read off the drawing and has no name of its own there.
    /// Copy i of P_6 adds p<i>_1 .. p<i>_5 with x p<i>_1 p<i>_2 ... p<i>_5.
    auto build_zk(unsigned k) -> Graph;

    /// Z = Z_0 minus {x, l1, l2, u, v}.
    auto build_z_core() -> Graph;

    /// G_{H,a,b,m}: H plus K_m on {w1, w2, v1 .. v(m-2)} and edges a w1, a w2,
    /// b w1, b w2.  Landmarks u1 -> a and u2 -> b; H's other landmarks carry over.
    auto attach_complete(const Graph & h, Vertex a, Vertex b, unsigned m) -> Graph;

    /// H plus a new vertex v adjacent to every vertex of H.
    auto join_universal(const Graph & h) -> Graph;

    /// Induced subgraph on V - {v}.  Throws IsolatedVertex if some remaining
    /// vertex loses its only neighbour.
    auto remove_vertex(const Graph & g, Vertex v) -> VertexRemoval;

    /// Edge-list text: "n", then "i j" per line, optional "#landmark name i".
    auto parse_graph(std::string_view text) -> Graph;
    auto serialize_graph(const Graph & g) -> std::string;
    auto read_graph_file(const std::string & path) -> Graph;

    /// Family DSL: "cycle:n=14", "path:n=7", "complete:n=4",
    /// "gndm:n=14,d=4,m=4", "hm:m=4", "tilde:n=14,m=3", "kleaves:k=3",
    /// "zk:k=1", "zcore", "join:<family or file>", "file:<path>".
    auto parse_family(std::string_view spec) -> Graph;
}
