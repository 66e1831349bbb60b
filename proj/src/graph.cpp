#include "tdg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace tdg
{
    namespace
    {
        auto fail(GraphErrorKind kind, const std::string & what) -> GraphError { return GraphError{kind, what}; }

        void add_cycle_edges(std::vector<Edge> & edges, unsigned n)
        {
            for (Vertex i = 0; i < n; ++i)
                edges.emplace_back(i, (i + 1) % n);
        }

        void add_clique_edges(std::vector<Edge> & edges, Vertex first, unsigned count)
        {
            for (Vertex i = 0; i < count; ++i)
                for (Vertex j = i + 1; j < count; ++j)
                    edges.emplace_back(first + i, first + j);
        }

        auto numbered(std::string_view prefix, unsigned i) -> std::string { return std::string{prefix} + std::to_string(i); }

        auto parse_unsigned(std::string_view s) -> std::optional<unsigned>
        {
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
                return std::nullopt;
            return value;
        }

        auto trim(std::string_view s) -> std::string_view
        {
            auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        auto split_ws(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> out;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                auto start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                    ++i;
                if (i > start)
                    out.push_back(line.substr(start, i - start));
            }
            return out;
        }

        /// "n=14,d=4,m=4" -> {n: 14, d: 4, m: 4}
        auto parse_params(std::string_view family, std::string_view body) -> std::map<std::string, unsigned, std::less<>>
        {
            std::map<std::string, unsigned, std::less<>> out;
            while (! body.empty()) {
                auto comma = body.find(',');
                auto item = trim(body.substr(0, comma));
                body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
                auto eq = item.find('=');
                auto value = eq == std::string_view::npos ? std::nullopt : parse_unsigned(trim(item.substr(eq + 1)));
                if (! value)
                    throw fail(GraphErrorKind::Malformed, "bad parameter '" + std::string{item} + "' for family " + std::string{family});
                out.emplace(std::string{trim(item.substr(0, eq))}, *value);
            }
            return out;
        }

        auto param(const std::map<std::string, unsigned, std::less<>> & params, std::string_view family, std::string_view name) -> unsigned
        {
            auto it = params.find(name);
            if (it == params.end())
                throw fail(GraphErrorKind::Malformed, "family " + std::string{family} + " needs parameter " + std::string{name});
            return it->second;
        }
    }

    auto to_string(VertexSet s) -> std::string
    {
        std::string out = "{";
        bool first = true;
        for (auto v : s) {
            if (! first)
                out += ',';
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

    auto to_string(GraphErrorKind kind) -> std::string_view
    {
        switch (kind) {
        case GraphErrorKind::InvalidOrder: return "invalid-order";
        case GraphErrorKind::InvalidDistance: return "invalid-distance";
        case GraphErrorKind::InvalidLandmarks: return "invalid-landmarks";
        case GraphErrorKind::InvalidVertex: return "invalid-vertex";
        case GraphErrorKind::IsolatedVertex: return "isolated-vertex";
        case GraphErrorKind::Loop: return "loop";
        case GraphErrorKind::DuplicateEdge: return "duplicate-edge";
        case GraphErrorKind::Malformed: return "malformed";
        }
        return "unknown";
    }

    GraphError::GraphError(GraphErrorKind kind, const std::string & what) :
        std::runtime_error(std::string{to_string(kind)} + ": " + what),
        kind_(kind)
    {
    }

    auto Graph::from_edges(unsigned order, const std::vector<Edge> & edges, Landmarks landmarks) -> Graph
    {
        if (order == 0 || order > max_order)
            throw fail(GraphErrorKind::InvalidOrder, "order " + std::to_string(order) + " outside 1.." + std::to_string(max_order));

        Graph g;
        g.neighbourhoods_.assign(order, VertexSet{});
        for (auto [a, b] : edges) {
            if (a >= order || b >= order)
                throw fail(GraphErrorKind::InvalidVertex, "edge " + std::to_string(a) + " " + std::to_string(b) + " out of range");
            if (a == b)
                throw fail(GraphErrorKind::Loop, "loop at vertex " + std::to_string(a));
            if (g.neighbourhoods_[a].contains(b))
                throw fail(GraphErrorKind::DuplicateEdge, "edge " + std::to_string(a) + " " + std::to_string(b) + " given twice");
            g.neighbourhoods_[a].insert(b);
            g.neighbourhoods_[b].insert(a);
        }
        for (Vertex v = 0; v < order; ++v)
            if (g.neighbourhoods_[v].empty())
                throw fail(GraphErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " has no neighbour");
        for (auto & [name, v] : landmarks)
            if (v >= order || name.empty())
                throw fail(GraphErrorKind::InvalidLandmarks, "landmark '" + name + "' -> " + std::to_string(v));
        g.landmarks_ = std::move(landmarks);
        return g;
    }

    auto Graph::edge_count() const noexcept -> unsigned
    {
        unsigned twice = 0;
        for (auto n : neighbourhoods_)
            twice += n.size();
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (Vertex a = 0; a < order(); ++a)
            for (auto b : neighbourhoods_[a])
                if (a < b)
                    out.emplace_back(a, b);
        return out;
    }

    auto Graph::landmark(std::string_view name) const -> Vertex
    {
        auto it = landmarks_.find(name);
        if (it == landmarks_.end())
            throw fail(GraphErrorKind::InvalidLandmarks, "no landmark named '" + std::string{name} + "'");
        return it->second;
    }

    auto Graph::resolve(std::string_view ref) const -> Vertex
    {
        ref = trim(ref);
        if (auto it = landmarks_.find(ref); it != landmarks_.end())
            return it->second;
        if (auto idx = parse_unsigned(ref)) {
            if (*idx >= order())
                throw fail(GraphErrorKind::InvalidVertex, "vertex " + std::string{ref} + " out of range");
            return *idx;
        }
        throw fail(GraphErrorKind::InvalidLandmarks, "unknown vertex reference '" + std::string{ref} + "'");
    }

    auto Graph::resolve_set(const std::vector<std::string> & refs) const -> VertexSet
    {
        VertexSet out;
        for (auto & r : refs)
            out.insert(resolve(r));
        return out;
    }

    auto Graph::distance(Vertex a, Vertex b) const -> std::optional<unsigned>
    {
        std::vector<int> dist(order(), -1);
        std::queue<Vertex> queue;
        dist.at(a) = 0;
        queue.push(a);
        while (! queue.empty()) {
            auto x = queue.front();
            queue.pop();
            if (x == b)
                return static_cast<unsigned>(dist[x]);
            for (auto y : neighbourhoods_[x])
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push(y);
                }
        }
        return std::nullopt;
    }

    auto Graph::connected() const -> bool
    {
        VertexSet seen = VertexSet::singleton(0), frontier = seen;
        while (! frontier.empty()) {
            VertexSet next;
            for (auto v : frontier)
                next |= neighbourhoods_[v];
            frontier = next - seen;
            seen |= next;
        }
        return seen == vertices();
    }

    auto build_cycle(unsigned n) -> Graph
    {
        if (n < 3)
            throw fail(GraphErrorKind::InvalidOrder, "cycle needs n >= 3");
        std::vector<Edge> edges;
        add_cycle_edges(edges, n);
        Landmarks lm;
        for (unsigned i = 0; i < n; ++i)
            lm.emplace(numbered("u", i + 1), i);
        return Graph::from_edges(n, edges, std::move(lm));
    }

    auto build_path(unsigned n) -> Graph
    {
        if (n < 2)
            throw fail(GraphErrorKind::InvalidOrder, "path needs n >= 2");
        std::vector<Edge> edges;
        for (Vertex i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        Landmarks lm;
        for (unsigned i = 0; i < n; ++i)
            lm.emplace(numbered("u", i + 1), i);
        return Graph::from_edges(n, edges, std::move(lm));
    }

    auto build_complete(unsigned n) -> Graph
    {
        if (n < 2)
            throw fail(GraphErrorKind::InvalidOrder, "complete graph needs n >= 2");
        std::vector<Edge> edges;
        add_clique_edges(edges, 0, n);
        return Graph::from_edges(n, edges);
    }

    auto build_gndm(unsigned n, unsigned d, unsigned m) -> Graph
    {
        if (n < 3)
            throw fail(GraphErrorKind::InvalidOrder, "cycle needs n >= 3");
        if (m < 3)
            throw fail(GraphErrorKind::InvalidOrder, "clique needs m >= 3");
        if (d < 1 || d > n / 2)
            throw fail(GraphErrorKind::InvalidDistance, "distance " + std::to_string(d) + " outside 1.." + std::to_string(n / 2));

        std::vector<Edge> edges;
        add_cycle_edges(edges, n);
        Landmarks lm;
        for (unsigned i = 0; i < n; ++i)
            lm.emplace(numbered("c", i + 1), i);
        auto cycle = Graph::from_edges(n, edges, std::move(lm));
        return attach_complete(cycle, 0, d, m);
    }

    auto build_hm(unsigned m) -> Graph
    {
        if (m < 3)
            throw fail(GraphErrorKind::InvalidOrder, "clique needs m >= 3");
        const Vertex u1 = 0, u5 = 1, w1 = 2, w2 = 3;
        std::vector<Edge> edges{{u1, w1}, {u1, w2}, {u5, w1}, {u5, w2}};
        add_clique_edges(edges, w1, m);
        Landmarks lm{{"u1", u1}, {"u5", u5}, {"w1", w1}, {"w2", w2}};
        for (unsigned i = 0; i + 2 < m; ++i)
            lm.emplace(numbered("v", i + 1), 4 + i);
        return Graph::from_edges(m + 2, edges, std::move(lm));
    }

    auto build_tilde(unsigned n, unsigned m) -> Graph
    {
        if (n < 3)
            throw fail(GraphErrorKind::InvalidOrder, "cycle needs n >= 3");
        if (m < 3)
            throw fail(GraphErrorKind::InvalidOrder, "clique needs m >= 3");
        std::vector<Edge> edges;
        add_cycle_edges(edges, n);
        add_clique_edges(edges, n, m);
        edges.emplace_back(0, n);
        Landmarks lm;
        for (unsigned i = 0; i < n; ++i)
            lm.emplace(numbered("u", i + 1), i);
        lm.emplace("w", n);
        for (unsigned i = 0; i + 1 < m; ++i)
            lm.emplace(numbered("v", i + 1), n + 1 + i);
        return Graph::from_edges(n + m, edges, std::move(lm));
    }

    auto build_k_leaves(unsigned k) -> Graph
    {
        if (k < 1)
            throw fail(GraphErrorKind::InvalidOrder, "k_leaves needs k >= 1");
        std::vector<Edge> edges;
        add_clique_edges(edges, 0, k + 2);
        Landmarks lm{{"u", 0}, {"v", 1}};
        for (unsigned i = 0; i < k; ++i) {
            edges.emplace_back(2 + i, k + 2 + i);
            lm.emplace(numbered("x", i + 1), 2 + i);
            lm.emplace(numbered("y", i + 1), k + 2 + i);
        }
        return Graph::from_edges(2 * k + 2, edges, std::move(lm));
    }

    namespace
    {
        // a1 a2 a3 z a5 a6 a7 a8 a9 x l1 l2 u v
        enum Z0 : Vertex { a1, a2, a3, z, a5, a6, a7, a8, a9, x, l1, l2, u, v, z0_order };

        const std::vector<Edge> z0_edges{
            {a1, a2}, {a2, a3}, {a3, z}, {z, a8}, {a8, a7}, {a7, a6}, {a6, a5}, {a5, a1},
            {a2, a6}, {a3, a7}, {a9, a3}, {a9, z}, {a9, a8},
            {z, x}, {x, l1}, {x, l2}, {x, u}, {u, v}};
    }

    auto build_zk(unsigned k) -> Graph
    {
        auto edges = z0_edges;
        Landmarks lm{{"a1", a1}, {"a2", a2}, {"a3", a3}, {"z", z}, {"a5", a5}, {"a6", a6}, {"a7", a7},
            {"a8", a8}, {"a9", a9}, {"x", x}, {"l1", l1}, {"l2", l2}, {"u", u}, {"v", v}};
        Vertex next = z0_order;
        for (unsigned copy = 1; copy <= k; ++copy) {
            Vertex prev = x;
            for (unsigned j = 1; j <= 5; ++j) {
                edges.emplace_back(prev, next);
                lm.emplace("p" + std::to_string(copy) + "_" + std::to_string(j), next);
                prev = next++;
            }
        }
        return Graph::from_edges(next, edges, std::move(lm));
    }

    auto build_z_core() -> Graph
    {
        auto z0 = build_zk(0);
        // remove leaves before their supports so no step isolates a vertex
        auto g = z0;
        for (auto name : {"v", "l1", "l2", "u", "x"})
            g = remove_vertex(g, g.landmark(name)).graph;
        return g;
    }

    auto attach_complete(const Graph & h, Vertex a, Vertex b, unsigned m) -> Graph
    {
        if (a >= h.order() || b >= h.order())
            throw fail(GraphErrorKind::InvalidVertex, "attachment vertex out of range");
        if (a == b)
            throw fail(GraphErrorKind::InvalidLandmarks, "attachment vertices must differ");
        if (m < 3)
            throw fail(GraphErrorKind::InvalidOrder, "clique needs m >= 3");

        const Vertex w1 = h.order(), w2 = h.order() + 1;
        auto edges = h.edges();
        add_clique_edges(edges, w1, m);
        edges.insert(edges.end(), {{a, w1}, {a, w2}, {b, w1}, {b, w2}});

        Landmarks lm;
        for (auto & [name, idx] : h.landmarks())
            lm.emplace(name, idx);
        lm["u1"] = a;
        lm["u2"] = b;
        lm["w1"] = w1;
        lm["w2"] = w2;
        for (unsigned i = 0; i + 2 < m; ++i)
            lm[numbered("v", i + 1)] = w1 + 2 + i;
        return Graph::from_edges(h.order() + m, edges, std::move(lm));
    }

    auto join_universal(const Graph & h) -> Graph
    {
        const Vertex hub = h.order();
        auto edges = h.edges();
        for (Vertex i = 0; i < hub; ++i)
            edges.emplace_back(i, hub);
        auto lm = h.landmarks();
        lm["v"] = hub;
        return Graph::from_edges(hub + 1, edges, std::move(lm));
    }

    auto remove_vertex(const Graph & g, Vertex v) -> VertexRemoval
    {
        if (v >= g.order())
            throw fail(GraphErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
        for (auto w : g.neighbourhood(v))
            if (g.degree(w) == 1)
                throw fail(GraphErrorKind::IsolatedVertex, "removing " + std::to_string(v) + " isolates " + std::to_string(w));

        std::vector<std::optional<Vertex>> old_to_new(g.order());
        Vertex next = 0;
        for (Vertex i = 0; i < g.order(); ++i)
            if (i != v)
                old_to_new[i] = next++;

        std::vector<Edge> edges;
        for (auto [a, b] : g.edges())
            if (a != v && b != v)
                edges.emplace_back(*old_to_new[a], *old_to_new[b]);

        Landmarks lm;
        for (auto & [name, idx] : g.landmarks())
            if (idx != v)
                lm.emplace(name, *old_to_new[idx]);

        return VertexRemoval{Graph::from_edges(next, edges, std::move(lm)), std::move(old_to_new)};
    }

    auto parse_graph(std::string_view text) -> Graph
    {
        std::optional<unsigned> order;
        std::vector<Edge> edges;
        Landmarks lm;
        unsigned line_no = 0;

        while (! text.empty()) {
            auto nl = text.find('\n');
            auto line = trim(text.substr(0, nl));
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;
            if (line.empty())
                continue;

            auto where = "line " + std::to_string(line_no);
            auto tokens = split_ws(line);
            if (line.front() == '#') {
                if (tokens.front() == "#landmark") {
                    std::optional<unsigned> idx = tokens.size() == 3 ? parse_unsigned(tokens[2]) : std::nullopt;
                    if (! idx)
                        throw fail(GraphErrorKind::Malformed, where + ": expected '#landmark name index'");
                    if (! lm.emplace(std::string{tokens[1]}, *idx).second)
                        throw fail(GraphErrorKind::InvalidLandmarks, where + ": landmark given twice");
                }
                continue;
            }

            if (! order) {
                order = tokens.size() == 1 ? parse_unsigned(tokens[0]) : std::nullopt;
                if (! order)
                    throw fail(GraphErrorKind::Malformed, where + ": expected vertex count");
                continue;
            }

            auto a = tokens.size() == 2 ? parse_unsigned(tokens[0]) : std::nullopt;
            auto b = tokens.size() == 2 ? parse_unsigned(tokens[1]) : std::nullopt;
            if (! a || ! b)
                throw fail(GraphErrorKind::Malformed, where + ": expected 'i j'");
            edges.emplace_back(*a, *b);
        }

        if (! order)
            throw fail(GraphErrorKind::Malformed, "missing vertex count");
        return Graph::from_edges(*order, edges, std::move(lm));
    }

    auto serialize_graph(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << g.order() << '\n';
        for (auto [a, b] : g.edges())
            out << a << ' ' << b << '\n';
        for (auto & [name, idx] : g.landmarks())
            out << "#landmark " << name << ' ' << idx << '\n';
        return out.str();
    }

    auto read_graph_file(const std::string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw fail(GraphErrorKind::Malformed, "cannot read graph file '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_graph(buf.str());
    }

    auto parse_family(std::string_view spec) -> Graph
    {
        spec = trim(spec);
        auto colon = spec.find(':');
        auto family = spec.substr(0, colon);
        auto body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

        if (family == "file")
            return read_graph_file(std::string{body});
        if (family == "join") {
            auto inner = trim(body);
            static const std::set<std::string_view> known{
                "cycle", "path", "complete", "gndm", "hm", "tilde", "kleaves", "zk", "zcore", "join", "file"};
            auto head = inner.substr(0, inner.find(':'));
            return join_universal(known.contains(head) ? parse_family(inner) : read_graph_file(std::string{inner}));
        }
        if (family == "zcore")
            return build_z_core();

        auto params = parse_params(family, body);
        auto get = [&](std::string_view name) { return param(params, family, name); };
        if (family == "cycle")
            return build_cycle(get("n"));
        if (family == "path")
            return build_path(get("n"));
        if (family == "complete")
            return build_complete(get("n"));
        if (family == "gndm")
            return build_gndm(get("n"), get("d"), get("m"));
        if (family == "hm")
            return build_hm(get("m"));
        if (family == "tilde")
            return build_tilde(get("n"), get("m"));
        if (family == "kleaves")
            return build_k_leaves(get("k"));
        if (family == "zk")
            return build_zk(get("k"));
        throw fail(GraphErrorKind::Malformed, "unknown graph family '" + std::string{family} + "'");
    }
}
