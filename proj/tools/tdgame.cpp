// tdgame: exact values of the total domination game and its variants.
//
// Exit status: 0 success, 1 a verified claim failed, 2 usage error,
// 3 resource budget exhausted.

#include "tdg/graph.hpp"
#include "tdg/solver.hpp"
#include "tdg/strategies.hpp"
#include "tdg/sweep.hpp"
#include "tdg/variant.hpp"
#include "tdg/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_claim_failed = 1,
        exit_usage = 2,
        exit_resource = 3
    };

    struct Common
    {
        std::string graph;
        std::string variant = "d";
        std::string format = "json";
        unsigned threads = 1;
        std::uint64_t max_nodes = 0;
        std::uint64_t max_table = 0;
        bool alpha_beta = false;

        auto options() const -> tdg::SolveOptions
        {
            auto o = tdg::SolveOptions::from_environment();
            if (max_nodes)
                o.max_nodes = max_nodes;
            if (max_table)
                o.max_table = max_table;
            o.threads = threads;
            o.alpha_beta = alpha_beta;
            return o;
        }
    };

    void add_limits(CLI::App * cmd, Common & c)
    {
        cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1U, 256U));
        cmd->add_option("--max-nodes", c.max_nodes, "Node budget (default: TDG_MAX_NODES or 4e9)");
        cmd->add_option("--max-table", c.max_table, "Transposition-table entry budget (default: TDG_MAX_TABLE or 4e7)");
    }

    auto format_option(CLI::App * cmd, Common & c, std::vector<std::string> allowed) -> CLI::Option *
    {
        return cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
    }

    auto run_solve(const Common & c, bool line) -> int
    {
        auto g = tdg::parse_family(c.graph);
        auto spec = tdg::parse_variant(c.variant, g);
        tdg::Solver solver(g, spec, c.options());
        auto r = solver.solve();
        if (c.format == "json") {
            auto j = tdg::to_json(r);
            if (line)
                j["line"] = tdg::to_json(solver.best_line());
            std::cout << j.dump() << '\n';
        }
        else if (c.format == "csv") {
            std::cout << "graph,variant,value,first_moves,nodes,table_entries,millis\n";
            std::string moves;
            for (auto v : r.first_moves)
                moves += (moves.empty() ? "" : " ") + std::to_string(v);
            if (r.pass_optimal)
                moves += moves.empty() ? "pass" : " pass";
            std::cout << '"' << c.graph << "\",\"" << spec.label << "\"," << r.value << ',' << moves << ',' << r.stats.nodes_expanded << ','
                      << r.stats.table_entries << ',' << r.stats.elapsed.count() << '\n';
        }
        else {
            std::cout << "value " << r.value << "\nfirst moves " << tdg::to_string(r.first_moves) << (r.pass_optimal ? " + pass" : "") << '\n'
                      << "nodes " << r.stats.nodes_expanded << ", table entries " << r.stats.table_entries << ", " << r.stats.elapsed.count()
                      << " ms\n";
        }
        return exit_ok;
    }

    auto run_family(const Common & c) -> int
    {
        auto g = tdg::parse_family(c.graph);
        if (c.format == "json") {
            nlohmann::ordered_json j;
            j["order"] = g.order();
            auto edges = nlohmann::ordered_json::array();
            for (auto [a, b] : g.edges())
                edges.push_back({a, b});
            j["edges"] = std::move(edges);
            nlohmann::ordered_json lm = nlohmann::ordered_json::object();
            for (auto & [name, v] : g.landmarks())
                lm[name] = v;
            j["landmarks"] = std::move(lm);
            std::cout << j.dump() << '\n';
        }
        else
            std::cout << tdg::serialize_graph(g);
        return exit_ok;
    }

    auto run_match(const Common & c, const std::string & dominator, const std::string & staller) -> int
    {
        auto g = tdg::parse_family(c.graph);
        auto spec = tdg::parse_variant(c.variant, g);
        auto m = tdg::play_match(g, spec, tdg::parse_policy(dominator), tdg::parse_policy(staller), c.options());
        std::cout << tdg::to_json(m).dump() << '\n';
        return exit_ok;
    }

    auto run_verify(const Common & c, const std::string & profile, std::uint64_t seed, const std::vector<std::string> & only, bool timing) -> int
    {
        tdg::VerifyConfig config;
        config.profile = tdg::parse_profile(profile);
        config.seed = seed;
        config.threads = c.threads;
        config.solve = c.options();
        config.solve.threads = 1;
        auto bundle = only.empty() ? tdg::run_all(config) : tdg::run_suites(only, config);

        if (c.format == "json")
            std::cout << tdg::to_json(bundle, timing).dump(2) << '\n';
        else if (c.format == "csv")
            std::cout << tdg::to_csv(bundle, timing);
        else
            std::cout << tdg::summary(bundle);
        if (c.format != "text")
            std::cerr << tdg::summary(bundle);
        return bundle.all_passed() ? exit_ok : exit_claim_failed;
    }

    auto run_sweep(const Common & c, const std::optional<std::string> & journal) -> int
    {
        tdg::SweepConfig config;
        config.pattern = c.graph;
        config.variant = c.variant;
        config.threads = c.threads;
        config.solve = c.options();
        config.journal = journal;
        auto rows = tdg::run_sweep(config);
        if (c.format == "csv")
            std::cout << tdg::to_csv(rows);
        else
            std::cout << tdg::to_json(rows).dump(2) << '\n';
        return exit_ok;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Exact solver for the total domination game and its variants"};
    app.require_subcommand(1);
    Common c;

    auto solve = app.add_subcommand("solve", "Game value and optimal first moves");
    solve->add_option("--graph", c.graph, "Family (cycle:n=8, gndm:n=14,d=4,m=4, ...) or file:<path>")->required();
    solve->add_option("--variant", c.variant, "Variant (d, s, d|S=u1,u5, spass:d, ss, delayed:m=2,S=.., sdp:k=1,l=3, ssp:u=u1,v=u5)");
    format_option(solve, c, {"json", "csv", "text"});
    solve->add_flag("--alpha-beta", c.alpha_beta, "Windowed search instead of plain minimax");
    bool line = false;
    solve->add_flag("--line", line, "Include one optimal play in JSON output");
    add_limits(solve, c);

    auto family = app.add_subcommand("family", "Print a graph family instance");
    family->add_option("--graph", c.graph, "Family or file:<path>")->required();
    auto * family_format = format_option(family, c, {"text", "json"});
    family_format->default_str("text");

    auto match = app.add_subcommand("match", "Play two policies against each other");
    match->add_option("--graph", c.graph, "Family or file:<path>")->required();
    match->add_option("--variant", c.variant, "Variant");
    std::string dominator = "optimal", staller = "optimal";
    match->add_option("--dominator", dominator, "optimal, d1 or first-legal");
    match->add_option("--staller", staller, "optimal, s1 or first-legal");
    add_limits(match, c);

    auto verify = app.add_subcommand("verify", "Check every encoded claim");
    std::string profile = "quick";
    std::uint64_t seed = tdg::default_seed;
    std::vector<std::string> only;
    bool no_timing = false;
    verify->add_option("--profile", profile, "quick or full");
    verify->add_option("--seed", seed, "Seed for random instances");
    verify->add_option("--suite", only, "Run only these suites");
    verify->add_flag("--no-timing", no_timing, "Omit timings so output is byte-reproducible");
    format_option(verify, c, {"json", "csv", "text"});
    add_limits(verify, c);

    auto sweep = app.add_subcommand("sweep", "Values over a parameter grid");
    sweep->add_option("--graph", c.graph, "Family pattern, e.g. gndm:n={8,14},d=1..n/2,m=4")->required();
    sweep->add_option("--variant", c.variant, "Variant");
    std::optional<std::string> journal;
    sweep->add_option("--journal", journal, "Resumable journal of finished rows");
    format_option(sweep, c, {"json", "csv"});
    add_limits(sweep, c);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve->parsed())
            return run_solve(c, line);
        if (family->parsed()) {
            if (family_format->count() == 0)
                c.format = "text";
            return run_family(c);
        }
        if (match->parsed())
            return run_match(c, dominator, staller);
        if (verify->parsed())
            return run_verify(c, profile, seed, only, ! no_timing);
        if (sweep->parsed())
            return run_sweep(c, journal);
    }
    catch (const tdg::ResourceError & e) {
        std::cerr << "resource limit: " << e.what() << " (nodes " << e.partial().nodes_expanded << ", table " << e.partial().table_entries
                  << ")\n";
        return exit_resource;
    }
    catch (const tdg::PolicyFault & e) {
        std::cerr << "policy fault (" << e.policy() << "): " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const tdg::GraphError & e) {
        std::cerr << "graph error (" << tdg::to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
