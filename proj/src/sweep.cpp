#include "tdg/sweep.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace tdg
{
    namespace
    {
        using Bindings = std::vector<std::pair<std::string, long long>>;

        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        auto parse_int(std::string_view s) -> std::optional<long long>
        {
            s = trim(s);
            long long v = 0;
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || end != s.data() + s.size())
                return std::nullopt;
            return v;
        }

        /// Splits on commas outside braces.
        auto split_top(std::string_view s) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> out;
            int depth = 0;
            std::size_t start = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == '{')
                    ++depth;
                else if (s[i] == '}')
                    --depth;
                else if (s[i] == ',' && depth == 0) {
                    out.push_back(s.substr(start, i - start));
                    start = i + 1;
                }
            }
            if (depth != 0)
                throw SweepError{"unbalanced braces in '" + std::string{s} + "'"};
            out.push_back(s.substr(start));
            return out;
        }

        /// "7", "n", or "n/2", "n-1", "n+1", "n*2".
        auto evaluate(std::string_view term, const Bindings & bound) -> long long
        {
            term = trim(term);
            if (auto v = parse_int(term))
                return *v;
            auto op_at = term.find_first_of("+-*/");
            auto name = trim(term.substr(0, op_at));
            const long long * base = nullptr;
            for (auto & [k, v] : bound)
                if (k == name)
                    base = &v;
            if (! base)
                throw SweepError{"range end '" + std::string{term} + "' refers to no earlier parameter"};
            if (op_at == std::string_view::npos)
                return *base;
            auto rhs = parse_int(term.substr(op_at + 1));
            if (! rhs || (term[op_at] == '/' && *rhs == 0))
                throw SweepError{"bad range expression '" + std::string{term} + "'"};
            switch (term[op_at]) {
                case '+': return *base + *rhs;
                case '-': return *base - *rhs;
                case '*': return *base * *rhs;
                default: return *base / *rhs;
            }
        }

        auto values_of(std::string_view spec, const Bindings & bound) -> std::vector<long long>
        {
            spec = trim(spec);
            std::vector<long long> out;
            if (spec.size() >= 2 && spec.front() == '{' && spec.back() == '}') {
                std::string_view inner = spec.substr(1, spec.size() - 2);
                for (auto item : split_top(inner))
                    out.push_back(evaluate(item, bound));
                return out;
            }
            if (auto dots = spec.find(".."); dots != std::string_view::npos) {
                auto lo = evaluate(spec.substr(0, dots), bound);
                auto hi = evaluate(spec.substr(dots + 2), bound);
                for (auto v = lo; v <= hi; ++v)
                    out.push_back(v);
                return out;
            }
            out.push_back(evaluate(spec, bound));
            return out;
        }

        void expand(const std::string & family, const std::vector<std::pair<std::string, std::string>> & params, std::size_t at, Bindings & bound,
                    std::vector<std::string> & out)
        {
            if (at == params.size()) {
                std::string s = family;
                for (std::size_t i = 0; i < bound.size(); ++i)
                    s += (i == 0 ? ":" : ",") + bound[i].first + "=" + std::to_string(bound[i].second);
                out.push_back(std::move(s));
                return;
            }
            for (auto v : values_of(params[at].second, bound)) {
                bound.emplace_back(params[at].first, v);
                expand(family, params, at + 1, bound, out);
                bound.pop_back();
            }
        }

        auto row_key(const std::string & instance, const std::string & variant) -> std::string { return instance + '\x1f' + variant; }

        auto load_journal(const std::string & path) -> std::map<std::string, SweepRow>
        {
            std::map<std::string, SweepRow> done;
            std::ifstream in(path);
            std::string line;
            while (std::getline(in, line)) {
                if (trim(line).empty())
                    continue;
                try {
                    auto row = row_from_json(nlohmann::json::parse(line));
                    done[row_key(row.instance, row.variant)] = row;
                }
                catch (const nlohmann::json::exception &) {
                    // A torn last line from an interrupted run; the row is recomputed.
                }
            }
            return done;
        }

        auto solve_row(const std::string & instance, const std::string & variant, const SolveOptions & options) -> SweepRow
        {
            SweepRow row{instance, variant, "ok", std::nullopt, 0, 0, {}};
            try {
                auto g = parse_family(instance);
                auto spec = parse_variant(variant, g);
                auto r = solve(g, spec, options);
                row.value = r.value;
                row.nodes = r.stats.nodes_expanded;
                row.table_entries = r.stats.table_entries;
            }
            catch (const ResourceError & e) {
                row.status = "resource";
                row.nodes = e.partial().nodes_expanded;
                row.table_entries = e.partial().table_entries;
                row.detail = e.what();
            }
            catch (const std::exception & e) {
                row.status = "error";
                row.detail = e.what();
            }
            return row;
        }
    }

    auto expand_grid(std::string_view pattern) -> std::vector<std::string>
    {
        pattern = trim(pattern);
        auto colon = pattern.find(':');
        std::string family{trim(pattern.substr(0, colon))};
        if (family.empty())
            throw SweepError{"empty family pattern"};

        std::vector<std::pair<std::string, std::string>> params;
        if (colon != std::string_view::npos) {
            auto rest = pattern.substr(colon + 1);
            // Families that take a nested family or path are not gridded.
            if (family == "join" || family == "file")
                return {std::string{pattern}};
            for (auto part : split_top(rest)) {
                auto eq = part.find('=');
                if (eq == std::string_view::npos)
                    throw SweepError{"expected key=values in '" + std::string{part} + "'"};
                params.emplace_back(std::string{trim(part.substr(0, eq))}, std::string{trim(part.substr(eq + 1))});
            }
        }

        std::vector<std::string> out;
        Bindings bound;
        expand(family, params, 0, bound, out);
        return out;
    }

    auto to_json(const SweepRow & r) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["instance"] = r.instance;
        j["variant"] = r.variant;
        j["status"] = r.status;
        if (r.value)
            j["value"] = *r.value;
        else
            j["value"] = nullptr;
        j["nodes"] = r.nodes;
        j["table_entries"] = r.table_entries;
        j["detail"] = r.detail;
        return j;
    }

    auto row_from_json(const nlohmann::json & j) -> SweepRow
    {
        SweepRow r;
        r.instance = j.at("instance").get<std::string>();
        r.variant = j.at("variant").get<std::string>();
        r.status = j.at("status").get<std::string>();
        if (! j.at("value").is_null())
            r.value = j.at("value").get<unsigned>();
        r.nodes = j.at("nodes").get<std::uint64_t>();
        r.table_entries = j.at("table_entries").get<std::uint64_t>();
        r.detail = j.value("detail", "");
        return r;
    }

    auto run_sweep(const SweepConfig & config) -> std::vector<SweepRow>
    {
        auto instances = expand_grid(config.pattern);
        std::vector<SweepRow> rows(instances.size());
        std::vector<bool> have(instances.size(), false);

        std::map<std::string, SweepRow> done;
        if (config.journal)
            done = load_journal(*config.journal);
        for (std::size_t i = 0; i < instances.size(); ++i)
            if (auto it = done.find(row_key(instances[i], config.variant)); it != done.end()) {
                rows[i] = it->second;
                have[i] = true;
            }

        std::ofstream journal;
        if (config.journal) {
            journal.open(*config.journal, std::ios::app);
            if (! journal)
                throw SweepError{"cannot open journal '" + *config.journal + "'"};
        }
        std::mutex journal_mutex;

        auto options = config.solve;
        options.threads = 1;
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (auto i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1)) {
                if (have[i])
                    continue;
                rows[i] = solve_row(instances[i], config.variant, options);
                if (config.journal) {
                    std::lock_guard lock(journal_mutex);
                    journal << to_json(rows[i]).dump() << '\n' << std::flush;
                }
            }
        };

        auto n = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(instances.size())));
        if (n == 1)
            worker();
        else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < n; ++t)
                pool.emplace_back(worker);
        }
        return rows;
    }

    auto to_json(const std::vector<SweepRow> & rows) -> nlohmann::ordered_json
    {
        auto out = nlohmann::ordered_json::array();
        for (auto & r : rows)
            out.push_back(to_json(r));
        return out;
    }

    auto to_csv(const std::vector<SweepRow> & rows) -> std::string
    {
        auto field = [](const std::string & s) {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string q = "\"";
            for (char c : s) {
                if (c == '"')
                    q += '"';
                q += c;
            }
            return q + '"';
        };
        std::ostringstream out;
        out << "instance,variant,status,value,nodes,table_entries,detail\n";
        for (auto & r : rows)
            out << field(r.instance) << ',' << field(r.variant) << ',' << r.status << ',' << (r.value ? std::to_string(*r.value) : "") << ','
                << r.nodes << ',' << r.table_entries << ',' << field(r.detail) << '\n';
        return out.str();
    }
}
