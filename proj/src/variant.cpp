#include "tdg/variant.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace tdg
{
    auto to_string(Player p) -> std::string_view { return p == Player::Dominator ? "D" : "S"; }

    auto VariantSpec::slot_holder(unsigned slot, Player previous) const -> Player
    {
        if (slot < schedule_prefix.size())
            return schedule_prefix[slot];
        if (slot == 0)
            return first_player;
        return other(previous);
    }

    void VariantSpec::validate() const
    {
        if (! schedule_prefix.empty() && schedule_prefix.front() != first_player)
            throw VariantError{"schedule prefix must start with the first player"};
        if (schedule_prefix.size() > 15)
            throw VariantError{"schedule prefix longer than 15 slots"};
        if (optional_passes[0] > 1 || optional_passes[1] > 1)
            throw VariantError{"optional pass budgets are 0 or 1"};
        if (triggers && (optional_passes[0] || optional_passes[1]))
            throw VariantError{"optional passes and trigger vertices are mutually exclusive"};
        if (triggers && ! forced_passes.empty())
            throw VariantError{"forced passes and trigger vertices are mutually exclusive"};
        if (! forced_passes.empty() && (optional_passes[0] || optional_passes[1]))
            throw VariantError{"forced passes and optional passes are mutually exclusive"};
        if (triggers && triggers->first == triggers->second)
            throw VariantError{"trigger vertices must be distinct"};
        if (first_move_exemption && ! triggers)
            throw VariantError{"first-move exemption needs trigger vertices"};
        if (forced_passes.size() > 15 || events.size() > 15)
            throw VariantError{"at most 15 forced passes and 15 events"};
        for (std::size_t i = 1; i < forced_passes.size(); ++i)
            if (forced_passes[i].after_move < forced_passes[i - 1].after_move)
                throw VariantError{"forced passes must be ordered by move index"};
        for (std::size_t i = 1; i < events.size(); ++i)
            if (events[i].after_move < events[i - 1].after_move)
                throw VariantError{"events must be ordered by move index"};

        if (! forced_passes.empty()) {
            // Unfold the schedule until every forced pass is placed; each one
            // must land on its own player's turn.
            auto last = forced_passes.back().after_move;
            unfold_schedule(*this, last);
        }
    }

    void VariantSpec::validate(const Graph & g) const
    {
        validate();
        auto all = g.vertices();
        if (! initial_dominated.subset_of(all))
            throw VariantError{"predominated set is not a subset of V"};
        for (auto & e : events)
            if (! e.vertices.subset_of(all))
                throw VariantError{"event set is not a subset of V"};
        if (triggers && (triggers->first >= g.order() || triggers->second >= g.order()))
            throw VariantError{"trigger vertex out of range"};
    }

    auto unfold_schedule(const VariantSpec & spec, unsigned moves) -> std::vector<ScheduledTurn>
    {
        if (spec.triggers || spec.optional_passes[0] || spec.optional_passes[1])
            throw VariantError{"schedule depends on play for optional passes or triggers"};

        std::vector<ScheduledTurn> out;
        unsigned slot = 0;
        Player holder = spec.slot_holder(0, spec.first_player);
        std::size_t forced = 0;

        auto place_passes = [&](unsigned after) {
            while (forced < spec.forced_passes.size() && spec.forced_passes[forced].after_move == after) {
                auto passer = spec.forced_passes[forced].player;
                if (passer != holder)
                    throw VariantError{"forced " + std::string{to_string(passer)} + " pass after move " + std::to_string(after) +
                        " falls on " + std::string{to_string(holder)} + "'s turn"};
                out.push_back({passer, true});
                holder = spec.slot_holder(++slot, holder);
                ++forced;
            }
        };

        place_passes(0);
        for (unsigned move = 1; move <= moves; ++move) {
            out.push_back({holder, false});
            holder = spec.slot_holder(++slot, holder);
            place_passes(move);
        }
        if (forced < spec.forced_passes.size())
            throw VariantError{"forced pass after move " + std::to_string(spec.forced_passes[forced].after_move) + " is never reached"};
        return out;
    }

    auto dgame(VertexSet predominated) -> VariantSpec
    {
        VariantSpec v;
        v.label = predominated.empty() ? "d" : "d|S=" + to_string(predominated);
        v.initial_dominated = predominated;
        return v;
    }

    auto sgame(VertexSet predominated) -> VariantSpec
    {
        VariantSpec v;
        v.label = predominated.empty() ? "s" : "s|S=" + to_string(predominated);
        v.first_player = Player::Staller;
        v.initial_dominated = predominated;
        return v;
    }

    auto staller_pass(Player first, VertexSet predominated) -> VariantSpec
    {
        auto v = first == Player::Dominator ? dgame(predominated) : sgame(predominated);
        v.label = "spass:" + v.label;
        v.optional_passes[index(Player::Staller)] = 1;
        return v;
    }

    auto dominator_pass(Player first, VertexSet predominated) -> VariantSpec
    {
        auto v = first == Player::Dominator ? dgame(predominated) : sgame(predominated);
        v.label = "dpass:" + v.label;
        v.optional_passes[index(Player::Dominator)] = 1;
        return v;
    }

    auto double_staller() -> VariantSpec
    {
        VariantSpec v;
        v.label = "ss";
        v.first_player = Player::Staller;
        v.schedule_prefix = {Player::Staller, Player::Staller};
        return v;
    }

    auto delayed_predom(unsigned m, VertexSet vertices) -> VariantSpec
    {
        VariantSpec v;
        v.label = "delayed:m=" + std::to_string(m) + ",S=" + to_string(vertices);
        v.events.push_back({m, vertices});
        return v;
    }

    auto sdp(unsigned k, unsigned l) -> VariantSpec
    {
        if (k > l)
            throw VariantError{"sdp needs k <= l"};
        VariantSpec v;
        v.label = "sdp:k=" + std::to_string(k) + ",l=" + std::to_string(l);
        v.forced_passes = {{k, Player::Staller}, {l, Player::Dominator}};
        v.validate();
        return v;
    }

    auto sdp_predom(unsigned k, unsigned l, VertexSet vertices) -> VariantSpec
    {
        auto v = sdp(k, l);
        v.label += ",S=" + to_string(vertices);
        v.events.push_back({l, vertices});
        return v;
    }

    auto sdp_delayed(unsigned k, unsigned l, unsigned m, VertexSet vertices) -> VariantSpec
    {
        auto v = sdp(k, l);
        v.label += ",m=" + std::to_string(m) + ",S=" + to_string(vertices);
        v.events.push_back({m, vertices});
        return v;
    }

    auto ssp(Vertex first, Vertex second) -> VariantSpec
    {
        VariantSpec v;
        v.label = "ssp:u=" + std::to_string(first) + ",v=" + std::to_string(second);
        v.triggers = TriggerPair{first, second};
        v.first_move_exemption = true;
        v.validate();
        return v;
    }

    auto sdp_admissible(unsigned k, unsigned l) -> bool
    {
        try {
            sdp(k, l);
            return true;
        }
        catch (const VariantError &) {
            return false;
        }
    }

    namespace
    {
        auto trim(std::string_view s) -> std::string_view
        {
            auto b = s.find_first_not_of(" \t");
            if (b == std::string_view::npos)
                return {};
            return s.substr(b, s.find_last_not_of(" \t") - b + 1);
        }

        auto parse_count(std::string_view key, std::string_view s) -> unsigned
        {
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
                throw VariantError{"bad value for " + std::string{key} + ": '" + std::string{s} + "'"};
            return value;
        }

        /// "m=3,S=1,5" -> {m: [3], S: [1, 5]}; tokens without '=' extend the previous key.
        auto parse_params(std::string_view body) -> std::map<std::string, std::vector<std::string>, std::less<>>
        {
            std::map<std::string, std::vector<std::string>, std::less<>> out;
            std::string current;
            while (! body.empty()) {
                auto comma = body.find(',');
                auto item = trim(body.substr(0, comma));
                body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
                if (item.empty())
                    throw VariantError{"empty variant parameter"};
                if (auto eq = item.find('='); eq != std::string_view::npos) {
                    current = std::string{trim(item.substr(0, eq))};
                    if (out.contains(current))
                        throw VariantError{"parameter " + current + " given twice"};
                    out[current].emplace_back(trim(item.substr(eq + 1)));
                }
                else if (current.empty())
                    throw VariantError{"expected key=value, got '" + std::string{item} + "'"};
                else
                    out[current].emplace_back(item);
            }
            return out;
        }

        auto single(const std::map<std::string, std::vector<std::string>, std::less<>> & params, std::string_view key) -> std::string
        {
            auto it = params.find(key);
            if (it == params.end() || it->second.size() != 1)
                throw VariantError{"variant needs exactly one value for " + std::string{key}};
            return it->second.front();
        }

        auto vertex_list(const Graph & g, const std::vector<std::string> & refs) -> VertexSet
        {
            try {
                return g.resolve_set(refs);
            }
            catch (const GraphError & e) {
                throw VariantError{e.what()};
            }
        }

        auto vertex_ref(const Graph & g, const std::string & ref) -> Vertex
        {
            try {
                return g.resolve(ref);
            }
            catch (const GraphError & e) {
                throw VariantError{e.what()};
            }
        }

        void check_keys(const std::map<std::string, std::vector<std::string>, std::less<>> & params, std::initializer_list<std::string_view> allowed)
        {
            for (auto & [key, _] : params)
                if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                    throw VariantError{"unexpected variant parameter " + key};
        }
    }

    auto parse_variant(std::string_view text, const Graph & g) -> VariantSpec
    {
        text = trim(text);
        VertexSet predominated;
        bool has_predomination = false;
        if (auto bar = text.find('|'); bar != std::string_view::npos) {
            auto params = parse_params(text.substr(bar + 1));
            check_keys(params, {"S"});
            if (! params.contains("S"))
                throw VariantError{"predomination needs S=..."};
            predominated = vertex_list(g, params.at("S"));
            has_predomination = true;
            text = trim(text.substr(0, bar));
        }

        auto colon = text.find(':');
        auto head = text.substr(0, colon);
        auto body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

        auto first_of = [](std::string_view who) {
            if (who == "d")
                return Player::Dominator;
            if (who == "s")
                return Player::Staller;
            throw VariantError{"expected d or s, got '" + std::string{who} + "'"};
        };

        VariantSpec spec;
        if (head == "d" && body.empty())
            spec = dgame(predominated);
        else if (head == "s" && body.empty())
            spec = sgame(predominated);
        else if (head == "spass")
            spec = staller_pass(first_of(trim(body)), predominated);
        else if (head == "dpass")
            spec = dominator_pass(first_of(trim(body)), predominated);
        else if (head == "ss" && body.empty() && ! has_predomination)
            spec = double_staller();
        else if (head == "delayed" && ! has_predomination) {
            auto params = parse_params(body);
            check_keys(params, {"m", "S"});
            if (! params.contains("S"))
                throw VariantError{"delayed needs S=..."};
            spec = delayed_predom(parse_count("m", single(params, "m")), vertex_list(g, params.at("S")));
        }
        else if (head == "sdp" && ! has_predomination) {
            auto params = parse_params(body);
            check_keys(params, {"k", "l", "m", "S"});
            auto k = parse_count("k", single(params, "k"));
            auto l = parse_count("l", single(params, "l"));
            if (params.contains("m") && params.contains("S"))
                spec = sdp_delayed(k, l, parse_count("m", single(params, "m")), vertex_list(g, params.at("S")));
            else if (params.contains("S"))
                spec = sdp_predom(k, l, vertex_list(g, params.at("S")));
            else if (! params.contains("m"))
                spec = sdp(k, l);
            else
                throw VariantError{"sdp m= needs S="};
        }
        else if (head == "ssp" && ! has_predomination) {
            auto params = parse_params(body);
            check_keys(params, {"u", "v"});
            spec = ssp(vertex_ref(g, single(params, "u")), vertex_ref(g, single(params, "v")));
        }
        else
            throw VariantError{"unknown variant '" + std::string{text} + "'"};

        spec.validate(g);
        return spec;
    }
}
