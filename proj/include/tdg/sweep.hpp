#pragma once

#include "tdg/solver.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tdg
{
    class SweepError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Expands a family pattern into concrete family strings, in grid order
    /// (last parameter varies fastest).  A parameter is a value, a list
    /// "{8,14}" or an inclusive range "1..7"; range ends may refer to an
    /// earlier parameter with an optional integer operation, as in
    /// "gndm:n={8,14},d=1..n/2,m=4".
    auto expand_grid(std::string_view pattern) -> std::vector<std::string>;

    struct SweepRow
    {
        std::string instance;
        std::string variant;
        /// "ok", "resource" or "error".
        std::string status;
        std::optional<unsigned> value;
        std::uint64_t nodes = 0;
        std::uint64_t table_entries = 0;
        std::string detail;

        auto operator==(const SweepRow &) const -> bool = default;
    };

    auto to_json(const SweepRow & r) -> nlohmann::ordered_json;
    auto row_from_json(const nlohmann::json & j) -> SweepRow;

    struct SweepConfig
    {
        std::string pattern;
        std::string variant = "d";
        unsigned threads = 1;
        SolveOptions solve = SolveOptions::from_environment();
        /// Append-only log of finished rows; rows already present are reused.
        std::optional<std::string> journal;
    };

    /// One row per grid point.  Failures are recorded per row and never stop
    /// the sweep.
    auto run_sweep(const SweepConfig & config) -> std::vector<SweepRow>;

    auto to_json(const std::vector<SweepRow> & rows) -> nlohmann::ordered_json;
    auto to_csv(const std::vector<SweepRow> & rows) -> std::string;
}
