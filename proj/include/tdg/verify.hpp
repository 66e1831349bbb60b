#pragma once

#include "tdg/graph.hpp"
#include "tdg/solver.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tdg
{
    enum class ClaimStatus
    {
        Pass,
        Fail,
        SkippedResource,
        /// Parameters outside the hypotheses under which the claim is stated.
        SkippedHypothesis
    };

    auto to_string(ClaimStatus s) -> std::string_view;

    /// What a check produced; `status` is Pass or Fail unless skipped.
    struct Outcome
    {
        std::string expected;
        std::string computed;
        ClaimStatus status = ClaimStatus::Fail;
    };

    struct ClaimReport
    {
        std::string claim_id;
        /// Human-readable statement of the claim being checked.
        std::string locus;
        std::string expected;
        std::string computed;
        ClaimStatus status = ClaimStatus::Fail;
        std::chrono::milliseconds elapsed{0};
    };

    /// One executable claim.  `check` may throw ResourceError (reported as
    /// skipped) or anything else (reported as a failure).
    struct Claim
    {
        std::string id;
        std::string locus;
        std::function<Outcome(const SolveOptions &)> check;
    };

    auto expect_equal(unsigned computed, unsigned expected) -> Outcome;
    auto expect_at_least(unsigned computed, unsigned bound) -> Outcome;
    auto expect_at_most(unsigned computed, unsigned bound) -> Outcome;

    inline constexpr std::uint64_t default_seed = 20240917;

    // Claim builders.  Each returns claims in a fixed order.
    auto cycle_closed_form_claims(const std::vector<unsigned> & ns, std::uint64_t seed) -> std::vector<Claim>;
    auto cycle_variant_claims(const std::vector<unsigned> & ns, unsigned ss_max_n) -> std::vector<Claim>;
    auto hm_claims(const std::vector<unsigned> & ms) -> std::vector<Claim>;
    auto gnm_claims(unsigned n, unsigned m) -> std::vector<Claim>;
    auto tilde_claims(unsigned n, unsigned m) -> std::vector<Claim>;
    auto two_predominated_claims(unsigned n) -> std::vector<Claim>;
    /// Both sides of the attach-complete sandwich for H with the clique
    /// joined at a and b.
    auto sandwich_claims(const std::string & name, const Graph & h, Vertex a, Vertex b, unsigned m) -> std::vector<Claim>;
    auto problem1_claims(unsigned n, unsigned m) -> std::vector<Claim>;
    auto vertex_removal_claims(unsigned graphs, unsigned order, std::uint64_t seed) -> std::vector<Claim>;
    auto universal_join_claims() -> std::vector<Claim>;
    auto k_leaves_claims(const std::vector<unsigned> & ks) -> std::vector<Claim>;
    auto path_difference_claims(unsigned max_n) -> std::vector<Claim>;
    auto z_core_claims() -> std::vector<Claim>;
    auto z_family_claims(unsigned kmax) -> std::vector<Claim>;
    auto random_property_claims(unsigned graphs, std::uint64_t seed) -> std::vector<Claim>;
    auto cycle_strategy_claims(const std::vector<unsigned> & ns) -> std::vector<Claim>;

    /// Seeded connected graph with each edge present with probability
    /// percent/100; resampled until connected.
    auto random_connected_graph(unsigned order, unsigned percent, std::mt19937_64 & rng) -> Graph;

    enum class Profile
    {
        Quick,
        Full
    };

    /// "quick" or "full"; throws std::invalid_argument.
    auto parse_profile(std::string_view text) -> Profile;

    struct VerifyConfig
    {
        Profile profile = Profile::Quick;
        std::uint64_t seed = default_seed;
        unsigned threads = 1;
        SolveOptions solve = SolveOptions::from_environment();
    };

    struct Suite
    {
        std::string name;
        /// Claim topics the suite covers; audited against claim_topics().
        std::vector<std::string> topics;
        std::function<std::vector<Claim>(const VerifyConfig &)> claims;
    };

    /// Every claim topic of the source material that must be covered.
    auto claim_topics() -> const std::vector<std::string> &;
    auto suites() -> const std::vector<Suite> &;
    auto find_suite(std::string_view name) -> const Suite &;

    /// Runs claims on `threads` workers; the reports keep the claim order.
    auto run_claims(const std::vector<Claim> & claims, unsigned threads, const SolveOptions & options) -> std::vector<ClaimReport>;

    struct ReportBundle
    {
        std::string profile;
        std::uint64_t seed = 0;
        std::vector<ClaimReport> reports;

        auto count(ClaimStatus s) const -> std::size_t;
        auto all_passed() const -> bool { return count(ClaimStatus::Fail) == 0; }
    };

    auto run_all(const VerifyConfig & config) -> ReportBundle;
    /// Runs the suites whose names are listed, in registry order.
    auto run_suites(const std::vector<std::string> & names, const VerifyConfig & config) -> ReportBundle;

    /// Timing is left out when `with_timing` is false so that output can be
    /// compared byte for byte.
    auto to_json(const ClaimReport & r, bool with_timing) -> nlohmann::ordered_json;
    auto to_json(const ReportBundle & b, bool with_timing) -> nlohmann::ordered_json;
    auto to_csv(const ReportBundle & b, bool with_timing) -> std::string;
    auto summary(const ReportBundle & b) -> std::string;
}
