#include "tdg/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace tdg;

TEST_SUITE("verify")
{
    TEST_CASE("every topic is covered by a registered suite")
    {
        std::set<std::string> covered;
        for (auto & s : suites()) {
            CHECK_FALSE(s.topics.empty());
            covered.insert(s.topics.begin(), s.topics.end());
        }
        for (auto & topic : claim_topics()) {
            INFO(topic);
            CHECK(covered.count(topic) == 1);
        }
        CHECK_THROWS_AS(find_suite("nope"), std::invalid_argument);
        CHECK(find_suite("cycles").name == "cycles");
    }

    TEST_CASE("claims carry ids and statements, ids are unique")
    {
        VerifyConfig config;
        std::set<std::string> ids;
        for (auto & s : suites())
            for (auto & c : s.claims(config)) {
                INFO(c.id);
                CHECK_FALSE(c.locus.empty());
                CHECK(ids.insert(c.id).second);
            }
        CHECK(ids.size() > 100);
    }

    TEST_CASE("profiles")
    {
        CHECK(parse_profile("quick") == Profile::Quick);
        CHECK(parse_profile("full") == Profile::Full);
        CHECK_THROWS_AS(parse_profile("slow"), std::invalid_argument);

        VerifyConfig full;
        full.profile = Profile::Full;
        CHECK(find_suite("cycles").claims(full).size() > find_suite("cycles").claims(VerifyConfig{}).size());
    }

    TEST_CASE("outcomes")
    {
        CHECK(expect_equal(3, 3).status == ClaimStatus::Pass);
        CHECK(expect_equal(3, 4).status == ClaimStatus::Fail);
        CHECK(expect_at_least(5, 4).status == ClaimStatus::Pass);
        CHECK(expect_at_most(5, 4).status == ClaimStatus::Fail);
        CHECK(to_string(ClaimStatus::SkippedHypothesis) == "skipped(hypothesis)");
    }

    TEST_CASE("a failing or exhausted claim does not stop the run")
    {
        std::vector<Claim> claims{
            {"t/fail", "always fails", [](const SolveOptions &) { return expect_equal(1, 2); }},
            {"t/throws", "throws", [](const SolveOptions &) -> Outcome { throw std::runtime_error{"boom"}; }},
            {"t/resource", "runs out", [](const SolveOptions & o) { return expect_equal(solve(build_cycle(14), dgame(), o).value, 9); }},
            {"t/pass", "passes", [](const SolveOptions & o) { return expect_equal(solve(build_cycle(8), dgame(), o).value, 5); }},
        };
        SolveOptions tight;
        tight.max_nodes = 200;
        auto reports = run_claims(claims, 2, tight);
        REQUIRE(reports.size() == 4);
        CHECK(reports[0].status == ClaimStatus::Fail);
        CHECK(reports[1].status == ClaimStatus::Fail);
        CHECK(reports[1].computed.find("boom") != std::string::npos);
        CHECK(reports[2].status == ClaimStatus::SkippedResource);
        CHECK(reports[3].status == ClaimStatus::Pass);
        CHECK(reports[3].claim_id == "t/pass");
    }

    TEST_CASE("reports are identical across worker counts")
    {
        VerifyConfig one;
        VerifyConfig four;
        four.threads = 4;
        std::vector<std::string> names{"cycles", "tilde", "strategies"};
        auto a = to_json(run_suites(names, one), false).dump();
        auto b = to_json(run_suites(names, four), false).dump();
        CHECK(a == b);
    }

    TEST_CASE("JSON and CSV output")
    {
        auto bundle = run_suites({"cycles"}, VerifyConfig{});
        CHECK(bundle.all_passed());
        auto j = to_json(bundle, true);
        CHECK(j["profile"] == "quick");
        CHECK(j["seed"] == default_seed);
        CHECK(j["failed"] == 0);
        CHECK(j["reports"].size() == bundle.reports.size());
        CHECK(j["reports"][0].contains("millis"));
        CHECK_FALSE(to_json(bundle, false)["reports"][0].contains("millis"));

        auto csv = to_csv(bundle, false);
        CHECK(csv.rfind("claim_id,locus,expected,computed,status\n", 0) == 0);
        CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == bundle.reports.size() + 1);
        CHECK(summary(bundle).find("0 failed") != std::string::npos);
    }

    TEST_CASE("random graphs are seeded and connected")
    {
        std::mt19937_64 a(5), b(5);
        for (int i = 0; i < 20; ++i) {
            auto g = random_connected_graph(7, 40, a);
            auto h = random_connected_graph(7, 40, b);
            CHECK(g.connected());
            CHECK(g.edges() == h.edges());
        }
    }
}
