#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "extmds/claims.hpp"
#include "extmds/field.hpp"
#include "extmds/report.hpp"

using namespace extmds;
namespace fs = std::filesystem;

// declared in claims.cpp / defined in report.cpp
namespace extmds {
bool cache_lookup(const RunConfig& cfg, const std::string& claim, std::int64_t q, std::int64_t u,
                  CheckResult& out);
void cache_store(const RunConfig& cfg, const std::string& claim, std::int64_t q, std::int64_t u,
                 const CheckResult& r);
}  // namespace extmds

TEST_CASE("check result JSON round trip") {
    CheckResult r = CheckResult::compare("thm-sdjoin1", {{"q", 9}, {"u", 3}}, "[10,5,6]", "[10,5,6]");
    std::string line = result_to_json(r);
    CheckResult back;
    REQUIRE(result_from_json(line, back));
    CHECK(back.claim == r.claim);
    CHECK(back.params == r.params);
    CHECK(back.expected == r.expected);
    CHECK(back.verdict == Verdict::Pass);
    CHECK(result_to_json(back) == line);

    CheckResult s = CheckResult::skipped("NTH2::36", {{"q", 125}, {"u", 4}}, "desk scale", true);
    CheckResult back2;
    REQUIRE(result_from_json(result_to_json(s), back2));
    CHECK(back2.verdict == Verdict::SkippedBudget);

    CHECK(!result_from_json("not json", back2));
}

TEST_CASE("CSV projection") {
    CheckResult r = CheckResult::compare("NTHM23", {{"q", 9}, {"u", 3}}, "a,b", "a,b");
    CHECK(result_to_csv(r) == "NTHM23,9,3,pass,\"a,b\",\"a,b\"");
}

TEST_CASE("verdict equivalence rule") {
    auto pass = CheckResult::compare("x", {}, "same", "same");
    CHECK(pass.verdict == Verdict::Pass);
    auto fail = CheckResult::compare("x", {}, "a", "b");
    CHECK(fail.verdict == Verdict::Fail);
}

TEST_CASE("claim runs are deterministic") {
    RunConfig cfg;
    cfg.q_max = 8;
    cfg.budget = 1 << 22;
    auto a = run_claims(cfg, {"thm-sdjoin1", "NTHM29:1"});
    auto b = run_claims(cfg, {"thm-sdjoin1", "NTHM29:1"});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(result_to_json(a[i]) == result_to_json(b[i]));
}

TEST_CASE("unknown claims are rejected") {
    RunConfig cfg;
    CHECK_THROWS_AS(run_claims(cfg, {"no-such-claim"}), PreconditionError);
}

TEST_CASE("result cache") {
    RunConfig cfg;
    cfg.cache_dir = (fs::temp_directory_path() / "extmds_cache_test").string();
    fs::remove_all(cfg.cache_dir);
    CheckResult r = CheckResult::compare("unit-test-claim", {{"q", 9}, {"u", 3}}, "x", "x");
    cache_store(cfg, "unit-test-claim", 9, 3, r);
    // storing an identical result again is fine
    cache_store(cfg, "unit-test-claim", 9, 3, r);
    // a conflicting recomputation must be detected
    CheckResult drifted = CheckResult::compare("unit-test-claim", {{"q", 9}, {"u", 3}}, "x", "y");
    CHECK_THROWS_AS(cache_store(cfg, "unit-test-claim", 9, 3, drifted), std::logic_error);
    // lookups mostly hit (a deterministic fraction is resampled for revalidation)
    int hits = 0;
    for (int i = 0; i < 200; ++i) {
        CheckResult out;
        if (cache_lookup(cfg, "unit-test-claim", 9, 3, out)) {
            ++hits;
            CHECK(out.expected == "x");
            CHECK(out.verdict == Verdict::Pass);
        }
    }
    CHECK(hits > 100);
    CHECK(hits < 200);
    fs::remove_all(cfg.cache_dir);
}

TEST_CASE("cached claim runs return identical reports") {
    RunConfig cfg;
    cfg.q_max = 5;
    cfg.budget = 1 << 20;
    cfg.cache_dir = (fs::temp_directory_path() / "extmds_cache_test2").string();
    fs::remove_all(cfg.cache_dir);
    auto fresh = run_claims(cfg, {"thm-sdjoin1"});
    auto cached = run_claims(cfg, {"thm-sdjoin1"});
    REQUIRE(fresh.size() == cached.size());
    for (std::size_t i = 0; i < fresh.size(); ++i)
        CHECK(result_to_json(fresh[i]) == result_to_json(cached[i]));
    fs::remove_all(cfg.cache_dir);
}

TEST_CASE("table1 rows at m = 3") {
    RunConfig cfg;
    cfg.budget = 1 << 22;
    auto rows = run_table1(cfg, {3});
    REQUIRE(rows.size() == 3);  // u = 2, 3, 4
    for (const auto& r : rows) CHECK(r.verdict == Verdict::Pass);
    CHECK(rows[0].expected == "[10,7,2]");
    CHECK(rows[2].expected == "[10,9,2]");
}

TEST_CASE("cache directory resolution order") {
    CHECK(resolve_cache_dir("/tmp/explicit") == "/tmp/explicit");
    setenv("EXTMDS_CACHE_DIR", "/tmp/from_env", 1);
    CHECK(resolve_cache_dir("") == "/tmp/from_env");
    CHECK(resolve_cache_dir("/tmp/explicit") == "/tmp/explicit");
    unsetenv("EXTMDS_CACHE_DIR");
    CHECK(resolve_cache_dir("").empty());
}
