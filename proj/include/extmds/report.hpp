#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace extmds {

enum class Verdict { Pass, Fail, SkippedBudget, SkippedHypothesis };

std::string to_string(Verdict v);

// one verified claim instance
struct CheckResult {
    std::string claim;                            // stable id, e.g. "thm-sdjoin1"
    std::map<std::string, std::int64_t> params;   // q, u, m, ...
    std::string expected, computed;
    Verdict verdict = Verdict::Fail;

    static CheckResult compare(std::string claim, std::map<std::string, std::int64_t> params,
                               std::string expected, std::string computed) {
        CheckResult r{std::move(claim), std::move(params), std::move(expected), std::move(computed),
                      Verdict::Fail};
        if (r.expected == r.computed) r.verdict = Verdict::Pass;
        return r;
    }
    static CheckResult skipped(std::string claim, std::map<std::string, std::int64_t> params,
                               std::string why, bool budget) {
        return {std::move(claim), std::move(params), std::move(why), "",
                budget ? Verdict::SkippedBudget : Verdict::SkippedHypothesis};
    }
};

struct RunConfig {
    std::vector<std::uint32_t> qs;  // explicit q list; empty lets claims use their defaults
    std::uint32_t q_max = 0;        // cap on default q lists; 0 = uncapped
    std::vector<std::uint32_t> us;  // u selector; empty = all
    std::uint64_t budget = 100000000;  // enumeration budget in messages
    unsigned workers = 1;
    std::string json_path, csv_path;
    std::string cache_dir;  // empty disables the cache
};

std::string result_to_json(const CheckResult& r);
std::string result_to_csv(const CheckResult& r);
bool result_from_json(const std::string& line, CheckResult& out);

// verify runner: executes the selected claims across a worker pool, merges
// results in deterministic registry order, honors the cache, and writes the
// requested reports. Returns the process exit code (0 pass, 1 any fail).
int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& claim_ids);

// per-(q, u) analysis records as newline-delimited JSON
int cmd_analyze(const RunConfig& cfg);

// binary subfield-code parameter table
int cmd_table1(const RunConfig& cfg, const std::vector<std::uint32_t>& ms);

// default cache directory resolution (flag beats environment)
std::string resolve_cache_dir(const std::string& flag_value);

}  // namespace extmds
