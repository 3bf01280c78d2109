#pragma once

#include <functional>

#include "extmds/report.hpp"

namespace extmds {

struct ClaimSpec {
    std::string id;
    std::string title;
    std::function<std::vector<CheckResult>(const RunConfig&)> run;
    bool opt_in = false;  // excluded from "all"; runs only when named explicitly
};

// all verifiable claims in deterministic execution order
const std::vector<ClaimSpec>& claim_registry();

// ids = {"all"} runs everything; unknown ids throw PreconditionError
std::vector<CheckResult> run_claims(const RunConfig& cfg, const std::vector<std::string>& ids);

// the subfield-code parameter rows, restricted to the given extension degrees
// (empty = all of {3, 4, 5, 6})
std::vector<CheckResult> run_table1(const RunConfig& cfg, const std::vector<std::uint32_t>& ms);

}  // namespace extmds
