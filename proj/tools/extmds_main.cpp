#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "extmds/claims.hpp"
#include "extmds/field.hpp"
#include "extmds/report.hpp"

namespace {

std::vector<std::uint32_t> parse_u_list(const std::vector<std::string>& raw, bool& ok) {
    std::vector<std::uint32_t> out;
    ok = true;
    for (const auto& tok : raw) {
        if (tok == "all") return {};
        try {
            out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        } catch (...) {
            ok = false;
            return {};
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructs the classical reversible MDS cyclic codes, their extended and dual "
                 "relatives, and verifies their parameters, weight distributions and locality"};
    app.require_subcommand(1);

    extmds::RunConfig cfg;
    std::string cache_flag;
    std::vector<std::string> u_raw;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "enumeration budget in messages");
        sub->add_option("--workers", cfg.workers, "worker threads");
        sub->add_option("--json", cfg.json_path, "write newline-delimited JSON records here");
        sub->add_option("--csv", cfg.csv_path, "write a flat CSV projection here");
        sub->add_option("--cache", cache_flag, "result cache directory (or EXTMDS_CACHE_DIR)");
    };

    auto* analyze = app.add_subcommand("analyze", "per-(q,u) family analysis records");
    analyze->add_option("--q", cfg.qs, "field sizes")->delimiter(',');
    analyze->add_option("--u", u_raw, "u values, or 'all'")->delimiter(',');
    add_common(analyze);

    auto* verify = app.add_subcommand("verify", "run the claim verification suite");
    std::vector<std::string> claim_ids;
    verify->add_option("--claim", claim_ids, "claim ids, or 'all'")->delimiter(',');
    verify->add_option("--q-max", cfg.q_max, "cap the default field-size lists");
    verify->add_option("--q", cfg.qs, "override the claim field-size lists")->delimiter(',');
    verify->add_option("--u", u_raw, "restrict to these u values")->delimiter(',');
    add_common(verify);

    auto* table1 = app.add_subcommand("table1", "binary subfield-code parameter rows");
    std::vector<std::uint32_t> ms;
    table1->add_option("--m", ms, "extension degrees from {3,4,5,6}")->delimiter(',');
    add_common(table1);

    auto* list = app.add_subcommand("claims", "list the registered claim ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    bool ok = true;
    cfg.us = parse_u_list(u_raw, ok);
    if (!ok) {
        std::cerr << "bad --u value\n";
        return 2;
    }
    if (cfg.budget == 0 || cfg.workers == 0) {
        std::cerr << "budget and workers must be positive\n";
        return 2;
    }
    for (std::uint32_t q : cfg.qs)
        if (q <= 2) {
            std::cerr << "q must exceed 2\n";
            return 2;
        }
    cfg.cache_dir = extmds::resolve_cache_dir(cache_flag);

    try {
        if (list->parsed()) {
            for (const auto& spec : extmds::claim_registry())
                std::cout << spec.id << "  " << spec.title << (spec.opt_in ? "  [opt-in]" : "")
                          << "\n";
            return 0;
        }
        if (analyze->parsed()) return extmds::cmd_analyze(cfg);
        if (verify->parsed()) return extmds::cmd_verify(cfg, claim_ids);
        if (table1->parsed()) return extmds::cmd_table1(cfg, ms);
    } catch (const extmds::PreconditionError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
