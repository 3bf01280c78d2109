#include "extmds/claims.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "extmds/family.hpp"
#include "extmds/lemmas.hpp"
#include "extmds/lrc.hpp"
#include "extmds/spectra.hpp"

namespace extmds {

// implemented in report.cpp
bool cache_lookup(const RunConfig& cfg, const std::string& claim, std::int64_t q, std::int64_t u,
                  CheckResult& out);
void cache_store(const RunConfig& cfg, const std::string& claim, std::int64_t q, std::int64_t u,
                 const CheckResult& r);

namespace {

const std::vector<std::uint32_t> kGrid{4, 5, 7, 8, 9, 11, 13, 16};

std::vector<std::uint32_t> q_list(const RunConfig& cfg, std::vector<std::uint32_t> defaults) {
    std::vector<std::uint32_t> qs = cfg.qs.empty() ? std::move(defaults) : cfg.qs;
    if (cfg.q_max > 0)
        qs.erase(std::remove_if(qs.begin(), qs.end(), [&](std::uint32_t q) { return q > cfg.q_max; }),
                 qs.end());
    return qs;
}

bool u_selected(const RunConfig& cfg, std::uint32_t u) {
    return cfg.us.empty() || std::find(cfg.us.begin(), cfg.us.end(), u) != cfg.us.end();
}

std::string nkd(std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

std::uint32_t exact_d_cyclic(const CyclicCode& c, const RunConfig& cfg) {
    if (auto d = cyclic_distance_if_pinned(c)) return *d;
    return cyclic_min_weight(c, cfg.budget, cfg.workers).d;
}

template <typename F>
CheckResult with_cache(const RunConfig& cfg, const std::string& claim, std::int64_t q,
                       std::int64_t u, F&& compute) {
    CheckResult r;
    if (cache_lookup(cfg, claim, q, u, r)) return r;
    try {
        r = compute();
    } catch (const BudgetExceeded& e) {
        r = CheckResult::skipped(claim, {{"q", q}, {"u", u}}, e.what(), true);
    } catch (const HypothesisError& e) {
        r = CheckResult::skipped(claim, {{"q", q}, {"u", u}}, e.what(), false);
    }
    cache_store(cfg, claim, q, u, r);
    return r;
}

// ---- classical family and its extension -----------------------------------

std::vector<CheckResult> claim_sdjoin1(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, kGrid)) {
        for (std::uint32_t u = 1; u <= (q + 1) / 2; ++u) {
            if (!u_selected(cfg, u)) continue;
            out.push_back(with_cache(cfg, "thm-sdjoin1", q, u, [&] {
                auto T = get_tower(q);
                auto cu = code_Cu(T, u);
                auto du = cu.dual_cyclic();
                std::string expected = nkd(q + 1, 2 * u - 1, q - 2 * u + 3) + " dual " +
                                       nkd(q + 1, q + 2 - 2 * u, 2 * u) + " reversible";
                std::string computed =
                    nkd(cu.length(), cu.dimension(), exact_d_cyclic(cu, cfg)) + " dual " +
                    nkd(du.length(), du.dimension(), exact_d_cyclic(du, cfg)) +
                    (is_reversible(cu.code()) && is_reversible(du.code()) ? " reversible"
                                                                          : " not reversible");
                return CheckResult::compare("thm-sdjoin1", {{"q", q}, {"u", u}}, expected, computed);
            }));
        }
    }
    return out;
}

std::vector<CheckResult> claim_fund21jproj(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, kGrid)) {
        for (std::uint32_t u = 2; u <= (q + 1) / 2; ++u) {
            if (!u_selected(cfg, u)) continue;
            out.push_back(with_cache(cfg, "thm-fund21jproj", q, u, [&] {
                auto T = get_tower(q);
                auto ext_dual = code_Cu(T, u).code().extended().dual();
                auto bch = bch_narrow(T, u);
                std::uint32_t lhs = ext_dual.min_distance(cfg.budget, cfg.workers).d;
                std::uint32_t rhs = cyclic_min_weight(bch, cfg.budget, cfg.workers).d;
                return CheckResult::compare("thm-fund21jproj", {{"q", q}, {"u", u}},
                                            "d(dual(ext)) = " + std::to_string(rhs + 1),
                                            "d(dual(ext)) = " + std::to_string(lhs));
            }));
        }
    }
    return out;
}

std::vector<CheckResult> claim_nthm29(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, kGrid)) {
        for (std::uint32_t u = 2; u <= (q + 1) / 2; ++u) {
            if (!u_selected(cfg, u)) continue;
            out.push_back(with_cache(cfg, "NTHM29:1", q, u, [&] {
                auto T = get_tower(q);
                auto cu = code_Cu(T, u);
                std::uint32_t w0 = q - 2 * u + 3;
                std::uint32_t d_cu = exact_d_cyclic(cu, cfg);  // extension cannot lower the weight
                auto ext = cu.code().extended();
                auto cofu = code_C_of_u(T, u);
                MinDistance mext = min_weight_with_lower_bound(ext, d_cu, cfg.budget, cfg.workers);
                MinDistance mcof = cyclic_min_weight(cofu, cfg.budget, cfg.workers);
                BigUint a_ext = mext.d == w0 ? mext.count : BigUint(0);
                BigUint a_cof = mcof.d == w0 ? mcof.count : BigUint(0);
                return CheckResult::compare(
                    "NTHM29:1", {{"q", q}, {"u", u}},
                    "d=" + std::to_string(mcof.d) + " A_" + std::to_string(w0) + "=" + a_cof.to_decimal(),
                    "d=" + std::to_string(mext.d) + " A_" + std::to_string(w0) + "=" + a_ext.to_decimal());
            }));
        }
    }
    return out;
}

std::vector<CheckResult> claim_nthm11(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, kGrid)) {
        auto F = get_field(q);
        std::uint32_t p = F->characteristic(), m = F->degree();
        for (std::uint32_t u = 2; u <= (q + 1) / 2; ++u) {
            if (!u_selected(cfg, u)) continue;
            bool case1 = (q + 1) % u == 0;
            bool case2 = !case1 && (q + 1) % (u + 1) == 0;
            if (!case1 && !case2) continue;
            out.push_back(with_cache(cfg, "nthm:11", q, u, [&] {
                std::uint32_t exp_d_ext, exp_d_dual;
                if (case1) {
                    exp_d_ext = q - 2 * u + 3;
                    exp_d_dual = u + 1;
                } else {
                    exp_d_ext = (u == 2 && p == 2 && m % 2 == 1) ? q - 2 * u + 4 : q - 2 * u + 3;
                    exp_d_dual = u + 2;
                }
                auto T = get_tower(q);
                auto cu = code_Cu(T, u);
                auto ext = cu.code().extended();
                auto ext_dual = ext.dual();
                MinDistance mext =
                    min_weight_with_lower_bound(ext, exact_d_cyclic(cu, cfg), cfg.budget, cfg.workers);
                MinDistance mdual = ext_dual.min_distance(cfg.budget, cfg.workers);
                return CheckResult::compare(
                    "nthm:11", {{"q", q}, {"u", u}},
                    nkd(q + 2, 2 * u - 1, exp_d_ext) + " dual " + nkd(q + 2, q - 2 * u + 3, exp_d_dual),
                    nkd(ext.length(), ext.dimension(), mext.d) + " dual " +
                        nkd(ext_dual.length(), ext_dual.dimension(), mdual.d));
            }));
        }
    }
    return out;
}

std::vector<CheckResult> claim_nthm13(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, kGrid)) {
        auto F = get_field(q);
        std::uint32_t p = F->characteristic(), m = F->degree();
        for (std::uint32_t s = 1; s < m; ++s) {
            if (m % s != 0) continue;
            std::uint32_t u = 1;
            for (std::uint32_t i = 0; i < s; ++i) u *= p;
            if (u < 2 || u > (q + 1) / 2 || !u_selected(cfg, u)) continue;
            std::uint32_t uu = u;
            out.push_back(with_cache(cfg, "nthm:13", q, u, [&, uu] {
                std::uint32_t exp_d_ext = uu == 2 ? q - 2 * uu + 4 : q - 2 * uu + 3;
                auto T = get_tower(q);
                auto cu = code_Cu(T, uu);
                auto ext = cu.code().extended();
                auto ext_dual = ext.dual();
                MinDistance mext =
                    min_weight_with_lower_bound(ext, exact_d_cyclic(cu, cfg), cfg.budget, cfg.workers);
                MinDistance mdual = ext_dual.min_distance(cfg.budget, cfg.workers);
                return CheckResult::compare(
                    "nthm:13", {{"q", q}, {"u", uu}},
                    nkd(q + 2, 2 * uu - 1, exp_d_ext) + " dual " + nkd(q + 2, q - 2 * uu + 3, uu + 2),
                    nkd(ext.length(), ext.dimension(), mext.d) + " dual " +
                        nkd(ext_dual.length(), ext_dual.dimension(), mdual.d));
            }));
        }
    }
    return out;
}

std::vector<CheckResult> claim_cor9(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, kGrid)) {
        if (q % 2 == 0 || !u_selected(cfg, 2)) continue;
        out.push_back(with_cache(cfg, "Cor9::1", q, 2, [&] {
            auto cu = code_Cu(get_tower(q), 2);
            auto ext = cu.code().extended();
            auto v = classify(ext, cfg.budget, exact_d_cyclic(cu, cfg), 1, cfg.workers);
            return CheckResult::compare("Cor9::1", {{"q", q}, {"u", 2}},
                                        nkd(q + 2, 3, q - 1) + " NMDS",
                                        nkd(ext.length(), ext.dimension(), v.d) + " " + to_string(v.cls));
        }));
    }
    return out;
}

std::vector<CheckResult> claim_sdjoint2(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {4, 8, 16})) {
        if (!u_selected(cfg, 2)) continue;
        out.push_back(with_cache(cfg, "thm-sdjoint2", q, 2, [&] {
            auto cu = code_Cu(get_tower(q), 2);
            auto ext = cu.code().extended();
            auto v = classify(ext, cfg.budget, exact_d_cyclic(cu, cfg), 1, cfg.workers);
            auto wd = ext.weight_distribution(cfg.budget, cfg.workers);
            auto predicted = formula_distribution("thm-sdjoint2", q);
            std::string expected = nkd(q + 2, 3, q) + " MDS enumerator " + predicted.enumerator_string();
            std::string computed = nkd(ext.length(), ext.dimension(), v.d) + " " + to_string(v.cls) +
                                   " enumerator " + wd.enumerator_string();
            return CheckResult::compare("thm-sdjoint2", {{"q", q}, {"u", 2}}, expected, computed);
        }));
    }
    return out;
}

std::vector<CheckResult> claim_nthm17(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {5, 7, 8, 9, 11, 13, 16})) {
        if (q < 5 || !u_selected(cfg, 3)) continue;
        out.push_back(with_cache(cfg, "NTHM:17", q, 3, [&] {
            auto T = get_tower(q);
            auto bch = bch_narrow(T, 3);
            auto cof = code_C_of_u(T, 3);
            std::uint32_t d_bch = cyclic_min_weight(bch, cfg.budget, cfg.workers).d;
            std::uint32_t d_cof = cyclic_min_weight(cof, cfg.budget, cfg.workers).d;
            std::string expected, computed;
            if ((q + 1) % 3 == 0) {
                expected = "bch " + nkd(q + 1, q - 3, 3) + " C(3) " + nkd(q + 1, 4, q - 3);
            } else {
                expected = "bch " + nkd(q + 1, q - 3, 4) + " NMDS";
            }
            if ((q + 1) % 3 == 0) {
                computed = "bch " + nkd(bch.length(), bch.dimension(), d_bch) + " C(3) " +
                           nkd(cof.length(), cof.dimension(), d_cof);
            } else {
                auto v = classify(bch.code(), cfg.budget, d_bch, d_cof, cfg.workers);
                computed = "bch " + nkd(bch.length(), bch.dimension(), v.d) + " " + to_string(v.cls);
            }
            return CheckResult::compare("NTHM:17", {{"q", q}, {"u", 3}}, expected, computed);
        }));
    }
    return out;
}

std::vector<CheckResult> claim_nthm18(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {5, 7, 8, 9, 11, 13, 16, 25})) {
        if (q < 5 || !u_selected(cfg, 3)) continue;
        out.push_back(with_cache(cfg, "NTHM18", q, 3, [&] {
            auto T = get_tower(q);
            auto cu = code_Cu(T, 3);
            auto ext = cu.code().extended();
            auto ext_dual = ext.dual();
            MinDistance me = min_weight_with_lower_bound(ext, exact_d_cyclic(cu, cfg), cfg.budget, cfg.workers);
            MinDistance md = ext_dual.min_distance(cfg.budget, cfg.workers);
            std::uint32_t exp_dual_d = (q + 1) % 3 == 0 ? 4 : 5;
            std::string tag = (q + 1) % 3 == 0 ? "" : " NMDS";
            std::string got_tag;
            if ((q + 1) % 3 != 0)
                got_tag = me.d + md.d == q + 2 && me.d == q - 3 ? " NMDS" : " not NMDS";
            return CheckResult::compare(
                "NTHM18", {{"q", q}, {"u", 3}},
                nkd(q + 2, 5, q - 3) + " dual " + nkd(q + 2, q - 3, exp_dual_d) + tag,
                nkd(ext.length(), ext.dimension(), me.d) + " dual " +
                    nkd(ext_dual.length(), ext_dual.dimension(), md.d) + got_tag);
        }));
    }
    return out;
}

// ---- settled weight distributions ------------------------------------------

CheckResult formula_vs_enumeration(const RunConfig& cfg, const std::string& claim,
                                   std::uint32_t q, const LinearCode& code) {
    auto predicted = formula_distribution(claim, q);
    auto wd = code.weight_distribution(cfg.budget, cfg.workers);
    return CheckResult::compare(claim, {{"q", q}, {"u", claim == "thm-sdjoint4" ? 4 : 3}},
                                predicted.enumerator_string(), wd.enumerator_string());
}

std::vector<CheckResult> claim_sdjoint3(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {16})) {
        out.push_back(with_cache(cfg, "thm-sdjoint3", q, 3, [&] {
            return formula_vs_enumeration(cfg, "thm-sdjoint3", q,
                                          code_Cu(get_tower(q), 3).code().extended());
        }));
    }
    return out;
}

std::vector<CheckResult> claim_lem_sdjoint3(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {16})) {
        out.push_back(with_cache(cfg, "lem-sdjoint3", q, 3, [&] {
            return formula_vs_enumeration(cfg, "lem-sdjoint3", q,
                                          code_C_of_u(get_tower(q), 3).code());
        }));
    }
    return out;
}

std::vector<CheckResult> claim_nthm23(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {9, 27})) {
        out.push_back(with_cache(cfg, "NTHM23", q, 3, [&] {
            return formula_vs_enumeration(cfg, "NTHM23", q,
                                          code_Cu(get_tower(q), 3).code().extended());
        }));
    }
    return out;
}

std::vector<CheckResult> claim_nlem20(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {9, 27})) {
        out.push_back(with_cache(cfg, "nlem20", q, 3, [&] {
            return formula_vs_enumeration(cfg, "nlem20", q, code_C_of_u(get_tower(q), 3).code());
        }));
    }
    return out;
}

std::vector<CheckResult> claim_sdjoint4(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    // part 1: even degree, parameters only
    for (std::uint32_t q : q_list(cfg, {16})) {
        if (get_field(q)->characteristic() != 2 || get_field(q)->degree() % 2 != 0 ||
            get_field(q)->degree() < 4)
            continue;
        out.push_back(with_cache(cfg, "thm-sdjoint4", q, 4, [&] {
            auto T = get_tower(q);
            auto cu = code_Cu(T, 4);
            auto ext = cu.code().extended();
            auto ext_dual = ext.dual();
            MinDistance me = min_weight_with_lower_bound(ext, exact_d_cyclic(cu, cfg), cfg.budget, cfg.workers);
            MinDistance md = ext_dual.min_distance(cfg.budget, cfg.workers);
            return CheckResult::compare("thm-sdjoint4", {{"q", q}, {"u", 4}},
                                        nkd(q + 2, 7, q - 5) + " dual " + nkd(q + 2, q - 5, 6),
                                        nkd(ext.length(), ext.dimension(), me.d) + " dual " +
                                            nkd(ext_dual.length(), ext_dual.dimension(), md.d));
        }));
    }
    // part 2: odd degree, full distribution; printed q = 32 coefficients
    for (std::uint32_t q : q_list(cfg, {32})) {
        if (get_field(q)->characteristic() != 2 || get_field(q)->degree() % 2 != 1 ||
            get_field(q)->degree() < 5)
            continue;
        out.push_back(with_cache(cfg, "thm-sdjoint4", q, 4, [&]() -> CheckResult {
            auto predicted = formula_distribution("thm-sdjoint4", q);
            if (q == 32) {
                const char* printed =
                    "1 + 1014816z^27 + 34588312z^28 + 55814880z^29 + 686184752z^30 + "
                    "2244500192z^31 + 6875142087z^32 + 12784990240z^33 + 11677503088z^34";
                CheckResult r = CheckResult::compare("thm-sdjoint4", {{"q", q}, {"u", 4}}, printed,
                                                     predicted.enumerator_string());
                if (r.verdict != Verdict::Pass) return r;
            }
            // NMDS reconstruction from the anchor agrees with the closed form
            auto anchor = formula_anchor("lem-sdjoint7", q);
            auto viaanchor = nmds_weight_from_anchor(q + 2, 7, q, anchor, BigUint(1)).code;
            CheckResult consist =
                CheckResult::compare("thm-sdjoint4", {{"q", q}, {"u", 4}},
                                     predicted.enumerator_string(), viaanchor.enumerator_string());
            if (consist.verdict != Verdict::Pass) return consist;
            // the optional brute-force cross-check needs 32^7 messages
            auto ext = code_Cu(get_tower(q), 4).code().extended();
            if (enumeration_cost(q, 7) > cfg.budget) {
                CheckResult r = consist;
                r.expected += " (formula-only; enumeration cross-check skipped at this budget)";
                r.computed = r.expected;
                return r;
            }
            auto wd = ext.weight_distribution_exhaustive(cfg.budget, cfg.workers);
            return CheckResult::compare("thm-sdjoint4", {{"q", q}, {"u", 4}},
                                        predicted.enumerator_string(), wd.enumerator_string());
        }));
    }
    return out;
}

std::vector<CheckResult> claim_lem_sdjoint7(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {32})) {
        out.push_back(with_cache(cfg, "lem-sdjoint7", q, 4, [&] {
            auto anchor = formula_anchor("lem-sdjoint7", q);
            auto cof = code_C_of_u(get_tower(q), 4);
            MinDistance md = cyclic_min_weight(cof, cfg.budget, cfg.workers);
            std::string expected = "d=" + std::to_string(q - 5) + " A=" + anchor.to_decimal();
            std::string computed = "d=" + std::to_string(md.d) + " A=" + md.count.to_decimal();
            return CheckResult::compare("lem-sdjoint7", {{"q", q}, {"u", 4}}, expected, computed);
        }));
    }
    return out;
}

std::vector<CheckResult> claim_nth2_36(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {7, 9, 11, 13, 17, 19, 25, 29})) {
        if (!u_selected(cfg, 4)) continue;
        if ((q + 1) / 2 < 4) continue;
        out.push_back(with_cache(cfg, "NTH2::36", q, 4, [&]() -> CheckResult {
            std::uint32_t expected_d;
            std::string branch;
            if ((q + 1) % 4 == 0) {
                expected_d = 4;
                branch = "4|(q+1)";
            } else if ((q - 1) % 4 == 0 && (q + 1) % 3 != 0) {
                expected_d = 5;
                branch = "4|(q-1), 3 does not divide (q+1)";
            } else if ((q - 1) % 4 == 0 && (q + 1) % 3 == 0 && q % 5 != 0) {
                expected_d = 5;
                branch = "4|(q-1), 3|(q+1), 5 does not divide q";
            } else {
                return CheckResult::skipped("NTH2::36", {{"q", q}, {"u", 4}},
                                            "minimum distance not settled for this q", false);
            }
            auto T = get_tower(q);
            auto bch = bch_narrow(T, 4);
            auto cof = code_C_of_u(T, 4);
            std::uint32_t d_bch = cyclic_min_weight(bch, cfg.budget, cfg.workers).d;
            std::uint32_t d_cof = cyclic_min_weight(cof, cfg.budget, cfg.workers).d;
            std::string expected = "bch " + nkd(q + 1, q - 5, expected_d) + " C(4) " +
                                   nkd(q + 1, 6, q - 5) + " [" + branch + "]";
            std::string computed = "bch " + nkd(bch.length(), bch.dimension(), d_bch) + " C(4) " +
                                   nkd(cof.length(), cof.dimension(), d_cof) + " [" + branch + "]";
            CheckResult r = CheckResult::compare("NTH2::36", {{"q", q}, {"u", 4}}, expected, computed);
            if (r.verdict != Verdict::Pass) return r;
            // dual of the extended code, through the full dual-route enumeration
            // when the budget allows it (17^7 messages at q = 17)
            auto ext = code_Cu(T, 4).code().extended();
            if (ext.distribution_within_budget(cfg.budget)) {
                auto wd_dual = macwilliams_transform(
                    ext.weight_distribution(cfg.budget, cfg.workers), q + 2, 7, q);
                std::uint32_t d_dual = static_cast<std::uint32_t>(wd_dual.min_positive_weight());
                r = CheckResult::compare(
                    "NTH2::36", {{"q", q}, {"u", 4}}, expected + " dual-ext d=" + std::to_string(expected_d + 1),
                    computed + " dual-ext d=" + std::to_string(d_dual));
            } else {
                std::uint32_t d_dual = ext.dual().min_distance(cfg.budget, cfg.workers).d;
                r = CheckResult::compare(
                    "NTH2::36", {{"q", q}, {"u", 4}}, expected + " dual-ext d=" + std::to_string(expected_d + 1),
                    computed + " dual-ext d=" + std::to_string(d_dual));
            }
            return r;
        }));
    }
    return out;
}

// ---- the half-(q-1) and half-(q+1) designed distances ----------------------

std::vector<CheckResult> claim_feb61(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {8, 16, 32})) {
        std::uint32_t u = q / 2 - 1;
        if (!u_selected(cfg, u)) continue;
        out.push_back(with_cache(cfg, "thm-feb61", q, u, [&] {
            auto T = get_tower(q);
            auto bch = bch_narrow(T, u);
            auto cof = code_C_of_u(T, u);
            std::uint32_t d_bch = cyclic_min_weight(bch, cfg.budget, cfg.workers).d;
            std::uint32_t d_cof = cyclic_min_weight(cof, cfg.budget, cfg.workers).d;
            bool witness_ok = bch_halfm_trace_form(*T) == bch.code();
            auto cw = construct_weight_q_minus_5_codeword(*T);
            std::string expected = "bch " + nkd(q + 1, 5, q - 5) + " C(u) " + nkd(q + 1, q - 4, 5) +
                                   " trace-form-match codeword-weight " + std::to_string(q - 5);
            std::string computed = "bch " + nkd(bch.length(), bch.dimension(), d_bch) + " C(u) " +
                                   nkd(cof.length(), cof.dimension(), d_cof) +
                                   (witness_ok ? " trace-form-match" : " trace-form-differs") +
                                   " codeword-weight " + std::to_string(cw.weight);
            return CheckResult::compare("thm-feb61", {{"q", q}, {"u", u}}, expected, computed);
        }));
    }
    return out;
}

std::vector<CheckResult> claim_feb62(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {8, 16, 32})) {
        std::uint32_t u = q / 2 - 1;
        if (!u_selected(cfg, u)) continue;
        out.push_back(with_cache(cfg, "thm-feb62", q, u, [&] {
            auto T = get_tower(q);
            auto cu = code_Cu(T, u);
            auto ext = cu.code().extended();
            auto ext_dual = ext.dual();
            MinDistance me = min_weight_with_lower_bound(ext, exact_d_cyclic(cu, cfg), cfg.budget, cfg.workers);
            MinDistance md = ext_dual.min_distance(cfg.budget, cfg.workers);
            return CheckResult::compare("thm-feb62", {{"q", q}, {"u", u}},
                                        nkd(q + 2, q - 3, 5) + " dual " + nkd(q + 2, 5, q - 4),
                                        nkd(ext.length(), ext.dimension(), me.d) + " dual " +
                                            nkd(ext_dual.length(), ext_dual.dimension(), md.d));
        }));
    }
    return out;
}

std::vector<CheckResult> claim_nlem32(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {4, 8, 16, 32})) {
        std::uint32_t u = q / 2;
        if (!u_selected(cfg, u)) continue;
        out.push_back(with_cache(cfg, "nlem:32", q, u, [&] {
            auto bch = bch_narrow(get_tower(q), u);
            std::uint32_t d = cyclic_min_weight(bch, cfg.budget, cfg.workers).d;
            auto v = classify(bch.code(), cfg.budget, d, 1, cfg.workers);
            return CheckResult::compare("nlem:32", {{"q", q}, {"u", u}},
                                        nkd(q + 1, 3, q - 1) + " MDS",
                                        nkd(bch.length(), bch.dimension(), v.d) + " " + to_string(v.cls));
        }));
    }
    return out;
}

std::vector<CheckResult> claim_sdjoint18(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {4, 8, 16, 32})) {
        std::uint32_t u = q / 2;
        if (!u_selected(cfg, u)) continue;
        out.push_back(with_cache(cfg, "thm-sdjoint18", q, u, [&] {
            auto T = get_tower(q);
            auto cu = code_Cu(T, u);
            auto du = cu.dual_cyclic();
            auto ext = cu.code().extended();
            auto ext_dual = ext.dual();
            std::uint32_t d1 = exact_d_cyclic(cu, cfg);
            std::uint32_t d2 = exact_d_cyclic(du, cfg);
            std::uint32_t d3 = min_weight_with_lower_bound(ext, d1, cfg.budget, cfg.workers).d;
            std::uint32_t d4 = ext_dual.min_distance(cfg.budget, cfg.workers).d;
            std::string expected = nkd(q + 1, q - 1, 3) + " " + nkd(q + 1, 2, q) + " " +
                                   nkd(q + 2, q - 1, 4) + " " + nkd(q + 2, 3, q) + " all MDS";
            bool all_mds = d1 == 3 && d2 == q && d3 == 4 && d4 == q;
            std::string computed = nkd(q + 1, cu.dimension(), d1) + " " + nkd(q + 1, du.dimension(), d2) +
                                   " " + nkd(q + 2, ext.dimension(), d3) + " " +
                                   nkd(q + 2, ext_dual.dimension(), d4) +
                                   (all_mds ? " all MDS" : " not all MDS");
            return CheckResult::compare("thm-sdjoint18", {{"q", q}, {"u", u}}, expected, computed);
        }));
    }
    return out;
}

// ---- witness lemmas ---------------------------------------------------------

std::vector<CheckResult> claim_nlem17(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, kGrid)) {
        out.push_back(with_cache(cfg, "NLEM::17", q, 3, [&] {
            auto T = get_tower(q);
            auto w = sigma2_quadruple_search(*T);
            std::uint32_t d = cyclic_min_weight(bch_narrow(T, 3), cfg.budget, cfg.workers).d;
            bool le4 = d <= 4;
            return CheckResult::compare(
                "NLEM::17", {{"q", q}, {"u", 3}},
                std::string("quadruple ") + (le4 ? "exists" : "absent") + " (d=" + std::to_string(d) + ")",
                std::string("quadruple ") + (w.found ? "exists" : "absent") + " (d=" + std::to_string(d) + ")");
        }));
    }
    return out;
}

std::vector<CheckResult> claim_neq21(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {4, 8, 9, 16})) {
        out.push_back(with_cache(cfg, "NEQ21", q, 0, [&] {
            auto T = get_tower(q);
            auto circle = T->unit_circle();
            std::mt19937 rng(q * 7919u + 17u);  // fixed seed per q for reproducible reports
            int checked = 0, agreed = 0;
            while (checked < 100) {
                std::uint32_t a = rng() % (q + 1), b = rng() % (q + 1), c = rng() % (q + 1),
                              d = rng() % (q + 1);
                if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                ++checked;
                agreed += det_identity_check(*T, circle[a], circle[b], circle[c], circle[d]);
            }
            // a vanishing sigma2 forces a vanishing determinant
            auto w = sigma2_quadruple_search(*T);
            bool det_zero_ok = true;
            if (w.found)
                det_zero_ok = det_identity_check(*T, circle[w.exponents[0]], circle[w.exponents[1]],
                                                 circle[w.exponents[2]], circle[w.exponents[3]]);
            return CheckResult::compare("NEQ21", {{"q", q}, {"u", 0}}, "100/100 identities hold",
                                        std::to_string(agreed) + "/100 identities hold" +
                                            (det_zero_ok ? "" : " (sigma2 witness failed)"));
        }));
    }
    return out;
}

std::vector<CheckResult> claim_nlem2_33(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {9, 13, 17, 25, 29, 49})) {
        out.push_back(with_cache(cfg, "NLEM2::33", q, 4, [&]() -> CheckResult {
            auto T = get_tower(q);
            auto w = sigma52_quintuple_search(*T);
            if (!w.applicable)
                return CheckResult::skipped("NLEM2::33", {{"q", q}, {"u", 4}},
                                            "needs odd q with 4 | (q-1)", false);
            std::uint32_t d = cyclic_min_weight(bch_narrow(T, 4), cfg.budget, cfg.workers).d;
            return CheckResult::compare(
                "NLEM2::33", {{"q", q}, {"u", 4}},
                std::string("quintuple ") + (d == 5 ? "exists" : "absent") + " (d=" + std::to_string(d) + ")",
                std::string("quintuple ") + (w.found ? "exists" : "absent") + " (d=" + std::to_string(d) + ")");
        }));
    }
    return out;
}

std::vector<CheckResult> claim_trace_suite(const RunConfig& cfg, const std::string& id,
                                           bool parts123) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {9, 13, 17, 25, 29, 49})) {
        out.push_back(with_cache(cfg, id, q, 0, [&]() -> CheckResult {
            auto suite = trace_identity_suite(*get_tower(q));
            std::string expected, computed;
            for (const auto& part : suite) {
                bool mine = parts123 ? part.lemma.rfind("nlem30::33", 0) == 0
                                     : part.lemma.rfind("NLEM::34", 0) == 0;
                if (!mine) continue;
                if (!part.applicable) {
                    expected += part.lemma + ":n/a ";
                    computed += part.lemma + ":n/a ";
                } else {
                    expected += part.lemma + ":pass ";
                    computed += part.lemma + (part.found ? ":pass " : ":fail ");
                }
            }
            return CheckResult::compare(id, {{"q", q}, {"u", 0}}, expected, computed);
        }));
    }
    return out;
}

std::vector<CheckResult> claim_tr_pair(const RunConfig& cfg, const std::string& id) {
    std::vector<std::uint32_t> defaults =
        id == "NLEM::35" ? std::vector<std::uint32_t>{9, 13, 25, 49} : std::vector<std::uint32_t>{17, 29};
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, defaults)) {
        out.push_back(with_cache(cfg, id, q, 0, [&]() -> CheckResult {
            auto w = tr_pair_search(*get_tower(q));
            if (!w.applicable || w.lemma != id)
                return CheckResult::skipped(id, {{"q", q}, {"u", 0}},
                                            "hypotheses of " + id + " not met at q=" + std::to_string(q),
                                            false);
            return CheckResult::compare(id, {{"q", q}, {"u", 0}}, "pair exists",
                                        w.found ? "pair exists" : "no pair");
        }));
    }
    // the explicit pair when 5 | (q+1) must verify as stated
    for (std::uint32_t q : q_list(cfg, id == "NLEM::35" ? std::vector<std::uint32_t>{9, 49}
                                                        : std::vector<std::uint32_t>{29})) {
        out.push_back(with_cache(cfg, id + "/explicit-pair", q, 0, [&]() -> CheckResult {
            if ((q + 1) % 5 != 0)
                return CheckResult::skipped(id + "/explicit-pair", {{"q", q}, {"u", 0}},
                                            "needs 5 | (q+1)", false);
            auto w = tr_pair_search(*get_tower(q));
            return CheckResult::compare(id + "/explicit-pair", {{"q", q}, {"u", 0}},
                                        "explicit (q+1)/5 pair",
                                        w.found ? w.detail : "no pair");
        }));
    }
    return out;
}

std::vector<CheckResult> claim_nlem27_36(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {8, 16, 32})) {
        out.push_back(with_cache(cfg, "nlem27:36", q, 0, [&] {
            auto w = tr_triple_search_char2(*get_tower(q));
            return CheckResult::compare("nlem27:36", {{"q", q}, {"u", 0}}, "triple exists",
                                        w.found ? "triple exists" : "no triple");
        }));
    }
    return out;
}

// ---- the binary subfield-code table ----------------------------------------

struct Table1Row {
    std::uint32_t u, m, n, k, d;
};
const std::vector<Table1Row> kTable1{
    {2, 3, 10, 7, 2},  {3, 3, 10, 7, 2},  {2, 4, 18, 9, 6},   {3, 4, 18, 9, 6},
    {2, 5, 34, 11, 12}, {3, 5, 34, 11, 12}, {2, 6, 66, 13, 26}, {3, 6, 66, 13, 26},
    {4, 3, 10, 9, 2},  {4, 4, 18, 17, 2}, {4, 5, 34, 21, 4},  {4, 6, 66, 25, 16},
};

std::vector<CheckResult> claim_table1_rows(const RunConfig& cfg, const std::vector<std::uint32_t>& ms) {
    std::vector<CheckResult> out;
    for (const auto& row : kTable1) {
        if (!ms.empty() && std::find(ms.begin(), ms.end(), row.m) == ms.end()) continue;
        if (!u_selected(cfg, row.u)) continue;
        std::uint32_t q = 1u << row.m;
        if (cfg.q_max > 0 && q > cfg.q_max) continue;
        std::string claim = "table1:m=" + std::to_string(row.m) + ",u=" + std::to_string(row.u);
        out.push_back(with_cache(cfg, claim, q, row.u, [&] {
            auto ext = code_Cu(get_tower(q), row.u).code().extended();
            auto tc = ext.trace_code();
            MinDistance md = tc.min_distance(cfg.budget, cfg.workers);
            return CheckResult::compare(claim, {{"q", q}, {"u", row.u}, {"m", row.m}},
                                        nkd(row.n, row.k, row.d),
                                        nkd(tc.length(), tc.dimension(), md.d));
        }));
    }
    return out;
}

std::vector<CheckResult> claim_table1(const RunConfig& cfg) {
    return claim_table1_rows(cfg, {});
}

// Experiment stub for the open q = 5^m case of the designed-distance-4 code:
// a sigma_{5,2} quintuple would pin d = 5. Not an acceptance item; runs only
// when named explicitly.
std::vector<CheckResult> claim_conjecture_5m(const RunConfig& cfg) {
    std::vector<CheckResult> out;
    for (std::uint32_t q : q_list(cfg, {125})) {
        out.push_back(with_cache(cfg, "conjecture-5m", q, 4, [&]() -> CheckResult {
            if (q % 2 == 0 || (q - 1) % 4 != 0)
                return CheckResult::skipped("conjecture-5m", {{"q", q}, {"u", 4}},
                                            "needs odd q with 4 | (q-1)", false);
            auto T = get_tower(q);
            auto pair = tr_pair_search(*T);
            if (!pair.found) {
                // the exhaustive fallback walks C(q+1, 5) quintuples
                BigUint tuples = binomial(q + 1, 5);
                if (!tuples.fits_u64() || tuples.to_u64() > cfg.budget)
                    return CheckResult::skipped("conjecture-5m", {{"q", q}, {"u", 4}},
                                                "exhaustive quintuple search exceeds the budget",
                                                true);
            }
            auto w = sigma52_quintuple_search(*T);
            return CheckResult::compare("conjecture-5m", {{"q", q}, {"u", 4}},
                                        "quintuple exists, so d(bch(q,4)) = 5",
                                        w.found ? "quintuple exists, so d(bch(q,4)) = 5"
                                                : "no quintuple found");
        }));
    }
    return out;
}

}  // namespace

std::vector<CheckResult> run_table1(const RunConfig& cfg, const std::vector<std::uint32_t>& ms) {
    return claim_table1_rows(cfg, ms);
}

const std::vector<ClaimSpec>& claim_registry() {
    static const std::vector<ClaimSpec> registry{
        {"thm-sdjoin1", "classical family parameters and reversibility", claim_sdjoin1},
        {"thm-fund21jproj", "extended-dual distance equals BCH distance plus one", claim_fund21jproj},
        {"NTHM29:1", "extended code and C(u) share distance and count", claim_nthm29},
        {"nthm:11", "divisibility branches for the extended parameters", claim_nthm11},
        {"nthm:13", "u = p^s branch for the extended parameters", claim_nthm13},
        {"Cor9::1", "odd q: extend(C_2) is NMDS", claim_cor9},
        {"thm-sdjoint2", "even q: extend(C_2) is a hyperoval-type MDS code", claim_sdjoint2},
        {"NTHM:17", "designed distance 3 branches", claim_nthm17},
        {"NTHM18", "extend(C_3) parameter branches", claim_nthm18},
        {"thm-sdjoint3", "extend(C_3) distribution, even degree", claim_sdjoint3},
        {"lem-sdjoint3", "C(3) distribution, even degree", claim_lem_sdjoint3},
        {"NTHM23", "extend(C_3) distribution over characteristic 3", claim_nthm23},
        {"nlem20", "C(3) distribution over characteristic 3", claim_nlem20},
        {"thm-sdjoint4", "extend(C_4) parameters and distribution", claim_sdjoint4},
        {"lem-sdjoint7", "C(4) minimum-weight anchor, odd degree", claim_lem_sdjoint7},
        {"NTH2::36", "designed distance 4 branch table", claim_nth2_36},
        {"thm-feb61", "u = q/2-1 BCH code and the constructed codeword", claim_feb61},
        {"thm-feb62", "u = q/2-1 extended parameters", claim_feb62},
        {"nlem:32", "u = q/2 BCH code is MDS", claim_nlem32},
        {"thm-sdjoint18", "u = q/2 family is MDS throughout", claim_sdjoint18},
        {"NLEM::17", "sigma2 quadruples match the distance criterion", claim_nlem17},
        {"NEQ21", "determinant identity on random quadruples", claim_neq21},
        {"NLEM2::33", "sigma_{5,2} quintuples match the distance criterion", claim_nlem2_33},
        {"nlem30::33", "trace value facts", [](const RunConfig& c) { return claim_trace_suite(c, "nlem30::33", true); }},
        {"NLEM::34", "trace power and inverse sums", [](const RunConfig& c) { return claim_trace_suite(c, "NLEM::34", false); }},
        {"NLEM::35", "trace pair existence, 3 coprime case", [](const RunConfig& c) { return claim_tr_pair(c, "NLEM::35"); }},
        {"NLEM9:11", "trace pair existence, prime case", [](const RunConfig& c) { return claim_tr_pair(c, "NLEM9:11"); }},
        {"nlem27:36", "trace triple existence in characteristic 2", claim_nlem27_36},
        {"table1", "binary subfield-code parameters", claim_table1},
        {"conjecture-5m", "open q = 5^m quintuple experiment", claim_conjecture_5m, true},
    };
    return registry;
}

std::vector<CheckResult> run_claims(const RunConfig& cfg, const std::vector<std::string>& ids) {
    const auto& registry = claim_registry();
    std::vector<const ClaimSpec*> selected;
    bool all = ids.empty() || (ids.size() == 1 && ids.front() == "all");
    if (all) {
        for (const auto& spec : registry)
            if (!spec.opt_in) selected.push_back(&spec);
    } else {
        for (const auto& id : ids) {
            auto it = std::find_if(registry.begin(), registry.end(),
                                   [&](const ClaimSpec& s) { return s.id == id; });
            if (it == registry.end()) throw PreconditionError("unknown claim id: " + id);
            selected.push_back(&*it);
        }
    }
    std::vector<CheckResult> out;
    for (const ClaimSpec* spec : selected) {
        auto rs = spec->run(cfg);
        out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
}

}  // namespace extmds
