// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are pinned here; the only enumerations above the default
// 10^8 budget are the q = 17 dual route (17^7 messages) and the GF(16)
// classical-family distributions (up to 16^8 messages).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "extmds/claims.hpp"
#include "extmds/family.hpp"
#include "extmds/lemmas.hpp"
#include "extmds/lrc.hpp"
#include "extmds/spectra.hpp"
#include "oracles.hpp"

using namespace extmds;

namespace {

constexpr std::uint64_t kDefaultBudget = 100000000;     // 10^8 messages
constexpr std::uint64_t kDualRouteBudget = 450000000;   // covers 17^7
constexpr std::uint64_t kGridSpectraBudget = 6000000000;  // covers 16^8

const std::vector<std::uint32_t> kGrid{4, 5, 7, 8, 9, 11, 13, 16};

unsigned workers() {
    if (const char* env = std::getenv("EXTMDS_ACCEPT_WORKERS")) return std::atoi(env);
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

bool all_pass(const std::vector<CheckResult>& rs, std::ostream& log, std::size_t expect_count = 0) {
    bool ok = true;
    for (const auto& r : rs) {
        if (r.verdict != Verdict::Pass) {
            ok = false;
            log << "    " << r.claim;
            for (auto& [k, v] : r.params) log << " " << k << "=" << v;
            log << ": " << to_string(r.verdict) << " expected{" << r.expected << "} computed{"
                << r.computed << "}\n";
        }
    }
    if (expect_count && rs.size() != expect_count) {
        log << "    expected " << expect_count << " checks, saw " << rs.size() << "\n";
        ok = false;
    }
    return ok;
}

// ---- criterion 1 -------------------------------------------------------------

bool criterion1(std::ostream& log) {
    RunConfig cfg;
    cfg.budget = kDefaultBudget;
    cfg.workers = workers();
    return all_pass(run_claims(cfg, {"thm-sdjoin1"}), log, 39);
}

// ---- criterion 2 -------------------------------------------------------------

bool criterion2(std::ostream& log) {
    struct Want {
        std::uint32_t q, u;
        const char* enumerator;
    };
    const std::vector<Want> wants{
        {8, 2, "1 + 315z^8 + 196z^10"},
        {16, 3,
         "1 + 2040z^13 + 35700z^14 + 44880z^15 + 257295z^16 + 377400z^17 + 331260z^18"},
        {9, 3, "1 + 240z^6 + 1440z^7 + 5040z^8 + 13880z^9 + 22320z^10 + 16128z^11"},
    };
    bool ok = true;
    for (const auto& w : wants) {
        auto ext = code_Cu(get_tower(w.q), w.u).code().extended();
        auto wd = ext.weight_distribution_exhaustive(1 << 21, workers());
        if (wd.enumerator_string() != w.enumerator) {
            ok = false;
            log << "    q=" << w.q << " u=" << w.u << ": got " << wd.enumerator_string() << "\n";
        }
    }
    return ok;
}

// ---- criterion 3 -------------------------------------------------------------

bool criterion3(std::ostream& log) {
    RunConfig cfg;
    cfg.budget = kDefaultBudget;
    cfg.workers = workers();
    bool a = all_pass(run_claims(cfg, {"thm-fund21jproj"}), log, 31);
    bool b = all_pass(run_claims(cfg, {"NTHM29:1"}), log, 31);
    return a && b;
}

// ---- criterion 4 -------------------------------------------------------------

bool criterion4(std::ostream& log) {
    bool ok = true;
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> branch{
        {7, 4}, {11, 4}, {19, 4}, {9, 5}, {13, 5}, {17, 5}};
    for (auto [q, want] : branch) {
        auto bch = bch_narrow(get_tower(q), 4);
        std::uint32_t d = cyclic_min_weight(bch, kDefaultBudget, workers()).d;
        if (d != want) {
            ok = false;
            log << "    d(bch(" << q << ",4)) = " << d << ", expected " << want << "\n";
        }
    }
    // q = 17 through the full dual route at elevated budget
    RunConfig cfg;
    cfg.qs = {17};
    cfg.budget = kDualRouteBudget;
    cfg.workers = workers();
    ok &= all_pass(run_claims(cfg, {"NTH2::36"}), log, 1);
    return ok;
}

// ---- criterion 5 -------------------------------------------------------------

bool criterion5(std::ostream& log) {
    bool ok = true;
    unsigned w = workers();
    auto check_mds = [&](const LinearCode& code, const char* label, std::uint32_t q,
                         std::uint32_t u, std::uint64_t budget) {
        auto wd = code.weight_distribution(budget, w);
        auto predicted = mds_weight_formula(code.length(), code.dimension(), q);
        if (!(wd == predicted)) {
            ok = false;
            log << "    " << label << " q=" << q << " u=" << u << ": formula mismatch\n";
        }
    };
    for (std::uint32_t q : kGrid) {
        auto T = get_tower(q);
        for (std::uint32_t u = 1; u <= (q + 1) / 2; ++u) {
            auto cu = code_Cu(T, u);
            check_mds(cu.code(), "C_u", q, u, kGridSpectraBudget);
            check_mds(cu.code().dual(), "dual", q, u, kGridSpectraBudget);
            // extended codes: MDS ones against the closed form, NMDS ones
            // against the anchored reconstruction (u = 2, 3 per the settled
            // cases; larger u are out of reach of both)
            if (u > 3 && u != q / 2) continue;
            auto ext = cu.code().extended();
            std::uint32_t n = ext.length(), k = ext.dimension();
            if (std::min(enumeration_cost(q, k), enumeration_cost(q, n - k)) > kDefaultBudget)
                continue;
            auto wd = ext.weight_distribution(kDefaultBudget, w);
            auto dual_wd = enumeration_cost(q, n - k) <= kDefaultBudget
                               ? ext.dual().weight_distribution_exhaustive(kDefaultBudget, w)
                               : macwilliams_transform(wd, n, k, q);
            std::uint32_t d = static_cast<std::uint32_t>(wd.min_positive_weight());
            std::uint32_t dd = static_cast<std::uint32_t>(dual_wd.min_positive_weight());
            if (d == n - k + 1) {
                auto predicted = mds_weight_formula(n, k, q);
                if (!(wd == predicted)) {
                    ok = false;
                    log << "    ext q=" << q << " u=" << u << ": MDS formula mismatch\n";
                }
            } else if (d == n - k && dd == k) {  // NMDS
                auto pred = nmds_weight_from_anchor(n, k, q, wd.count(n - k), dual_wd.count(k));
                if (!(pred.code == wd) || !(pred.dual == dual_wd)) {
                    ok = false;
                    log << "    ext q=" << q << " u=" << u << ": anchored reconstruction mismatch\n";
                }
            }
        }
    }
    // q = 32, u = 4: closed form against the printed coefficients only
    RunConfig cfg;
    cfg.qs = {32};
    cfg.budget = kDefaultBudget;
    cfg.workers = w;
    ok &= all_pass(run_claims(cfg, {"thm-sdjoint4"}), log, 1);
    return ok;
}

// ---- criterion 6 -------------------------------------------------------------

bool criterion6(std::ostream& log) {
    RunConfig cfg;
    cfg.budget = kDefaultBudget;
    cfg.workers = workers();
    bool ok = all_pass(run_claims(cfg, {"thm-feb61"}), log, 3);   // includes g_{a,b,c}
    ok &= all_pass(run_claims(cfg, {"thm-feb62"}), log, 3);
    ok &= all_pass(run_claims(cfg, {"thm-sdjoint18"}), log, 4);
    ok &= all_pass(run_claims(cfg, {"nlem:32"}), log, 4);
    return ok;
}

// ---- criterion 7 -------------------------------------------------------------

bool criterion7(std::ostream& log) {
    RunConfig cfg;
    cfg.budget = kDefaultBudget;
    cfg.workers = workers();
    return all_pass(run_table1(cfg, {3, 4, 5, 6}), log, 12);
}

// ---- criterion 8 -------------------------------------------------------------

bool criterion8(std::ostream& log) {
    RunConfig cfg;
    cfg.budget = kDefaultBudget;
    cfg.workers = workers();
    bool ok = true;
    for (const char* id :
         {"nlem30::33", "NLEM::34", "NEQ21", "NLEM::17", "NLEM2::33", "NLEM::35", "NLEM9:11",
          "nlem27:36"})
        ok &= all_pass(run_claims(cfg, {id}), log);
    return ok;
}

// ---- criterion 9 -------------------------------------------------------------

bool criterion9(std::ostream& log) {
    bool ok = true;
    unsigned w = workers();
    auto fail = [&](const std::string& msg) {
        ok = false;
        log << "    " << msg << "\n";
    };
    for (std::uint32_t q : kGrid) {
        auto T = get_tower(q);
        for (std::uint32_t u = 1; u <= (q + 1) / 2; ++u) {
            FamilyInstance fam = build_family(q, u);
            std::vector<std::pair<std::string, const LinearCode*>> codes{
                {"C_u", &fam.cu.code()}, {"dual", &fam.cu_dual}, {"ext", &fam.cu_ext},
                {"ext_dual", &fam.cu_ext_dual}};
            if (fam.bch) codes.emplace_back("bch", &fam.bch->code());
            if (fam.c_of_u) codes.emplace_back("C(u)", &fam.c_of_u->code());
            for (auto& [name, code] : codes) {
                if (!(code->dual().dual() == *code))
                    fail("dual involution failed on " + name + " q=" + std::to_string(q) +
                         " u=" + std::to_string(u));
                std::uint32_t n = code->length(), k = code->dimension();
                if (std::min(enumeration_cost(q, k), enumeration_cost(q, n - k)) <= 1000000) {
                    if (code->min_distance(1000000, w).d > n - k + 1)
                        fail("Singleton violated on " + name);
                }
                if (enumeration_cost(q, std::min(k, n - k)) <= 1000000 &&
                    enumeration_cost(q, k) <= 1000000 && enumeration_cost(q, n - k) <= 1000000) {
                    auto lhs = macwilliams_transform(code->weight_distribution_exhaustive(1000000, w),
                                                     n, k, q);
                    auto rhs = code->dual().weight_distribution_exhaustive(1000000, w);
                    if (!(lhs == rhs))
                        fail("MacWilliams round trip failed on " + name + " q=" + std::to_string(q) +
                             " u=" + std::to_string(u));
                }
            }
            // all-one vector is in C_u, so the dual of its extension is the
            // augmented extension of its dual
            if (!(fam.cu_ext_dual == fam.cu_dual.extended().augmented()))
                fail("mixed-operation identity failed at q=" + std::to_string(q) +
                     " u=" + std::to_string(u));
            // extension/augmentation commute in characteristic 2 (length q+1
            // is -1 mod 2); checked on C(u), which misses the all-one vector
            if (q % 2 == 0 && fam.c_of_u) {
                const LinearCode& c = fam.c_of_u->code();
                if (!(c.augmented().extended() == c.extended().augmented()))
                    fail("extend/augment commute failed at q=" + std::to_string(q) +
                         " u=" + std::to_string(u));
            }
            // every extended codeword sums to zero, at small scale
            if (enumeration_cost(q, fam.cu_ext.dimension()) <= 100000) {
                for (const auto& word : testing::all_codewords(fam.cu_ext)) {
                    felem s = 0;
                    for (felem x : word) s = T->base()->add(s, x);
                    if (s != 0) {
                        fail("extended codeword with nonzero sum at q=" + std::to_string(q));
                        break;
                    }
                }
            }
        }
        // odd characteristic: the commute law on cyclic codes of length q-1,
        // which is -1 mod p since p divides q
        if (q % 2 == 1) {
            auto F = get_field(q);
            std::uint32_t n = q - 1;
            felem zeta = F->generator();  // order q-1
            auto linear_factor = [&](std::uint32_t i) {
                return Poly(F, {F->neg(F->pow(zeta, i)), 1});
            };
            std::vector<std::vector<std::uint32_t>> samples{{0}, {1}, {0, 1, 2}, {1, 3}};
            for (const auto& S : samples) {
                if (S.size() >= n) continue;
                Poly g = Poly::one(F);
                for (auto i : S) g = g * linear_factor(i);
                std::uint32_t k = n - static_cast<std::uint32_t>(g.degree());
                std::vector<std::vector<felem>> rows(k, std::vector<felem>(n, 0));
                for (std::uint32_t r = 0; r < k; ++r)
                    for (int j = 0; j <= g.degree(); ++j) rows[r][(r + j) % n] = g.coeffs()[j];
                auto c = LinearCode::from_generator(F, rows);
                if (!(c.augmented().extended() == c.extended().augmented()))
                    fail("extend/augment commute failed on length " + std::to_string(n) +
                         " over GF(" + std::to_string(q) + ")");
            }
        }
    }
    return ok;
}

// ---- criterion 10 ------------------------------------------------------------

bool criterion10(std::ostream& log) {
    bool ok = true;
    unsigned w = workers();
    auto fail = [&](const std::string& msg) {
        ok = false;
        log << "    " << msg << "\n";
    };
    for (std::uint32_t q : kGrid) {
        auto T = get_tower(q);
        for (std::uint32_t u = 1; u <= (q + 1) / 2; ++u) {
            auto cu = code_Cu(T, u);
            std::string at = " at q=" + std::to_string(q) + " u=" + std::to_string(u);
            auto rep = linear_locality(cu.code(), kDefaultBudget, q - 2 * u + 3, w);
            if (rep.r != cu.dimension() || rep.verdict != LrcVerdict::DOptimal)
                fail("C_u locality r=" + std::to_string(rep.r) + " gap=" + std::to_string(rep.gap) + at);
            auto repd = linear_locality(cu.code().dual(), kDefaultBudget, 2 * u, w);
            if (repd.r != q + 2 - 2 * u || repd.verdict != LrcVerdict::DOptimal)
                fail("dual locality r=" + std::to_string(repd.r) + " gap=" + std::to_string(repd.gap) + at);
            // NMDS extended codes carry a gap of at most one
            if (u == 2 || u == 3) {
                auto ext = cu.code().extended();
                auto v = classify(ext, kDefaultBudget, q - 2 * u + 3, 1, w);
                if (v.is_nmds()) {
                    auto re = linear_locality(ext, kDefaultBudget, v.d, w);
                    if (re.gap != 0 && re.gap != 1)
                        fail("NMDS gap " + std::to_string(re.gap) + at);
                }
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "classical family grid: parameters, duals, reversibility", criterion1},
        {2, "worked weight enumerators reproduced exactly", criterion2},
        {3, "extended-dual distance law and extended/C(u) agreement", criterion3},
        {4, "designed-distance-4 branch table with the q=17 dual route", criterion4},
        {5, "closed forms against exhaustive distributions", criterion5},
        {6, "half-(q-1) and half-(q+1) families and the constructed codeword", criterion6},
        {7, "binary subfield-code table rows", criterion7},
        {8, "trace and symmetric-function lemma suite", criterion8},
        {9, "algebraic property suite", criterion9},
        {10, "locality and the Singleton-like bound", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
                  << secs << "s)\n";
        if (!ok) {
            std::cout << log.str();
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
