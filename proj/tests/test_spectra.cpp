#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extmds/family.hpp"
#include "extmds/spectra.hpp"
#include "oracles.hpp"

using namespace extmds;

TEST_CASE("MDS weight formula") {
    // [5,3,3] over GF(4): cross-checked against exhaustive enumeration of C_2
    auto c2 = code_Cu(get_tower(4), 2);
    auto exhaustive = c2.code().weight_distribution_exhaustive(100);
    auto formula = mds_weight_formula(5, 3, 4);
    CHECK(formula == exhaustive);
    CHECK(formula.count(3) == BigUint(30));
    CHECK(formula.count(4) == BigUint(15));
    CHECK(formula.count(5) == BigUint(18));
    CHECK(formula.total() == BigUint(64));

    // the full space is MDS with d = 1
    auto full = mds_weight_formula(4, 4, 3);
    CHECK(full.total() == BigUint::pow(3, 4));
    CHECK(full.count(1) == BigUint(8));  // C(4,1)(q-1)

    // [10,3,8] over GF(8)
    auto h = mds_weight_formula(10, 3, 8);
    CHECK(h.count(8) == BigUint(315));
    CHECK(h.count(9) == BigUint(0));
    CHECK(h.count(10) == BigUint(196));
}

TEST_CASE("NMDS anchor formulas reproduce full enumerated distributions") {
    // extend(C_3) over GF(9): [11,5,6] NMDS
    auto fam = build_family(9, 3);
    auto wc = fam.cu_ext.weight_distribution_exhaustive(1 << 20);
    auto wd = fam.cu_ext_dual.weight_distribution_exhaustive(1 << 21);
    REQUIRE(wc.min_positive_weight() == 6);
    REQUIRE(wd.min_positive_weight() == 5);
    auto pred = nmds_weight_from_anchor(11, 5, 9, wc.count(6), wd.count(5));
    CHECK(pred.code == wc);
    CHECK(pred.dual == wd);

    // degenerate top term s = k reproduces the enumerated A_n
    CHECK(pred.code.count(11) == wc.count(11));

    // anchored with the settled coefficient, [18,5,16] gives thm-sdjoint3
    auto viaanchor = nmds_weight_from_anchor(18, 5, 16, BigUint(2040), BigUint(1));
    CHECK(viaanchor.code.count(14) == BigUint(35700));
    CHECK(viaanchor.code.count(18) == BigUint(331260));

    CHECK_THROWS_AS(nmds_weight_from_anchor(11, 5, 9, BigUint(0), BigUint(1)), PreconditionError);
}

TEST_CASE("classification") {
    auto f9 = build_family(9, 2);
    auto v9 = classify(f9.cu_ext, 1 << 20);
    CHECK(v9.is_nmds());
    CHECK(v9.d == 8);
    CHECK(v9.d_dual == 3);

    auto f8 = build_family(8, 2);
    auto v8 = classify(f8.cu_ext, 1 << 20);
    CHECK(v8.is_mds());
    CHECK(v8.d == 8);
    CHECK(v8.note == "hyperoval code");

    auto rep = LinearCode::from_generator(get_field(7), {{1, 1, 1, 1, 1}});
    CHECK(classify(rep, 1000).is_mds());

    // [18,7,11] over GF(16) is AMDS but its dual [18,11,6] is not; the
    // extension bound d(ext) >= d(C_4) seeds the scan
    auto f164 = build_family(16, 4);
    auto d_cu = cyclic_min_weight(f164.cu, 1 << 26).d;
    auto v164 = classify(f164.cu_ext, 1 << 26, d_cu);
    CHECK(v164.cls == CodeClass::AMDS_only);
    CHECK(v164.d == 11);
    CHECK(v164.d_dual == 6);
}

TEST_CASE("closed-form distributions match the worked coefficient lists") {
    auto t3 = formula_distribution("thm-sdjoint3", 16);
    CHECK(t3.count(13) == BigUint(2040));
    CHECK(t3.count(14) == BigUint(35700));
    CHECK(t3.count(15) == BigUint(44880));
    CHECK(t3.count(16) == BigUint(257295));
    CHECK(t3.count(17) == BigUint(377400));
    CHECK(t3.count(18) == BigUint(331260));

    auto n23 = formula_distribution("NTHM23", 9);
    CHECK(n23.count(6) == BigUint(240));
    CHECK(n23.count(7) == BigUint(1440));
    CHECK(n23.count(8) == BigUint(5040));
    CHECK(n23.count(9) == BigUint(13880));
    CHECK(n23.count(10) == BigUint(22320));
    CHECK(n23.count(11) == BigUint(16128));

    auto t4 = formula_distribution("thm-sdjoint4", 32);
    CHECK(t4.count(27) == BigUint(1014816));
    CHECK(t4.count(28) == BigUint(34588312));
    CHECK(t4.count(29) == BigUint(55814880));
    CHECK(t4.count(30) == BigUint(686184752));
    CHECK(t4.count(31) == BigUint(2244500192ull));
    CHECK(t4.count(32) == BigUint(6875142087ull));
    CHECK(t4.count(33) == BigUint(12784990240ull));
    CHECK(t4.count(34) == BigUint(11677503088ull));
    CHECK(t4.total() == BigUint::pow(32, 7));

    auto t2 = formula_distribution("thm-sdjoint2", 8);
    CHECK(t2.count(8) == BigUint(315));
    CHECK(t2.count(10) == BigUint(196));
}

TEST_CASE("closed forms match exhaustive enumeration where enumerable") {
    auto f163 = build_family(16, 3);
    CHECK(formula_distribution("thm-sdjoint3", 16) ==
          f163.cu_ext.weight_distribution_exhaustive(1 << 21));
    CHECK(formula_distribution("lem-sdjoint3", 16) ==
          f163.c_of_u->code().weight_distribution_exhaustive(1 << 17));

    auto f93 = build_family(9, 3);
    CHECK(formula_distribution("NTHM23", 9) == f93.cu_ext.weight_distribution_exhaustive(1 << 17));
    CHECK(formula_distribution("nlem20", 9) ==
          f93.c_of_u->code().weight_distribution_exhaustive(1 << 13));

    for (std::uint32_t q : {4u, 8u, 16u}) {
        auto f = build_family(q, 2);
        CHECK(formula_distribution("thm-sdjoint2", q) ==
              f.cu_ext.weight_distribution_exhaustive(1 << 13));
    }
}

TEST_CASE("anchor formula for C(4) in odd characteristic-2 degree") {
    CHECK(formula_anchor("lem-sdjoint7", 32) == BigUint(1014816));
    // consistency: equals A_{q-5} of the extended-code distribution
    CHECK(formula_anchor("lem-sdjoint7", 32) == formula_distribution("thm-sdjoint4", 32).count(27));
    CHECK_THROWS_AS(formula_anchor("lem-sdjoint7", 16), HypothesisError);
}

TEST_CASE("hypothesis violations are rejected") {
    CHECK_THROWS_AS(formula_distribution("thm-sdjoint3", 32), HypothesisError);  // m odd
    CHECK_THROWS_AS(formula_distribution("thm-sdjoint3", 8), HypothesisError);   // m = 3
    CHECK_THROWS_AS(formula_distribution("NTHM23", 8), HypothesisError);
    CHECK_THROWS_AS(formula_distribution("thm-sdjoint4", 16), HypothesisError);  // m even
    CHECK_THROWS_AS(formula_distribution("thm-sdjoint2", 9), HypothesisError);
    CHECK_THROWS_AS(formula_distribution("no-such-family", 8), PreconditionError);
}
