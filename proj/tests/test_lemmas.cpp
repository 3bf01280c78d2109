#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "extmds/family.hpp"
#include "extmds/lemmas.hpp"

using namespace extmds;

TEST_CASE("sigma2 quadruple search") {
    auto w9 = sigma2_quadruple_search(*get_tower(9));
    CHECK(w9.found);
    CHECK(w9.search_size <= 210);  // C(10,4)

    // the witness satisfies the equation when recomputed here
    auto T = get_tower(9);
    auto circle = T->unit_circle();
    const Field& top = *T->top();
    felem s = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            s = top.add(s, top.mul(circle[w9.exponents[a]], circle[w9.exponents[b]]));
    CHECK(s == 0);

    SUBCASE("q = 13: the construction y = -x, w = x^2 z^-1 works") {
        auto t13 = get_tower(13);
        const Field& tp = *t13->top();
        felem x = t13->beta(), z = t13->beta_pow(2);
        felem y = tp.neg(x), w = tp.mul(tp.mul(x, x), tp.inv(z));
        std::array<felem, 4> e{x, y, z, w};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) CHECK(e[i] != e[j]);
        felem sig = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) sig = tp.add(sig, tp.mul(e[i], e[j]));
        CHECK(sig == 0);
        CHECK(sigma2_quadruple_search(*t13).found);
    }

    SUBCASE("q = 4: no quadruple, and the designed-distance-3 code has d = 5") {
        auto w4 = sigma2_quadruple_search(*get_tower(4));
        CHECK(!w4.found);
        auto bch = bch_narrow(get_tower(4), 3);
        CHECK(cyclic_min_weight(bch, 10000).d == 5);
    }
}

TEST_CASE("determinant identity") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u}) {
        auto T = get_tower(q);
        auto circle = T->unit_circle();
        std::mt19937 rng(q);
        int checked = 0;
        while (checked < 100) {
            std::uint32_t a = rng() % (q + 1), b = rng() % (q + 1), c = rng() % (q + 1),
                          d = rng() % (q + 1);
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            ++checked;
            CHECK(det_identity_check(*T, circle[a], circle[b], circle[c], circle[d]));
        }
    }
    auto T = get_tower(8);
    auto circle = T->unit_circle();
    CHECK_THROWS_AS(det_identity_check(*T, circle[1], circle[1], circle[2], circle[3]),
                    PreconditionError);
}

TEST_CASE("sigma_{5,2} quintuple search") {
    for (std::uint32_t q : {9u, 13u, 17u}) {
        auto w = sigma52_quintuple_search(*get_tower(q));
        CHECK(w.applicable);
        CHECK(w.found);
        // recompute sigma_{5,2} over the reported witness
        auto T = get_tower(q);
        auto circle = T->unit_circle();
        const Field& top = *T->top();
        felem s = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                s = top.add(s, top.mul(circle[w.exponents[a] % (q + 1)],
                                       circle[w.exponents[b] % (q + 1)]));
        CHECK(s == 0);
    }
    CHECK(!sigma52_quintuple_search(*get_tower(8)).applicable);
    CHECK(!sigma52_quintuple_search(*get_tower(11)).applicable);  // 4 divides q+1 here
}

TEST_CASE("trace identity suite") {
    SUBCASE("q = 9: power sums hold, inverse-sum parts split by divisibility") {
        auto suite = trace_identity_suite(*get_tower(9));
        for (const auto& part : suite) {
            if (part.lemma == "NLEM::34(2)") CHECK(!part.applicable);  // 3 divides q, not q-1
            else if (part.lemma == "NLEM::34(3)") CHECK(!part.applicable);
            else {
                CHECK(part.applicable);
                CHECK(part.found);
            }
        }
    }
    SUBCASE("q = 13: 3 | (q-1) branch") {
        auto suite = trace_identity_suite(*get_tower(13));
        bool saw = false;
        for (const auto& part : suite)
            if (part.lemma == "NLEM::34(2)") {
                saw = true;
                CHECK(part.applicable);
                CHECK(part.found);
            }
        CHECK(saw);
    }
    SUBCASE("q = 17: 3 | (q+1) branch") {
        auto suite = trace_identity_suite(*get_tower(17));
        for (const auto& part : suite)
            if (part.lemma == "NLEM::34(3)") {
                CHECK(part.applicable);
                CHECK(part.found);
            }
    }
    SUBCASE("the j = 1 power sum pins the index range") {
        // sum over i in [1, (q-1)/2] of Tr(beta^i) must vanish for odd j
        for (std::uint32_t q : {9u, 13u, 17u, 25u}) {
            auto T = get_tower(q);
            felem s = 0;
            for (std::uint32_t i = 1; i <= (q - 1) / 2; ++i)
                s = T->base()->add(s, T->trace(T->beta_pow(i)));
            CHECK(s == 0);
        }
    }
}

TEST_CASE("trace pair search") {
    auto w9 = tr_pair_search(*get_tower(9));
    CHECK(w9.found);
    auto w29 = tr_pair_search(*get_tower(29));
    CHECK(w29.lemma == "NLEM9:11");
    CHECK(w29.found);
    auto w49 = tr_pair_search(*get_tower(49));
    CHECK(w49.found);
    CHECK(w49.detail == "explicit (q+1)/5 pair");
    CHECK(w49.exponents == std::vector<std::uint32_t>{10, 20});
    // the reported pair satisfies the equation
    auto T = get_tower(49);
    const Field& base = *T->base();
    felem lhs = base.add(
        base.mul(base.add(T->trace(T->beta_pow(w49.exponents[0])), 1),
                 base.add(T->trace(T->beta_pow(w49.exponents[1])), 1)),
        1);
    CHECK(lhs == 0);
}

TEST_CASE("characteristic-2 trace triple") {
    for (std::uint32_t q : {8u, 16u, 32u}) {
        auto w = tr_triple_search_char2(*get_tower(q));
        CHECK(w.applicable);
        CHECK(w.found);
        auto T = get_tower(q);
        const Field& top = *T->top();
        felem s = top.add(top.add(T->beta_pow(w.exponents[0]), T->beta_pow(w.exponents[1])),
                          T->beta_pow(w.exponents[2]));
        CHECK(T->trace(s) == 0);
        for (auto e : w.exponents) CHECK((1 <= e && e <= q / 2));
    }
    CHECK(!tr_triple_search_char2(*get_tower(9)).applicable);
}

TEST_CASE("constructed low-weight codeword") {
    for (std::uint32_t q : {8u, 16u, 32u}) {
        auto cw = construct_weight_q_minus_5_codeword(*get_tower(q));
        CHECK(cw.weight == q - 5);
        CHECK(cw.word.size() == q + 1);
        CHECK(cw.b == 1);
        // membership double-check against the linear-code view
        auto bch = bch_narrow(get_tower(q), q / 2 - 1);
        CHECK(bch.code().contains(cw.word));
    }
    CHECK_THROWS_AS(construct_weight_q_minus_5_codeword(*get_tower(9)), PreconditionError);
}
