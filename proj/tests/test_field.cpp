#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "extmds/field.hpp"
#include "oracles.hpp"

using namespace extmds;

TEST_CASE("deterministic modulus choice") {
    auto f8 = Field::build(2, 3);
    CHECK(f8->order() == 8);
    CHECK(f8->modulus() == std::vector<felem>{1, 1, 0, 1});  // x^3 + x + 1
    auto f3 = Field::build(3, 1);
    CHECK(f3->order() == 3);
    CHECK(f3->modulus() == std::vector<felem>{0, 1});  // x
    auto f9 = Field::build(3, 2);
    CHECK(f9->modulus() == std::vector<felem>{1, 0, 1});  // x^2 + 1
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS_AS(Field::build(4, 1), PreconditionError);
    CHECK_THROWS_AS(Field::build(1, 1), PreconditionError);
    CHECK_THROWS_AS(Field::build(2, 0), PreconditionError);
    CHECK_THROWS_AS(Field::build(2, 64), PreconditionError);
    CHECK_THROWS_AS(Tower(Field::build(2, 1)), PreconditionError);
}

TEST_CASE("field axioms at small orders") {
    for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 16u, 25u}) {
        auto F = get_field(q);
        for (felem a = 0; a < q; ++a) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->sub(a, a) == 0);
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
            for (felem b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                CHECK(F->sub(F->add(a, b), b) == a);
                for (felem c = 0; c < std::min<felem>(q, 8); ++c)
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            }
        }
    }
}

TEST_CASE("tower orders of alpha and beta") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u}) {
        auto T = get_tower(q);
        CHECK(T->top()->order() == q * q);
        CHECK(testing::order_by_multiplication(*T->top(), T->alpha()) == q * q - 1);
        CHECK(testing::order_by_multiplication(*T->top(), T->beta()) == q + 1);
        // beta^d != 1 for every proper divisor d of q+1
        for (std::uint32_t d = 1; d <= q; ++d)
            if ((q + 1) % d == 0) CHECK(T->beta_pow(d) != 1);
        CHECK(T->beta_pow(q + 1) == 1);
    }
}

TEST_CASE("unit circle") {
    auto t4 = get_tower(4);
    auto u4 = t4->unit_circle();
    CHECK(u4.size() == 5);
    CHECK(std::set<felem>(u4.begin(), u4.end()).size() == 5);
    for (felem x : u4) CHECK(t4->top()->pow(x, 5) == 1);

    auto t8 = get_tower(8);
    auto u8 = t8->unit_circle();
    CHECK(u8.size() == 9);
    felem prod = 1;
    for (felem x : u8) prod = t8->top()->mul(prod, x);
    CHECK(prod == 1);  // beta^(0+1+...+8) = beta^36 = 1

    auto t9 = get_tower(9);
    auto u9 = t9->unit_circle();
    CHECK(u9[5] == t9->top()->embed(t9->base()->neg(1)));  // beta^((q+1)/2) = -1
}

TEST_CASE("frobenius fixes exactly the embedded base field") {
    for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        auto T = get_tower(q);
        const Field& top = *T->top();
        for (felem x = 0; x < top.order(); ++x) {
            bool fixed = top.frobenius(x) == x;
            CHECK(fixed == top.in_base_subfield(x));
        }
    }
}

TEST_CASE("trace to base") {
    auto t8 = get_tower(8);
    // embedded base elements have trace x + x = 0 in characteristic 2
    for (felem x = 0; x < 8; ++x) CHECK(t8->trace(t8->top()->embed(x)) == 0);
    CHECK(t8->trace(t8->beta()) != 0);
    // additivity: Tr(beta + beta^q) = 2 Tr(beta)
    const Field& top = *t8->top();
    felem s = top.add(t8->beta(), top.frobenius(t8->beta()));
    CHECK(t8->trace(s) == t8->base()->add(t8->trace(t8->beta()), t8->trace(t8->beta())));

    SUBCASE("GF(q)-linearity on random samples") {
        std::mt19937 rng(3);
        for (std::uint32_t q : {9u, 13u}) {
            auto T = get_tower(q);
            const Field& tp = *T->top();
            const Field& ba = *T->base();
            for (int it = 0; it < 200; ++it) {
                felem a = rng() % q, b = rng() % q;
                felem x = rng() % tp.order(), y = rng() % tp.order();
                felem lhs = T->trace(tp.add(tp.mul(tp.embed(a), x), tp.mul(tp.embed(b), y)));
                felem rhs = ba.add(ba.mul(a, T->trace(x)), ba.mul(b, T->trace(y)));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("frobenius is an involution on the tower") {
    auto T = get_tower(9);
    const Field& top = *T->top();
    for (felem x = 0; x < top.order(); ++x) CHECK(top.frobenius(top.frobenius(x)) == x);
}

TEST_CASE("prime-subfield trace") {
    auto f4 = get_field(4);
    // GF(4) = {0, 1, w, w+1}; Tr(x) = x + x^2
    CHECK(f4->trace_to_prime(0) == 0);
    CHECK(f4->trace_to_prime(1) == 0);
    CHECK(f4->trace_to_prime(2) == 1);
    CHECK(f4->trace_to_prime(3) == 1);
    auto f9 = get_field(9);
    for (felem x = 0; x < 9; ++x) {
        felem tr = f9->trace_to_prime(x);
        CHECK(tr == f9->add(x, f9->pow(x, 3)));
    }
}

TEST_CASE("element context tags are enforced") {
    auto f4 = get_field(4);
    auto f8 = get_field(8);
    FieldElement a(f4, 2), b(f8, 2);
    CHECK_THROWS_AS(a + b, ContextMismatch);
    FieldElement c(f4, 3);
    CHECK((a * c).value() == f4->mul(2, 3));
}
