#include "extmds/family.hpp"

#include <stdexcept>

namespace extmds {

CyclicCode::CyclicCode(std::shared_ptr<const Tower> tower, std::uint32_t n, Poly g)
    : tower_(std::move(tower)), gen_(g.monic()) {
    const auto& base = tower_->base();
    if (g.context().get() != base.get()) throw ContextMismatch("generator over wrong field");
    if (g.is_zero()) throw PreconditionError("zero generator polynomial");
    Poly xn1 = Poly::x_pow_n_minus_1(base, n);
    auto dm = poly_divmod(xn1, gen_);
    if (!dm.remainder.is_zero())
        throw PreconditionError("generator does not divide x^n - 1");
    check_ = dm.quotient;
    std::uint32_t k = n - static_cast<std::uint32_t>(gen_.degree());
    std::vector<std::vector<felem>> rows(k, std::vector<felem>(n, 0));
    for (std::uint32_t i = 0; i < k; ++i)
        for (int j = 0; j <= gen_.degree(); ++j) rows[i][i + j] = gen_.coeffs()[j];
    code_ = LinearCode::from_generator(base, rows);
    if (code_.dimension() != k) throw std::logic_error("cyclic shifts of g are dependent");
}

CyclicCode cyclic_from_generator(std::shared_ptr<const Tower> tower, std::uint32_t n, Poly g) {
    return CyclicCode(std::move(tower), n, std::move(g));
}

Poly generator_gu(const Tower& tower, std::uint32_t u) {
    std::uint32_t q = tower.q();
    std::uint32_t top = (q + 1) / 2;
    if (u < 1 || u > top) throw PreconditionError("u out of [1, floor((q+1)/2)]");
    Poly g = Poly::one(tower.base());
    for (std::uint32_t i = u; i <= top; ++i) g = g * minimal_polynomial(tower, i);
    return g;
}

CyclicCode code_Cu(std::shared_ptr<const Tower> tower, std::uint32_t u) {
    Poly g = generator_gu(*tower, u);
    std::uint32_t n = tower->q() + 1;
    return CyclicCode(std::move(tower), n, std::move(g));
}

CyclicCode bch_narrow(std::shared_ptr<const Tower> tower, std::uint32_t delta) {
    std::uint32_t q = tower->q();
    if (delta < 2 || delta > q + 1) throw PreconditionError("designed distance out of [2, q+1]");
    Poly g = Poly::one(tower->base());
    for (std::uint32_t i = 1; i + 1 <= delta; ++i) g = poly_lcm(g, minimal_polynomial(*tower, i));
    return CyclicCode(std::move(tower), q + 1, std::move(g));
}

CyclicCode code_C_of_u(std::shared_ptr<const Tower> tower, std::uint32_t u) {
    std::uint32_t q = tower->q();
    if (u < 2 || u > (q + 1) / 2) throw PreconditionError("u out of [2, floor((q+1)/2)]");
    Poly g = Poly(tower->base(), {tower->base()->neg(1), 1}) * generator_gu(*tower, u);
    CyclicCode c(tower, q + 1, std::move(g));
    // the same code must arise as the dual of the narrow-sense BCH code
    CyclicCode b = bch_narrow(tower, u);
    if (!(b.code().dual() == c.code()))
        throw std::logic_error("C(u) generated by (x-1)g_u differs from dual of the BCH code");
    return c;
}

bool is_reversible(const LinearCode& c) {
    return intersect(c, c.dual()).dimension() == 0;
}

CyclicCode CyclicCode::dual_cyclic() const {
    const auto& h = check_.coeffs();
    std::vector<felem> rev(h.rbegin(), h.rend());
    Poly g = Poly(tower_->base(), std::move(rev)).monic();
    CyclicCode d(tower_, length(), std::move(g));
    if (!(d.code() == code_.dual()))
        throw std::logic_error("reciprocal check polynomial does not generate the dual");
    return d;
}

std::uint32_t bch_bound(const CyclicCode& c) {
    const Tower& T = *c.tower();
    std::uint32_t n = c.length();
    if (n != T.q() + 1) throw PreconditionError("bch_bound expects length q+1 codes");
    std::vector<bool> root(n, false);
    for (std::uint32_t j = 0; j < n; ++j)
        root[j] = c.generator_poly().eval_in_extension(*T.top(), T.beta_pow(j)) == 0;
    // longest circular run of roots
    std::uint32_t best = 0, cur = 0;
    for (std::uint32_t j = 0; j < 2 * n; ++j) {
        if (root[j % n]) {
            ++cur;
            best = std::max(best, std::min(cur, n));
        } else {
            cur = 0;
        }
    }
    return best + 1;
}

std::optional<std::uint32_t> cyclic_distance_if_pinned(const CyclicCode& c) {
    std::uint32_t lower = bch_bound(c);
    if (lower == c.length() - c.dimension() + 1) return lower;
    return std::nullopt;
}

MinDistance cyclic_min_weight(const CyclicCode& c, std::uint64_t budget, unsigned workers) {
    if (c.dimension() == 0) return MinDistance{0, true, BigUint()};
    return min_weight_with_lower_bound(c.code(), bch_bound(c), budget, workers);
}

LinearCode bch_halfm_trace_form(const Tower& tower) {
    std::uint32_t q = tower.q();
    if (tower.base()->characteristic() != 2 || q < 8)
        throw PreconditionError("trace form defined for q = 2^m, m >= 3");
    std::uint32_t u = q / 2 - 1;  // 2^(m-1) - 1
    std::uint32_t n = q + 1;
    const Field& top = *tower.top();
    std::vector<std::vector<felem>> rows;
    rows.emplace_back(n, 1);  // a = 1
    // b and c range over GF(q^2); a GF(q)-basis of it is {1, y} with y the
    // adjoined root, encodings 1 and q
    for (felem bas : {felem(1), felem(q)}) {
        std::vector<felem> row_b(n), row_c(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            felem bu = tower.beta_pow(static_cast<std::int64_t>(u) * i);
            felem bu1 = tower.beta_pow(static_cast<std::int64_t>(u + 1) * i);
            row_b[i] = tower.trace(top.mul(bas, bu));
            row_c[i] = tower.trace(top.mul(bas, bu1));
        }
        rows.push_back(std::move(row_b));
        rows.push_back(std::move(row_c));
    }
    return LinearCode::from_generator(tower.base(), rows);
}

FamilyInstance build_family(std::uint32_t q, std::uint32_t u, bool verify_diagram) {
    auto tower = get_tower(q);
    if (u < 1 || u > (q + 1) / 2) throw PreconditionError("u out of [1, floor((q+1)/2)]");
    CyclicCode cu = code_Cu(tower, u);
    FamilyInstance fi{tower,
                      q,
                      u,
                      cu,
                      cu.code().dual(),
                      cu.code().extended(),
                      cu.code().extended().dual(),
                      std::nullopt,
                      std::nullopt};
    if (u >= 2) {
        fi.bch = bch_narrow(tower, u);
        fi.c_of_u = code_C_of_u(tower, u);
    }
    if (verify_diagram) {
        const std::uint32_t n = q + 1;
        if (cu.dimension() != 2 * u - 1) throw std::logic_error("dim C_u != 2u-1");
        if (fi.cu_dual.dimension() != n - (2 * u - 1)) throw std::logic_error("dim dual mismatch");
        if (u >= 2) {
            if (!fi.c_of_u->code().is_subcode_of(cu.code()))
                throw std::logic_error("C(u) is not a subcode of C_u");
            if (!fi.cu_dual.is_subcode_of(fi.bch->code()))
                throw std::logic_error("(C_u)^perp is not a subcode of the BCH code");
            if (!(fi.c_of_u->code().augmented() == cu.code()))
                throw std::logic_error("augment(C(u)) != C_u");
            if (!(fi.bch->code().dual() == fi.c_of_u->code()))
                throw std::logic_error("BCH dual != C(u)");
        }
        // generator/check complementarity: g_u * (x-1) * M_beta ... M_{beta^(u-1)} = x^n - 1
        Poly prod = cu.generator_poly();
        prod = prod * Poly(tower->base(), {tower->base()->neg(1), 1});
        for (std::uint32_t i = 1; i < u; ++i) prod = prod * minimal_polynomial(*tower, i);
        if (!(prod == Poly::x_pow_n_minus_1(tower->base(), n)))
            throw std::logic_error("generator/check complementarity failed");
    }
    return fi;
}

}  // namespace extmds
