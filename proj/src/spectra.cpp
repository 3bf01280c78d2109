#include "extmds/spectra.hpp"

#include <initializer_list>

namespace extmds {

std::string to_string(CodeClass c) {
    switch (c) {
        case CodeClass::MDS: return "MDS";
        case CodeClass::AMDS_and_NMDS: return "NMDS";
        case CodeClass::AMDS_only: return "AMDS";
        case CodeClass::Other: return "other";
    }
    return "?";
}

ClassificationVerdict classify(const LinearCode& c, std::uint64_t budget,
                               std::uint32_t d_lower_hint, std::uint32_t d_dual_lower_hint,
                               unsigned workers) {
    const std::uint32_t n = c.length(), k = c.dimension();
    if (k == 0 || k == n) throw PreconditionError("classification needs 0 < k < n");
    ClassificationVerdict v;
    v.d = min_weight_with_lower_bound(c, d_lower_hint, budget, workers).d;
    v.d_dual = min_weight_with_lower_bound(c.dual(), d_dual_lower_hint, budget, workers).d;
    v.defect = static_cast<int>(n - k + 1) - static_cast<int>(v.d);
    v.dual_defect = static_cast<int>(k + 1) - static_cast<int>(v.d_dual);
    if (v.defect == 0) {
        v.cls = CodeClass::MDS;
    } else if (v.defect == 1 && v.dual_defect == 1) {
        v.cls = CodeClass::AMDS_and_NMDS;  // d(C) + d(dual) = n
    } else if (v.defect == 1) {
        v.cls = CodeClass::AMDS_only;
    } else {
        v.cls = CodeClass::Other;
    }
    const std::uint32_t q = c.context()->order();
    if (c.context()->characteristic() == 2 && n == q + 2 && k == 3 && v.d == q)
        v.note = "hyperoval code";
    return v;
}

WeightDistribution mds_weight_formula(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
    if (k < 1 || k > n) throw PreconditionError("mds_weight_formula needs 1 <= k <= n");
    const std::uint32_t d = n - k + 1;
    std::vector<BigUint> a(n + 1);
    a[0] = BigUint(1);
    for (std::uint32_t i = d; i <= n; ++i) {
        BigInt sum(0);
        for (std::uint32_t j = 0; j + d <= i; ++j) {
            BigUint term = binomial(i - 1, j) * BigUint::pow(q, i - j - d);
            sum += BigInt(std::move(term), j % 2 == 1);
        }
        BigInt ai = BigInt(binomial(n, i) * BigUint(q - 1)) * sum;
        if (ai.negative()) throw std::logic_error("MDS formula produced a negative count");
        a[i] = ai.magnitude();
    }
    WeightDistribution w(std::move(a));
    if (!(w.total() == BigUint::pow(q, k)))
        throw std::logic_error("MDS formula counts do not sum to q^k");
    return w;
}

NmdsDistributions nmds_weight_from_anchor(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                                          const BigUint& a_nk, const BigUint& a_k_dual) {
    if (k < 1 || k >= n) throw PreconditionError("nmds anchor formula needs 1 <= k < n");
    if (a_nk.is_zero()) throw PreconditionError("anchor A_{n-k} must be positive for an NMDS code");
    NmdsDistributions out;
    auto eval = [&](std::uint32_t dim, const BigUint& anchor) {
        // weights n-dim+s for s in [1, dim]; the anchor sits at weight n-dim
        std::vector<BigUint> a(n + 1);
        a[0] = BigUint(1);
        a[n - dim] = anchor;
        for (std::uint32_t s = 1; s <= dim; ++s) {
            BigInt sum(0);
            for (std::uint32_t j = 0; j < s; ++j) {
                BigUint term = binomial(n - dim + s, j) * (BigUint::pow(q, s - j) - BigUint(1));
                sum += BigInt(std::move(term), j % 2 == 1);
            }
            BigInt ai = BigInt(binomial(n, dim - s)) * sum +
                        BigInt(binomial(dim, s) * anchor, s % 2 == 1);
            if (ai.negative())
                throw std::logic_error("NMDS formula produced a negative count at weight " +
                                       std::to_string(n - dim + s));
            a[n - dim + s] = ai.magnitude();
        }
        WeightDistribution w(std::move(a));
        if (!(w.total() == BigUint::pow(q, dim)))
            throw std::logic_error("NMDS formula counts do not sum to q^dim");
        return w;
    };
    out.code = eval(k, a_nk);
    out.dual = eval(n - k, a_k_dual);
    return out;
}

namespace {

// value of a polynomial in q with integer coefficients, highest degree first
Rational poly_q(std::uint32_t q, std::initializer_list<std::int64_t> coeffs) {
    Rational acc(0);
    for (std::int64_t c : coeffs)
        acc = acc * Rational(BigInt(static_cast<std::int64_t>(q))) + Rational(BigInt(c));
    return acc;
}

bool is_power_of(std::uint32_t q, std::uint32_t p, std::uint32_t& m) {
    m = 0;
    std::uint32_t t = q;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++m;
    }
    return t == 1 && m >= 1;
}

BigUint as_count(const Rational& r, const char* what) {
    BigInt v = r.to_integer();
    if (v.negative()) throw std::logic_error(std::string(what) + ": negative count");
    return v.magnitude();
}

WeightDistribution finish(std::vector<BigUint> a, std::uint32_t q, std::uint32_t k,
                          const char* what) {
    WeightDistribution w(std::move(a));
    if (!(w.total() == BigUint::pow(q, k)))
        throw std::logic_error(std::string(what) + ": counts do not sum to q^k");
    return w;
}

}  // namespace

WeightDistribution formula_distribution(std::string_view family, std::uint32_t q) {
    std::uint32_t m = 0;
    if (family == "thm-sdjoint2") {
        if (!is_power_of(q, 2, m) || m < 2) throw HypothesisError("thm-sdjoint2 needs q = 2^m, m >= 2");
        std::vector<BigUint> a(q + 3);
        a[0] = BigUint(1);
        a[q] = as_count(poly_q(q, {1, 2}) * poly_q(q, {1, 0, -1}) / Rational(2), "thm-sdjoint2");
        a[q + 2] = as_count(poly_q(q, {1, 0}) * poly_q(q, {1, -1}) * poly_q(q, {1, -1}) / Rational(2),
                            "thm-sdjoint2");
        return finish(std::move(a), q, 3, "thm-sdjoint2");
    }
    if (family == "thm-sdjoint3") {
        if (!is_power_of(q, 2, m) || m < 4 || m % 2 != 0)
            throw HypothesisError("thm-sdjoint3 needs q = 2^m with m >= 4 even");
        std::vector<BigUint> a(q + 3);
        a[0] = BigUint(1);
        a[q - 3] = as_count(poly_q(q, {1, -4, -1, 4, 0}) / Rational(24), "thm-sdjoint3");
        a[q - 2] = as_count(poly_q(q, {1, -4, 17, 4, -18, 0}) / Rational(24), "thm-sdjoint3");
        a[q - 1] = as_count(poly_q(q, {3, -4, -3, 4, 0}) / Rational(4), "thm-sdjoint3");
        a[q] = as_count(poly_q(q, {3, -2, 17, 14, -20, -12}) / Rational(12), "thm-sdjoint3");
        a[q + 1] = as_count(poly_q(q, {8, 13, -44, -13, 36, 0}) / Rational(24), "thm-sdjoint3");
        a[q + 2] = as_count(poly_q(q, {3, -8, 7, 0, -2, 0}) / Rational(8), "thm-sdjoint3");
        return finish(std::move(a), q, 5, "thm-sdjoint3");
    }
    if (family == "NTHM23") {
        if (!is_power_of(q, 3, m) || m < 2) throw HypothesisError("NTHM23 needs q = 3^m, m >= 2");
        std::vector<BigUint> a(q + 3);
        a[0] = BigUint(1);
        a[q - 3] = as_count(poly_q(q, {1, -1, -1, 1, 0}) / Rational(24), "NTHM23");
        a[q - 2] = as_count(poly_q(q, {1, -4, 2, 4, -3, 0}) / Rational(24), "NTHM23");
        a[q - 1] = as_count(poly_q(q, {3, 1, -3, -1, 0}) / Rational(4), "NTHM23");
        a[q] = as_count(poly_q(q, {3, -2, 2, 14, -5, -12}) / Rational(12), "NTHM23");
        a[q + 1] = as_count(poly_q(q, {8, 13, -29, -13, 21, 0}) / Rational(24), "NTHM23");
        a[q + 2] = as_count(poly_q(q, {3, -8, 6, 0, -1, 0}) / Rational(8), "NTHM23");
        return finish(std::move(a), q, 5, "NTHM23");
    }
    if (family == "thm-sdjoint4") {
        if (!is_power_of(q, 2, m) || m < 5 || m % 2 != 1)
            throw HypothesisError("thm-sdjoint4 distribution needs q = 2^m with m >= 5 odd");
        std::vector<BigUint> a(q + 3);
        a[0] = BigUint(1);
        a[q - 5] = as_count(poly_q(q, {1, -11, 25, -5, -26, 16, 0}) / Rational(720), "thm-sdjoint4");
        a[q - 4] = as_count(poly_q(q, {1, -11, 75, -155, 24, 166, -100, 0}) / Rational(720), "thm-sdjoint4");
        a[q - 3] = as_count(poly_q(q, {3, -17, 27, 1, -30, 16, 0}) / Rational(48), "thm-sdjoint4");
        a[q - 2] = as_count(poly_q(q, {3, -7, 101, -133, -64, 140, -40, 0}) / Rational(144), "thm-sdjoint4");
        a[q - 1] = as_count(poly_q(q, {8, 47, -69, 167, 141, -214, -80, 0}) / Rational(144), "thm-sdjoint4");
        a[q] = as_count(poly_q(q, {45, 93, 127, -255, -200, 402, 28, -240}) / Rational(240), "thm-sdjoint4");
        a[q + 1] = as_count(poly_q(q, {264, 151, -845, 415, 181, -566, 400, 0}) / Rational(720), "thm-sdjoint4");
        a[q + 2] = as_count(poly_q(q, {53, -133, 99, -19, 0, 8, -8, 0}) / Rational(144), "thm-sdjoint4");
        return finish(std::move(a), q, 7, "thm-sdjoint4");
    }
    if (family == "lem-sdjoint3") {
        if (!is_power_of(q, 2, m) || m < 4 || m % 2 != 0)
            throw HypothesisError("lem-sdjoint3 needs q = 2^m with m >= 4 even");
        std::vector<BigUint> a(q + 2);
        a[0] = BigUint(1);
        a[q - 3] = as_count(poly_q(q, {1, -4}) * poly_q(q, {1, -1}) * poly_q(q, {1, 0}) *
                                poly_q(q, {1, 1}) / Rational(24),
                            "lem-sdjoint3");
        a[q - 2] = as_count(poly_q(q, {1, -1}) * poly_q(q, {1, 0}) * poly_q(q, {1, 1}) / Rational(2),
                            "lem-sdjoint3");
        a[q - 1] = as_count(poly_q(q, {1, 1}) * poly_q(q, {1, 0, 0}) * poly_q(q, {1, -1}) / Rational(4),
                            "lem-sdjoint3");
        a[q] = as_count(poly_q(q, {1, -1}) * poly_q(q, {1, 1}) * poly_q(q, {2, 1, 6}) / Rational(6),
                        "lem-sdjoint3");
        a[q + 1] = as_count(poly_q(q, {3, -4, -3, 4, 0}) / Rational(8), "lem-sdjoint3");
        return finish(std::move(a), q, 4, "lem-sdjoint3");
    }
    if (family == "nlem20") {
        if (!is_power_of(q, 3, m) || m < 2) throw HypothesisError("nlem20 needs q = 3^m, m >= 2");
        std::vector<BigUint> a(q + 2);
        a[0] = BigUint(1);
        a[q - 3] = as_count(poly_q(q, {1, -1}) * poly_q(q, {1, -1}) * poly_q(q, {1, 0}) *
                                poly_q(q, {1, 1}) / Rational(24),
                            "nlem20");
        a[q - 1] = as_count(poly_q(q, {1, -1}) * poly_q(q, {1, 0}) * poly_q(q, {1, 1}) *
                                poly_q(q, {1, 3}) / Rational(4),
                            "nlem20");
        a[q] = as_count(poly_q(q, {1, 0, -1}) * poly_q(q, {1, -1, 3}) / Rational(3), "nlem20");
        a[q + 1] = as_count(poly_q(q, {3, 0}) * poly_q(q, {1, -1}) * poly_q(q, {1, -1}) *
                                poly_q(q, {1, 1}) / Rational(8),
                            "nlem20");
        return finish(std::move(a), q, 4, "nlem20");
    }
    throw PreconditionError("unknown distribution family: " + std::string(family));
}

BigUint formula_anchor(std::string_view family, std::uint32_t q) {
    std::uint32_t m = 0;
    if (family == "lem-sdjoint7") {
        if (!is_power_of(q, 2, m) || m < 5 || m % 2 != 1)
            throw HypothesisError("lem-sdjoint7 needs q = 2^m with m >= 5 odd");
        Rational r = poly_q(q, {1, -1}) * poly_q(q, {1, -8}) / Rational(30) *
                     Rational(BigInt(binomial(q + 1, 4)));
        return as_count(r, "lem-sdjoint7");
    }
    throw PreconditionError("unknown anchor family: " + std::string(family));
}

}  // namespace extmds
