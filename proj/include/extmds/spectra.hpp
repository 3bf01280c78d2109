#pragma once

#include <string>
#include <string_view>

#include "extmds/linear_code.hpp"

namespace extmds {

struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class CodeClass { MDS, AMDS_and_NMDS, AMDS_only, Other };

std::string to_string(CodeClass c);

struct ClassificationVerdict {
    CodeClass cls = CodeClass::Other;
    std::uint32_t d = 0, d_dual = 0;
    int defect = 0, dual_defect = 0;  // Singleton defects of C and its dual
    std::string note;                 // e.g. hyperoval codes

    bool is_mds() const { return cls == CodeClass::MDS; }
    bool is_nmds() const { return cls == CodeClass::AMDS_and_NMDS; }
};

// Classifies via the exact minimum distances of the code and its dual.
// proven lower bounds (1 when unknown) let large instances route through the
// seeded support scan.
ClassificationVerdict classify(const LinearCode& c, std::uint64_t budget,
                               std::uint32_t d_lower_hint = 1,
                               std::uint32_t d_dual_lower_hint = 1, unsigned workers = 1);

// weight distribution of an [n, k, n-k+1] MDS code
WeightDistribution mds_weight_formula(std::uint32_t n, std::uint32_t k, std::uint32_t q);

// weight distributions of an [n, k, n-k] NMDS code and of its dual, anchored
// at A_{n-k}(C) and A_k(C^perp) respectively
struct NmdsDistributions {
    WeightDistribution code, dual;
};
NmdsDistributions nmds_weight_from_anchor(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                                          const BigUint& a_nk, const BigUint& a_k_dual);

// Closed-form weight distributions of the named code families, evaluated in
// exact rational arithmetic with integrality asserted. Recognized ids:
//   thm-sdjoint2  extend(C_2), q = 2^m            [q+2, 3, q]
//   thm-sdjoint3  extend(C_3), q = 2^m, m even    [q+2, 5, q-3]
//   NTHM23        extend(C_3), q = 3^m            [q+2, 5, q-3]
//   thm-sdjoint4  extend(C_4), q = 2^m, m odd     [q+2, 7, q-5]
//   lem-sdjoint3  C(3), q = 2^m, m even           [q+1, 4, q-3]
//   nlem20        C(3), q = 3^m                   [q+1, 4, q-3]
// Throws HypothesisError when q violates the family's hypothesis.
WeightDistribution formula_distribution(std::string_view family, std::uint32_t q);

// single predicted anchor coefficients
//   lem-sdjoint7  A_{q-5}(C(4)), q = 2^m, m odd
BigUint formula_anchor(std::string_view family, std::uint32_t q);

}  // namespace extmds
