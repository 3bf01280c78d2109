#pragma once

#include <string>
#include <vector>

#include "extmds/field.hpp"

namespace extmds {

struct WitnessResult {
    std::string lemma;
    std::uint32_t q = 0;
    bool applicable = true;  // hypothesis satisfied
    bool found = false;      // pass/fail for identity parts, witness found for searches
    std::vector<std::uint32_t> exponents;  // witness tuple as beta exponents
    std::uint64_t search_size = 0;         // tuples or indices examined
    std::string detail;
};

// four pairwise distinct unit-circle elements with vanishing second
// elementary symmetric function; exhaustive over exponent 4-subsets
WitnessResult sigma2_quadruple_search(const Tower& tower);

// determinant of the rows (x^-2.. ), (x^-1..), (x..), (x^2..) computed by
// cofactor expansion versus the closed product form
bool det_identity_check(const Tower& tower, felem x, felem y, felem z, felem w);

// five pairwise distinct unit-circle elements with sigma_{5,2} = 0; prefers
// the pair construction {beta^i, beta^-i, beta^j, beta^-j, 1}, falls back to
// exhaustive search
WitnessResult sigma52_quintuple_search(const Tower& tower);

// the trace identities for odd q with 4 | (q-1): distinctness, excluded
// values, the -1 characterization, power sums and inverse sums
std::vector<WitnessResult> trace_identity_suite(const Tower& tower);

// distinct i, j in [1, (q-1)/2] with (Tr(beta^i)+1)(Tr(beta^j)+1)+1 = 0;
// returns the explicit ((q+1)/5, 2(q+1)/5) pair when 5 | (q+1)
WitnessResult tr_pair_search(const Tower& tower);

// distinct i, j, k in [1, 2^(m-1)] with Tr(beta^i + beta^j + beta^k) = 0
WitnessResult tr_triple_search_char2(const Tower& tower);

struct ConstructedCodeword {
    std::vector<felem> word;  // length q+1 over GF(q)
    std::uint32_t weight = 0;
    std::vector<std::uint32_t> triple;  // the exponents behind the construction
    felem a = 0, b = 0, c = 0;
};

// weight-(q-5) codeword of the narrow-sense BCH code with designed distance
// 2^(m-1)-1, built from a trace triple; membership and weight are verified
ConstructedCodeword construct_weight_q_minus_5_codeword(const Tower& tower);

}  // namespace extmds
