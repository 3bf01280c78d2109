#pragma once

#include <string>
#include <vector>

#include "extmds/linear_code.hpp"

namespace extmds {

// d <= n - k - ceil(k/r) + 2
std::uint32_t singleton_like_bound(std::uint32_t n, std::uint32_t k, std::uint32_t r);

enum class LrcVerdict { DOptimal, AlmostDOptimal, Neither };

std::string to_string(LrcVerdict v);

struct LocalityReport {
    std::vector<std::uint32_t> r_i;  // per-coordinate linear locality
    std::uint32_t r = 0;             // code locality, max over coordinates
    std::uint32_t d = 0;
    std::uint32_t bound = 0;  // Singleton-like bound at (n, k, r)
    int gap = 0;              // bound - d, nonnegative
    LrcVerdict verdict = LrcVerdict::Neither;
    std::string cm_bound_note;  // the dimension-optimality bound is not evaluated
};

// Linear locality through minimum-weight dual codewords: r_i is one less
// than the smallest weight of a dual codeword whose support contains i.
// d_lower_hint seeds the distance computation of C itself.
LocalityReport linear_locality(const LinearCode& c, std::uint64_t budget,
                               std::uint32_t d_lower_hint = 1, unsigned workers = 1);

}  // namespace extmds
