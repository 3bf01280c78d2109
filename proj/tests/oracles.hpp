#pragma once

// Test-only reference implementations, deliberately independent of the
// library's enumeration kernels and transform paths.

#include <cstdint>
#include <vector>

#include "extmds/field.hpp"
#include "extmds/gfmatrix.hpp"
#include "extmds/linear_code.hpp"

namespace extmds::testing {

// weight distribution by plain message iteration and row-by-row accumulation
inline std::vector<std::uint64_t> naive_weight_distribution(const LinearCode& c) {
    const Field& F = *c.context();
    const std::uint32_t q = F.order(), n = c.length(), k = c.dimension();
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<felem> msg(k, 0);
    std::vector<felem> word(n);
    while (true) {
        for (std::uint32_t j = 0; j < n; ++j) {
            felem acc = 0;
            for (std::uint32_t i = 0; i < k; ++i)
                acc = F.add(acc, F.mul(msg[i], c.generator().at(i, j)));
            word[j] = acc;
        }
        std::uint32_t w = 0;
        for (felem x : word) w += x != 0;
        ++hist[w];
        std::uint32_t pos = 0;
        while (pos < k && msg[pos] == q - 1) msg[pos++] = 0;
        if (pos == k) break;
        ++msg[pos];
    }
    return hist;
}

// every codeword of the smaller-dimension code, as explicit vectors
inline std::vector<std::vector<felem>> all_codewords(const LinearCode& c) {
    const Field& F = *c.context();
    const std::uint32_t q = F.order(), n = c.length(), k = c.dimension();
    std::vector<std::vector<felem>> out;
    std::vector<felem> msg(k, 0);
    while (true) {
        std::vector<felem> word(n);
        for (std::uint32_t j = 0; j < n; ++j) {
            felem acc = 0;
            for (std::uint32_t i = 0; i < k; ++i)
                acc = F.add(acc, F.mul(msg[i], c.generator().at(i, j)));
            word[j] = acc;
        }
        out.push_back(std::move(word));
        std::uint32_t pos = 0;
        while (pos < k && msg[pos] == q - 1) msg[pos++] = 0;
        if (pos == k) break;
        ++msg[pos];
    }
    return out;
}

// multiplicative order by repeated multiplication
inline std::uint32_t order_by_multiplication(const Field& f, felem x) {
    felem cur = x;
    std::uint32_t ord = 1;
    while (cur != 1) {
        cur = f.mul(cur, x);
        ++ord;
    }
    return ord;
}

}  // namespace extmds::testing
