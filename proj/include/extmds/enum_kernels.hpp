#pragma once

#include <cstddef>
#include <cstdint>

namespace extmds::kern {

// Codewords are laid out as `planes` byte arrays of `stride` bytes each
// (stride a multiple of 32, first `n` bytes meaningful). Characteristic-2
// fields use one plane holding the packed element encoding (addition is
// XOR). Odd-characteristic fields use one plane per base-p digit with
// lane-wise addition mod p; an element is zero iff all its planes are zero.
enum class Mode : std::uint8_t { Xor, ModP };

struct Layout {
    std::uint32_t n;       // code length
    std::uint32_t planes;  // 1 for char 2 and prime fields, m for GF(p^m)
    std::uint32_t stride;  // padded plane size in bytes, multiple of 32
    std::uint8_t p;        // characteristic (lane modulus for ModP)
    Mode mode;
};

struct Ops {
    const char* name;
    // dst := a + b, all in the layout above
    void (*vec_add)(const Layout&, std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b);
    // for s in [0, q): w = hamming_weight(base + scaled[s]); ++hist[w]
    // scaled is q consecutive codeword blocks of planes*stride bytes
    void (*leaf_sweep)(const Layout&, const std::uint8_t* base, const std::uint8_t* scaled,
                       std::uint32_t q, std::uint64_t* hist);
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unsupported by the build or the CPU
const Ops& active_ops();

bool avx2_available();
void force_scalar(bool on);  // test hook

inline std::uint32_t padded_stride(std::uint32_t n) { return (n + 31u) & ~31u; }

}  // namespace extmds::kern
