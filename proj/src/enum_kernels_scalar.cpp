#include "extmds/enum_kernels.hpp"

namespace extmds::kern {

namespace {

void vec_add_scalar(const Layout& L, std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b) {
    const std::size_t total = static_cast<std::size_t>(L.planes) * L.stride;
    if (L.mode == Mode::Xor) {
        for (std::size_t i = 0; i < total; ++i) dst[i] = a[i] ^ b[i];
    } else {
        for (std::size_t i = 0; i < total; ++i) {
            std::uint8_t s = static_cast<std::uint8_t>(a[i] + b[i]);
            dst[i] = s >= L.p ? static_cast<std::uint8_t>(s - L.p) : s;
        }
    }
}

void leaf_sweep_scalar(const Layout& L, const std::uint8_t* base, const std::uint8_t* scaled,
                       std::uint32_t q, std::uint64_t* hist) {
    const std::size_t block = static_cast<std::size_t>(L.planes) * L.stride;
    for (std::uint32_t s = 0; s < q; ++s) {
        const std::uint8_t* row = scaled + s * block;
        std::uint32_t zero = 0;
        for (std::uint32_t i = 0; i < L.n; ++i) {
            bool all_zero = true;
            for (std::uint32_t pl = 0; pl < L.planes; ++pl) {
                std::uint8_t x = base[pl * L.stride + i], y = row[pl * L.stride + i];
                std::uint8_t v;
                if (L.mode == Mode::Xor) {
                    v = x ^ y;
                } else {
                    std::uint8_t t = static_cast<std::uint8_t>(x + y);
                    v = t >= L.p ? static_cast<std::uint8_t>(t - L.p) : t;
                }
                if (v != 0) {
                    all_zero = false;
                    break;
                }
            }
            zero += all_zero;
        }
        ++hist[L.n - zero];
    }
}

const Ops kScalar{"scalar", &vec_add_scalar, &leaf_sweep_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

}  // namespace extmds::kern
