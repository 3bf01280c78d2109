// AVX2 variants of the enumeration kernels. This translation unit is compiled
// with -mavx2; callers must gate on avx2_available() before dispatching here.

#include "extmds/enum_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace extmds::kern {

namespace {

inline __m256i add_mod_p(__m256i a, __m256i b, __m256i vp) {
    __m256i t = _mm256_add_epi8(a, b);
    // t >= p  <=>  max(t, p) == t   (unsigned lanes, t < 2p <= 128)
    __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(t, vp), t);
    return _mm256_sub_epi8(t, _mm256_and_si256(ge, vp));
}

void vec_add_avx2(const Layout& L, std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b) {
    const std::size_t total = static_cast<std::size_t>(L.planes) * L.stride;
    if (L.mode == Mode::Xor) {
        for (std::size_t i = 0; i < total; i += 32) {
            __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
            __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(va, vb));
        }
    } else {
        const __m256i vp = _mm256_set1_epi8(static_cast<char>(L.p));
        for (std::size_t i = 0; i < total; i += 32) {
            __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
            __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_mod_p(va, vb, vp));
        }
    }
}

void leaf_sweep_avx2(const Layout& L, const std::uint8_t* base, const std::uint8_t* scaled,
                     std::uint32_t q, std::uint64_t* hist) {
    const std::size_t block = static_cast<std::size_t>(L.planes) * L.stride;
    const std::uint32_t nvec = L.stride / 32;
    const __m256i vzero = _mm256_setzero_si256();
    const __m256i vp = _mm256_set1_epi8(static_cast<char>(L.p));
    // per 32-byte chunk, bits of positions < n
    std::uint32_t valid[8];
    for (std::uint32_t c = 0; c < nvec; ++c) {
        std::uint32_t lo = c * 32;
        valid[c] = L.n >= lo + 32 ? 0xffffffffu : (L.n <= lo ? 0u : (0xffffffffu >> (32 - (L.n - lo))));
    }
    for (std::uint32_t s = 0; s < q; ++s) {
        const std::uint8_t* row = scaled + s * block;
        std::uint32_t zeros = 0;
        for (std::uint32_t c = 0; c < nvec; ++c) {
            std::uint32_t zmask = 0xffffffffu;
            for (std::uint32_t pl = 0; pl < L.planes; ++pl) {
                const std::uint8_t* bp = base + pl * L.stride + c * 32;
                const std::uint8_t* rp = row + pl * L.stride + c * 32;
                __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bp));
                __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rp));
                __m256i v = L.mode == Mode::Xor ? _mm256_xor_si256(vb, vr) : add_mod_p(vb, vr, vp);
                zmask &= static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, vzero)));
                if (!zmask) break;
            }
            zeros += static_cast<std::uint32_t>(__builtin_popcount(zmask & valid[c]));
        }
        ++hist[L.n - zeros];
    }
}

const Ops kAvx2{"avx2", &vec_add_avx2, &leaf_sweep_avx2};

}  // namespace

const Ops* avx2_ops_impl() { return &kAvx2; }

}  // namespace extmds::kern

#else

namespace extmds::kern {
const Ops* avx2_ops_impl() { return nullptr; }
}  // namespace extmds::kern

#endif
