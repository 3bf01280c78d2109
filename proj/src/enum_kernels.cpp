#include "extmds/enum_kernels.hpp"

#include <atomic>

namespace extmds::kern {

const Ops* avx2_ops_impl();  // defined in enum_kernels_avx2.cpp

namespace {
std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}
}  // namespace

bool avx2_available() {
    static const bool ok = avx2_ops_impl() != nullptr && cpu_has_avx2();
    return ok;
}

const Ops* avx2_ops() { return avx2_available() ? avx2_ops_impl() : nullptr; }

void force_scalar(bool on) { g_force_scalar.store(on); }

const Ops& active_ops() {
    if (!g_force_scalar.load() && avx2_available()) return *avx2_ops_impl();
    return scalar_ops();
}

}  // namespace extmds::kern
