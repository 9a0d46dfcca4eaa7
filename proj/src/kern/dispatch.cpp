#include "mellin/kern/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mellin::kern {

#if defined(__x86_64__) || defined(_M_X64)
const KernelTable* avx2_table_impl();

const KernelTable* avx2_kernels() {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return avx2_table_impl();
    return nullptr;
}
#else
const KernelTable* avx2_kernels() { return nullptr; }
#endif

const KernelTable& active_kernels() {
    static const KernelTable* selected = [] {
        const char* env = std::getenv("MELLIN_KERNEL");
        if (env != nullptr) {
            if (std::strcmp(env, "scalar") == 0)
                return &scalar_kernels();
            if (std::strcmp(env, "avx2") == 0 && avx2_kernels() != nullptr)
                return avx2_kernels();
        }
        const KernelTable* simd = avx2_kernels();
        return simd != nullptr ? simd : &scalar_kernels();
    }();
    return *selected;
}

} // namespace mellin::kern
