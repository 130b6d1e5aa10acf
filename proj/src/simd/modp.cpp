#include "qhc/simd/modp.hpp"

#include <atomic>

namespace qhc::simd {

namespace {

constexpr uint32_t P = 2147483647u;

inline uint32_t fold(uint64_t x) {
    x = (x & P) + (x >> 31);
    x = (x & P) + (x >> 31);
    return uint32_t(x >= P ? x - P : x);
}

using Kernel = void (*)(uint32_t*, const uint32_t*, uint32_t, size_t);

Isa detect() {
#if defined(QHC_HAVE_AVX2_TU)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

void submul_modp_scalar(uint32_t* row, const uint32_t* piv, uint32_t f, size_t n) {
    for (size_t j = 0; j < n; ++j) {
        uint32_t m = fold(uint64_t(f) * piv[j]);
        uint32_t r = row[j];
        row[j] = r >= m ? r - m : r + P - m;
    }
}

#if !defined(QHC_HAVE_AVX2_TU)
void submul_modp_avx2(uint32_t* row, const uint32_t* piv, uint32_t f, size_t n) {
    submul_modp_scalar(row, piv, f, n);
}
#endif

bool avx2_available() { return detect() == Isa::Avx2; }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa == Isa::Avx2 && !avx2_available()) return;
    current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void submul_modp(uint32_t* row, const uint32_t* piv, uint32_t f, size_t n) {
    if (f == 0) return;
    if (active_isa() == Isa::Avx2) submul_modp_avx2(row, piv, f, n);
    else submul_modp_scalar(row, piv, f, n);
}

}  // namespace qhc::simd
