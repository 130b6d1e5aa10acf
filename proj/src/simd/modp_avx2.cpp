#include "qhc/simd/modp.hpp"

#include <immintrin.h>

namespace qhc::simd {

namespace {

constexpr uint32_t P = 2147483647u;

// Mersenne fold of four 62-bit products held in 64-bit lanes; the result
// is < 2^31 + 1 before the final conditional subtract.
inline __m256i fold64(__m256i x, __m256i p64) {
    x = _mm256_add_epi64(_mm256_and_si256(x, p64), _mm256_srli_epi64(x, 31));
    x = _mm256_add_epi64(_mm256_and_si256(x, p64), _mm256_srli_epi64(x, 31));
    return x;
}

}  // namespace

void submul_modp_avx2(uint32_t* row, const uint32_t* piv, uint32_t f, size_t n) {
    const __m256i p64 = _mm256_set1_epi64x(P);
    const __m256i p32 = _mm256_set1_epi32(int(P));
    const __m256i fv = _mm256_set1_epi64x(f);
    size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(piv + j));
        __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
        __m256i even = fold64(_mm256_mul_epu32(b, fv), p64);
        __m256i odd = fold64(_mm256_mul_epu32(_mm256_srli_epi64(b, 32), fv), p64);
        // even lanes hold values in the low dword, odd in the low dword too;
        // interleave back into eight 32-bit lanes.
        __m256i m = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
        // m in [0, p]; reduce p to 0.
        m = _mm256_sub_epi32(m, _mm256_and_si256(_mm256_cmpeq_epi32(m, p32), p32));
        // r - m mod p: add p where r < m (signed compare is safe below 2^31).
        __m256i d = _mm256_sub_epi32(r, m);
        __m256i lt = _mm256_cmpgt_epi32(m, r);
        d = _mm256_add_epi32(d, _mm256_and_si256(lt, p32));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + j), d);
    }
    if (j < n) submul_modp_scalar(row + j, piv + j, f, n - j);
}

}  // namespace qhc::simd
