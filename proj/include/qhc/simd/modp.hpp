#pragma once

#include <cstddef>
#include <cstdint>

namespace qhc::simd {

// Residues are in [0, p) with p = 2^31 - 1.
// row[j] = row[j] - f * piv[j] (mod p) for j < n.
void submul_modp(uint32_t* row, const uint32_t* piv, uint32_t f, size_t n);

// Reference and vector variants; exposed for equivalence tests.
void submul_modp_scalar(uint32_t* row, const uint32_t* piv, uint32_t f, size_t n);
void submul_modp_avx2(uint32_t* row, const uint32_t* piv, uint32_t f, size_t n);

enum class Isa { Scalar, Avx2 };
Isa active_isa();
bool avx2_available();
// Forces a variant (tests, benchmarks); ignored if unsupported.
void force_isa(Isa isa);
const char* isa_name(Isa isa);

}  // namespace qhc::simd
