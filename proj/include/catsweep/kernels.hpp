#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace catsweep::kernels {

// Array kernels over canonical residues (inputs < m, 2 <= m < 2^32).
// A scalar reference backend plus SIMD variants picked at runtime; every
// backend produces bit-identical results. The SIMD paths additionally
// require m < 2^26 (products stay exact in 64-bit lanes / doubles); the
// dispatching wrappers below fall back to scalar beyond that bound.
struct Backend {
  const char* name;
  // sum(a[i] * b[i]) mod m
  uint64_t (*dot_mod)(const uint32_t* a, const uint32_t* b, size_t n, uint64_t m);
  // sum(a[i]) mod m
  uint64_t (*sum_mod)(const uint32_t* a, size_t n, uint64_t m);
  // dst[i] = a[i] * b[i] mod m
  void (*mul_mod)(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint64_t m);
  // dst[i] = a[i] * c mod m
  void (*scale_mod)(uint32_t* dst, const uint32_t* a, uint32_t c, size_t n, uint64_t m);
  // dst[i] = (a[i] - c * b[i]) mod m
  void (*mul_sub_mod)(uint32_t* dst, const uint32_t* a, uint32_t c, const uint32_t* b, size_t n,
                      uint64_t m);
};

const Backend& scalar_backend();
const Backend* avx2_backend();  // null when not compiled in or CPU lacks it
const Backend* neon_backend();

// Runtime selection; the CATSWEEP_KERNELS environment variable
// (scalar|avx2|neon) overrides it.
const Backend& active_backend();
std::vector<const Backend*> available_backends();

constexpr uint64_t simd_modulus_bound = uint64_t(1) << 26;

uint64_t dot_mod(const uint32_t* a, const uint32_t* b, size_t n, uint64_t m);
uint64_t sum_mod(const uint32_t* a, size_t n, uint64_t m);
void mul_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint64_t m);
void scale_mod(uint32_t* dst, const uint32_t* a, uint32_t c, size_t n, uint64_t m);
void mul_sub_mod(uint32_t* dst, const uint32_t* a, uint32_t c, const uint32_t* b, size_t n,
                 uint64_t m);

}  // namespace catsweep::kernels
