#include <catsweep/kernels.hpp>

#include <cassert>
#include <cstdlib>
#include <cstring>

namespace catsweep::kernels {

namespace {

const Backend& pick_backend() {
  const Backend* simd = nullptr;
#if defined(__x86_64__)
  if (avx2_backend() && __builtin_cpu_supports("avx2")) simd = avx2_backend();
#endif
  if (!simd) simd = neon_backend();
  if (const char* env = std::getenv("CATSWEEP_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_backend();
    if (std::strcmp(env, "avx2") == 0 && simd && std::strcmp(simd->name, "avx2") == 0) return *simd;
    if (std::strcmp(env, "neon") == 0 && simd && std::strcmp(simd->name, "neon") == 0) return *simd;
    return scalar_backend();  // unknown or unavailable name
  }
  return simd ? *simd : scalar_backend();
}

}  // namespace

const Backend& active_backend() {
  static const Backend& chosen = pick_backend();
  return chosen;
}

std::vector<const Backend*> available_backends() {
  std::vector<const Backend*> v{&scalar_backend()};
#if defined(__x86_64__)
  if (avx2_backend() && __builtin_cpu_supports("avx2")) v.push_back(avx2_backend());
#endif
  if (neon_backend()) v.push_back(neon_backend());
  return v;
}

uint64_t dot_mod(const uint32_t* a, const uint32_t* b, size_t n, uint64_t m) {
  assert(m >= 2 && m < (uint64_t(1) << 32));
  const Backend& k = m < simd_modulus_bound ? active_backend() : scalar_backend();
  return k.dot_mod(a, b, n, m);
}

uint64_t sum_mod(const uint32_t* a, size_t n, uint64_t m) {
  assert(m >= 2 && m < (uint64_t(1) << 32));
  const Backend& k = m < simd_modulus_bound ? active_backend() : scalar_backend();
  return k.sum_mod(a, n, m);
}

void mul_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint64_t m) {
  assert(m >= 2 && m < (uint64_t(1) << 32));
  const Backend& k = m < simd_modulus_bound ? active_backend() : scalar_backend();
  k.mul_mod(dst, a, b, n, m);
}

void scale_mod(uint32_t* dst, const uint32_t* a, uint32_t c, size_t n, uint64_t m) {
  assert(m >= 2 && m < (uint64_t(1) << 32));
  const Backend& k = m < simd_modulus_bound ? active_backend() : scalar_backend();
  k.scale_mod(dst, a, c, n, m);
}

void mul_sub_mod(uint32_t* dst, const uint32_t* a, uint32_t c, const uint32_t* b, size_t n,
                 uint64_t m) {
  assert(m >= 2 && m < (uint64_t(1) << 32));
  const Backend& k = m < simd_modulus_bound ? active_backend() : scalar_backend();
  k.mul_sub_mod(dst, a, c, b, n, m);
}

}  // namespace catsweep::kernels
