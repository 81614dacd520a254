// AVX2 backend. Compiled with -mavx2; only reached after a cpuid check.
//
// Reductions accumulate 32x32->64 lane products (exact for m < 2^26, spilled
// before a lane can overflow). Elementwise kernels run in doubles: with all
// operands below 2^26 the product, the quotient estimate and the remainder
// are exact in the 53-bit mantissa, and the estimate is off by at most one,
// fixed by one correction on each side.

#include <catsweep/kernels.hpp>

#if defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>

namespace catsweep::kernels {

namespace {

unsigned __int128 spill(__m256i acc) {
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  unsigned __int128 s = lanes[0];
  return s + lanes[1] + lanes[2] + lanes[3];
}

uint64_t dot_mod_avx2(const uint32_t* a, const uint32_t* b, size_t n, uint64_t m) {
  unsigned __int128 total = 0;
  size_t i = 0;
  // products < 2^52; a lane may take chunk/4 of them before 64 bits overflow
  const uint64_t sq = (m - 1) * (m - 1);
  const size_t chunk = sq ? static_cast<size_t>(std::min<uint64_t>(
                                (~uint64_t(0) / sq) * 4, uint64_t(1) << 30))
                          : (size_t(1) << 30);
  while (n - i >= 4) {
    size_t stop = i + std::min(n - i, chunk) / 4 * 4;
    __m256i acc = _mm256_setzero_si256();
    for (; i < stop; i += 4) {
      __m256i av = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
      __m256i bv = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
      acc = _mm256_add_epi64(acc, _mm256_mul_epu32(av, bv));
    }
    total += spill(acc);
    if (n - i < 4) break;
  }
  for (; i < n; ++i) total += static_cast<uint64_t>(a[i]) * b[i];
  return static_cast<uint64_t>(total % m);
}

uint64_t sum_mod_avx2(const uint32_t* a, size_t n, uint64_t m) {
  unsigned __int128 total = 0;
  size_t i = 0;
  const size_t chunk = static_cast<size_t>(
      std::min<uint64_t>((~uint64_t(0) / (m - 1)) * 4, uint64_t(1) << 30));
  while (n - i >= 4) {
    size_t stop = i + std::min(n - i, chunk) / 4 * 4;
    __m256i acc = _mm256_setzero_si256();
    for (; i < stop; i += 4) {
      __m256i av = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
      acc = _mm256_add_epi64(acc, av);
    }
    total += spill(acc);
    if (n - i < 4) break;
  }
  for (; i < n; ++i) total += a[i];
  return static_cast<uint64_t>(total % m);
}

inline __m256d mod_reduce_pd(__m256d x, __m256d md, __m256d inv) {
  __m256d q = _mm256_round_pd(_mm256_mul_pd(x, inv), _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, md));
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), md));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, md, _CMP_GE_OQ), md));
  return r;
}

void mul_mod_avx2(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint64_t m) {
  const __m256d md = _mm256_set1_pd(static_cast<double>(m));
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(m));
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ad = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
    __m256d bd = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
    __m256d r = mod_reduce_pd(_mm256_mul_pd(ad, bd), md, inv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvtpd_epi32(r));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) * b[i] % m);
}

void scale_mod_avx2(uint32_t* dst, const uint32_t* a, uint32_t c, size_t n, uint64_t m) {
  const __m256d md = _mm256_set1_pd(static_cast<double>(m));
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(m));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ad = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
    __m256d r = mod_reduce_pd(_mm256_mul_pd(ad, cd), md, inv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvtpd_epi32(r));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) * c % m);
}

void mul_sub_mod_avx2(uint32_t* dst, const uint32_t* a, uint32_t c, const uint32_t* b, size_t n,
                      uint64_t m) {
  const __m256d md = _mm256_set1_pd(static_cast<double>(m));
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(m));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ad = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
    __m256d bd = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
    __m256d t = mod_reduce_pd(_mm256_mul_pd(cd, bd), md, inv);
    __m256d r = _mm256_sub_pd(ad, t);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), md));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvtpd_epi32(r));
  }
  for (; i < n; ++i) {
    uint64_t t = static_cast<uint64_t>(c) * b[i] % m;
    uint64_t r = a[i] + m - t;
    dst[i] = static_cast<uint32_t>(r >= m ? r - m : r);
  }
}

}  // namespace

const Backend* avx2_backend() {
  static const Backend backend{"avx2",        dot_mod_avx2,   sum_mod_avx2,
                               mul_mod_avx2,  scale_mod_avx2, mul_sub_mod_avx2};
  return &backend;
}

}  // namespace catsweep::kernels

#else

namespace catsweep::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace catsweep::kernels

#endif
