// NEON (aarch64) backend, mirroring the scalar semantics with the same
// exactness argument as the AVX2 double path (all operands below 2^26).

#include <catsweep/kernels.hpp>

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>

namespace catsweep::kernels {

namespace {

uint64_t dot_mod_neon(const uint32_t* a, const uint32_t* b, size_t n, uint64_t m) {
  unsigned __int128 total = 0;
  size_t i = 0;
  const uint64_t sq = (m - 1) * (m - 1);
  const size_t chunk = sq ? static_cast<size_t>(std::min<uint64_t>(
                                (~uint64_t(0) / sq) * 2, uint64_t(1) << 30))
                          : (size_t(1) << 30);
  while (n - i >= 4) {
    size_t stop = i + std::min(n - i, chunk) / 4 * 4;
    uint64x2_t acc0 = vdupq_n_u64(0), acc1 = vdupq_n_u64(0);
    for (; i < stop; i += 4) {
      uint32x4_t av = vld1q_u32(a + i);
      uint32x4_t bv = vld1q_u32(b + i);
      acc0 = vaddq_u64(acc0, vmull_u32(vget_low_u32(av), vget_low_u32(bv)));
      acc1 = vaddq_u64(acc1, vmull_u32(vget_high_u32(av), vget_high_u32(bv)));
    }
    unsigned __int128 s = vgetq_lane_u64(acc0, 0);
    s += vgetq_lane_u64(acc0, 1);
    s += vgetq_lane_u64(acc1, 0);
    s += vgetq_lane_u64(acc1, 1);
    total += s;
    if (n - i < 4) break;
  }
  for (; i < n; ++i) total += static_cast<uint64_t>(a[i]) * b[i];
  return static_cast<uint64_t>(total % m);
}

uint64_t sum_mod_neon(const uint32_t* a, size_t n, uint64_t m) {
  unsigned __int128 total = 0;
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t av = vld1q_u32(a + i);
    uint64x2_t s = vaddl_u32(vget_low_u32(av), vget_high_u32(av));
    total += vgetq_lane_u64(s, 0);
    total += vgetq_lane_u64(s, 1);
  }
  for (; i < n; ++i) total += a[i];
  return static_cast<uint64_t>(total % m);
}

inline float64x2_t mod_reduce_f64(float64x2_t x, float64x2_t md, float64x2_t inv) {
  float64x2_t q = vrndmq_f64(vmulq_f64(x, inv));
  float64x2_t r = vsubq_f64(x, vmulq_f64(q, md));
  uint64x2_t neg = vcltzq_f64(r);
  r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(neg, vreinterpretq_u64_f64(md))));
  uint64x2_t ge = vcgeq_f64(r, md);
  r = vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(ge, vreinterpretq_u64_f64(md))));
  return r;
}

inline float64x2_t widen_lo(uint32x4_t v) {
  return vcvtq_f64_u64(vmovl_u32(vget_low_u32(v)));
}
inline float64x2_t widen_hi(uint32x4_t v) {
  return vcvtq_f64_u64(vmovl_u32(vget_high_u32(v)));
}
inline uint32x2_t narrow(float64x2_t v) {
  return vmovn_u64(vcvtq_u64_f64(v));
}

void mul_mod_neon(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint64_t m) {
  const float64x2_t md = vdupq_n_f64(static_cast<double>(m));
  const float64x2_t inv = vdupq_n_f64(1.0 / static_cast<double>(m));
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t av = vld1q_u32(a + i);
    uint32x4_t bv = vld1q_u32(b + i);
    float64x2_t r0 = mod_reduce_f64(vmulq_f64(widen_lo(av), widen_lo(bv)), md, inv);
    float64x2_t r1 = mod_reduce_f64(vmulq_f64(widen_hi(av), widen_hi(bv)), md, inv);
    vst1q_u32(dst + i, vcombine_u32(narrow(r0), narrow(r1)));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) * b[i] % m);
}

void scale_mod_neon(uint32_t* dst, const uint32_t* a, uint32_t c, size_t n, uint64_t m) {
  const float64x2_t md = vdupq_n_f64(static_cast<double>(m));
  const float64x2_t inv = vdupq_n_f64(1.0 / static_cast<double>(m));
  const float64x2_t cd = vdupq_n_f64(static_cast<double>(c));
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t av = vld1q_u32(a + i);
    float64x2_t r0 = mod_reduce_f64(vmulq_f64(widen_lo(av), cd), md, inv);
    float64x2_t r1 = mod_reduce_f64(vmulq_f64(widen_hi(av), cd), md, inv);
    vst1q_u32(dst + i, vcombine_u32(narrow(r0), narrow(r1)));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) * c % m);
}

void mul_sub_mod_neon(uint32_t* dst, const uint32_t* a, uint32_t c, const uint32_t* b, size_t n,
                      uint64_t m) {
  const float64x2_t md = vdupq_n_f64(static_cast<double>(m));
  const float64x2_t inv = vdupq_n_f64(1.0 / static_cast<double>(m));
  const float64x2_t cd = vdupq_n_f64(static_cast<double>(c));
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t av = vld1q_u32(a + i);
    uint32x4_t bv = vld1q_u32(b + i);
    float64x2_t halves[2];
    for (int h = 0; h < 2; ++h) {
      float64x2_t ad = h ? widen_hi(av) : widen_lo(av);
      float64x2_t bd = h ? widen_hi(bv) : widen_lo(bv);
      float64x2_t t = mod_reduce_f64(vmulq_f64(cd, bd), md, inv);
      float64x2_t r = vsubq_f64(ad, t);
      uint64x2_t neg = vcltzq_f64(r);
      r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(neg, vreinterpretq_u64_f64(md))));
      halves[h] = r;
    }
    vst1q_u32(dst + i, vcombine_u32(narrow(halves[0]), narrow(halves[1])));
  }
  for (; i < n; ++i) {
    uint64_t t = static_cast<uint64_t>(c) * b[i] % m;
    uint64_t r = a[i] + m - t;
    dst[i] = static_cast<uint32_t>(r >= m ? r - m : r);
  }
}

}  // namespace

const Backend* neon_backend() {
  static const Backend backend{"neon",        dot_mod_neon,   sum_mod_neon,
                               mul_mod_neon,  scale_mod_neon, mul_sub_mod_neon};
  return &backend;
}

}  // namespace catsweep::kernels

#else

namespace catsweep::kernels {
const Backend* neon_backend() { return nullptr; }
}  // namespace catsweep::kernels

#endif
