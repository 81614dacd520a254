#include <catsweep/kernels.hpp>

#include <catsweep/modarith.hpp>

#include <cassert>

namespace catsweep::kernels {

namespace {

uint64_t dot_mod_scalar(const uint32_t* a, const uint32_t* b, size_t n, uint64_t m) {
  // n * (m-1)^2 < 2^32 * 2^64 fits the 128-bit accumulator.
  unsigned __int128 acc = 0;
  for (size_t i = 0; i < n; ++i) acc += static_cast<uint64_t>(a[i]) * b[i];
  return static_cast<uint64_t>(acc % m);
}

uint64_t sum_mod_scalar(const uint32_t* a, size_t n, uint64_t m) {
  unsigned __int128 acc = 0;
  for (size_t i = 0; i < n; ++i) acc += a[i];
  return static_cast<uint64_t>(acc % m);
}

void mul_mod_scalar(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint64_t m) {
  Mod64 md(m);
  for (size_t i = 0; i < n; ++i)
    dst[i] = static_cast<uint32_t>(md.mul(a[i], static_cast<uint64_t>(b[i])));
}

void scale_mod_scalar(uint32_t* dst, const uint32_t* a, uint32_t c, size_t n, uint64_t m) {
  Mod64 md(m);
  for (size_t i = 0; i < n; ++i)
    dst[i] = static_cast<uint32_t>(md.mul(a[i], static_cast<uint64_t>(c)));
}

void mul_sub_mod_scalar(uint32_t* dst, const uint32_t* a, uint32_t c, const uint32_t* b, size_t n,
                        uint64_t m) {
  Mod64 md(m);
  for (size_t i = 0; i < n; ++i) {
    uint64_t t = md.mul(c, static_cast<uint64_t>(b[i]));
    uint64_t r = a[i] + m - t;
    dst[i] = static_cast<uint32_t>(r >= m ? r - m : r);
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar", dot_mod_scalar, sum_mod_scalar, mul_mod_scalar,
                               scale_mod_scalar, mul_sub_mod_scalar};
  return backend;
}

}  // namespace catsweep::kernels
