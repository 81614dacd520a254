#include <catsweep/modarith.hpp>

namespace catsweep {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  assert(m >= 1);
  if (m == 1) return 0;
  uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

uint64_t canonical_mod(long long v, uint64_t m) {
  assert(m >= 1);
  long long r = v % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<uint64_t>(r);
}

namespace {

// Extended Euclid on (a, m) with m < 2^63; returns x with a*x = gcd (mod m).
uint64_t inverse_or_throw(uint64_t a, uint64_t m) {
  int64_t old_r = static_cast<int64_t>(a), r = static_cast<int64_t>(m);
  int64_t old_s = 1, s = 0;
  while (r != 0) {
    int64_t q = old_r / r;
    int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw NotInvertibleError(static_cast<long long>(a), m);
  return canonical_mod(old_s, m);
}

}  // namespace

Residue Residue::inv() const { return Residue(inverse_or_throw(value_, modulus_), modulus_); }

Residue mod_pow(long long base, uint64_t exp, uint64_t m) {
  assert(m >= 2);
  return Residue(pow_mod(canonical_mod(base, m), exp, m), m);
}

Residue mod_inv(long long a, uint64_t m) {
  assert(m >= 2);
  return Residue(inverse_or_throw(canonical_mod(a, m), m), m);
}

int sign_half(uint64_t p) {
  if (p < 3 || p % 2 == 0) throw std::domain_error("sign_half: p must be an odd prime");
  return ((p - 1) / 2) % 2 == 0 ? 1 : -1;
}

int legendre3(long long a) {
  long long r = a % 3;
  if (r < 0) r += 3;
  return r == 2 ? -1 : static_cast<int>(r);
}

Montgomery64::Montgomery64(uint64_t m) : m_(m) {
  // redc keeps the result below 2m, which must fit: any odd m < 2^63 works
  assert(m >= 3 && m % 2 == 1 && m < (uint64_t(1) << 63));
  // Newton iteration for m^{-1} mod 2^64; each step doubles the precision.
  uint64_t inv = m;
  for (int i = 0; i < 5; ++i) inv *= 2 - m * inv;
  neg_inv_ = ~inv + 1;
  one_ = static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) % m);
  r2_ = mul_mod(one_, one_, m);
}

}  // namespace catsweep
