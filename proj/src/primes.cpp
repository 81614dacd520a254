#include <catsweep/primes.hpp>

#include <catsweep/modarith.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace catsweep {

namespace {

// Sieve of odd numbers: bit i of the map stands for 2i+3.
std::vector<uint8_t> odd_composite_map(uint64_t limit) {
  uint64_t count = limit < 3 ? 0 : (limit - 3) / 2 + 1;
  std::vector<uint8_t> composite(count, 0);
  for (uint64_t i = 0; i < count; ++i) {
    if (composite[i]) continue;
    uint64_t p = 2 * i + 3;
    if (p * p > limit) break;
    for (uint64_t j = (p * p - 3) / 2; j < count; j += p) composite[j] = 1;
  }
  return composite;
}

}  // namespace

std::vector<uint64_t> sieve_primes(uint64_t limit) {
  if (limit > (uint64_t(1) << 33))
    throw std::invalid_argument("sieve_primes: limit too large, use PrimeRange");
  std::vector<uint64_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  auto composite = odd_composite_map(limit);
  for (uint64_t i = 0; i < composite.size(); ++i)
    if (!composite[i]) primes.push_back(2 * i + 3);
  return primes;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeRange::PrimeRange(uint64_t lo, uint64_t hi) : lo_(std::max<uint64_t>(lo, 2)), hi_(hi) {
  if (hi < lo) throw std::invalid_argument("PrimeRange: lo > hi");
}

void PrimeRange::for_each(const std::function<void(uint64_t)>& f) const {
  if (hi_ < lo_) return;
  // Narrow windows far from zero: testing candidates directly beats
  // building a sqrt(hi) base sieve.
  if (hi_ - lo_ < 4096 && lo_ > 100000000ull) {
    for (uint64_t n = lo_; n <= hi_; ++n)
      if (is_prime(n)) f(n);
    return;
  }
  if (lo_ <= 2 && 2 <= hi_) f(2);
  uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi_)));
  while (root * root > hi_) --root;
  while ((root + 1) * (root + 1) <= hi_) ++root;
  auto base = sieve_primes(root);

  constexpr uint64_t segment = 1 << 18;
  std::vector<uint8_t> composite(segment);
  uint64_t first = std::max<uint64_t>(lo_, 3) | 1;  // odd start
  for (uint64_t low = first; low <= hi_; low += 2 * segment) {
    uint64_t high = std::min(hi_, low + 2 * segment - 2);
    uint64_t count = (high - low) / 2 + 1;  // odd numbers low, low+2, ...
    std::fill(composite.begin(), composite.begin() + count, 0);
    for (uint64_t p : base) {
      if (p == 2) continue;
      if (p * p > high) break;
      uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (uint64_t j = (start - low) / 2; j < count; j += p) composite[j] = 1;
    }
    // Base primes inside the segment stay unmarked (their first marked
    // multiple is p*p), so they are emitted here like any other prime.
    for (uint64_t i = 0; i < count; ++i)
      if (!composite[i]) f(low + 2 * i);
  }
}

std::vector<uint64_t> PrimeRange::to_vector() const {
  std::vector<uint64_t> v;
  for_each([&](uint64_t p) { v.push_back(p); });
  return v;
}

}  // namespace catsweep
