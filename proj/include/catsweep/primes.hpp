#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace catsweep {

// Complete sorted list of primes <= limit (simple odd-wheel sieve).
std::vector<uint64_t> sieve_primes(uint64_t limit);

// Deterministic Miller-Rabin, valid for every 64-bit n.
bool is_prime(uint64_t n);

// Prime enumeration over [lo, hi], segmented so memory stays bounded no
// matter how large hi is. Enumeration is pure: the range can be split at
// arbitrary boundaries and the pieces handed to independent workers.
class PrimeRange {
public:
  PrimeRange(uint64_t lo, uint64_t hi);

  uint64_t lo() const { return lo_; }
  uint64_t hi() const { return hi_; }

  void for_each(const std::function<void(uint64_t)>& f) const;
  std::vector<uint64_t> to_vector() const;

private:
  uint64_t lo_, hi_;
};

}  // namespace catsweep
