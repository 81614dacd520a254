#pragma once

// Test-only oracle: evaluates both sides of every congruence statement with
// exact big-integer / rational arithmetic, straight from the displayed
// formulas (whole binomials, no streaming, no Lucas shortcuts). The
// production checkers are compared against these values.

#include <catsweep/bigint.hpp>
#include <catsweep/congruences.hpp>

#include <cstdint>

namespace catsweep::testing {

// Unreduced fraction; denominators stay products of the loop indices, which
// are tiny next to the numerators at the scales the oracle runs at.
struct BigRational {
  BigInt num{0};
  BigInt den{1};

  BigRational() = default;
  BigRational(BigInt n) : num(std::move(n)) {}
  BigRational(long long n) : num(n) {}
  BigRational(BigInt n, BigInt d);

  void add(const BigRational& o);
  uint64_t residue(uint64_t m) const;  // num * den^-1 mod m
};

BigRational naive_lhs(CongruenceId id, uint64_t p);
BigRational naive_rhs(CongruenceId id, uint64_t p);

}  // namespace catsweep::testing
