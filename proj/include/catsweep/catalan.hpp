#pragma once

#include <catsweep/bigint.hpp>
#include <catsweep/modarith.hpp>

#include <cstdint>

namespace catsweep {

// n-th Catalan number of order m: binom(mn+n, n)/(mn+1), equivalently
// binom(mn+n, n) - m*binom(mn+n, n-1). Both closed forms are evaluated and
// compared; a mismatch means an arithmetic bug and throws std::logic_error.
BigInt catalan_order(uint64_t n, uint64_t m);

// C_k^(2) mod p, always through the subtraction form
// binom(3k,k) - 2*binom(3k,k-1), which stays defined when p | 2k+1.
Residue catalan2_mod(uint64_t k, uint64_t p);

}  // namespace catsweep
