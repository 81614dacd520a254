#include <catsweep/catalan.hpp>

#include <catsweep/binomial.hpp>

#include <stdexcept>

namespace catsweep {

BigInt catalan_order(uint64_t n, uint64_t m) {
  uint64_t top = m * n + n;
  BigInt central = binom_exact(top, static_cast<long long>(n));

  BigInt division = central;
  uint32_t rem = 0;
  division.div_small(static_cast<uint32_t>(m * n + 1), &rem);

  BigInt subtraction = binom_exact(top, static_cast<long long>(n) - 1);
  subtraction.mul_small(static_cast<long long>(m));
  subtraction = central - subtraction;

  if (rem != 0 || division != subtraction)
    throw std::logic_error("catalan_order: closed forms disagree");
  return division;
}

Residue catalan2_mod(uint64_t k, uint64_t p) {
  Residue a = binom_mod_lucas(3 * k, k, p);
  if (k == 0) return a;  // binom(0, -1) = 0
  Residue b = binom_mod_lucas(3 * k, k - 1, p);
  return a - (b + b);
}

}  // namespace catsweep
