#include <catsweep/identities.hpp>

#include <catsweep/binomial.hpp>

#include <cassert>
#include <vector>

namespace catsweep {

BigInt coeff_single_sum(long long m, long long n) {
  assert(m >= 0 && n >= 0);
  BigInt sum(0);
  for (long long k = 0; k <= m / 3; ++k) {
    BigInt term = binom_exact(static_cast<uint64_t>(n), m - 3 * k);
    if (term.is_zero()) continue;
    term *= binom_gen(3 * k - m + n, k);
    if (k % 2 == 1) term.negate();
    term.shift_left(static_cast<unsigned>(k));  // (-2)^k
    sum += term;
  }
  sum.shift_left(static_cast<unsigned>(n));  // 2^n
  return sum;
}

BigInt coeff_double_sum(long long m, long long n) {
  assert(m >= 0 && n >= 0);
  BigInt sum(0);
  for (long long j = 0; j <= n; ++j) {
    BigInt outer = binom_exact(static_cast<uint64_t>(n), j);
    BigInt inner(0);
    for (long long k = 0; k <= m; ++k) {
      BigInt term = binom_exact(static_cast<uint64_t>(n), m - k);
      if (term.is_zero()) continue;
      term *= binom_exact(static_cast<uint64_t>(2 * j), k);
      if (term.is_zero()) continue;
      if (k % 2 == 1) term.negate();
      term.shift_left(static_cast<unsigned>(k));
      inner += term;
    }
    sum += outer * inner;
  }
  if (m % 2 == 1) sum.negate();
  return sum;
}

BigInt poly_coeff(long long m, long long n) {
  assert(m >= 0 && n >= 0);
  if (m > 3 * n) return BigInt(0);
  // dense coefficients of (2 + 2x - 4x^3)^i, i = 0..n
  std::vector<BigInt> c{BigInt(1)};
  for (long long i = 0; i < n; ++i) {
    std::vector<BigInt> next(c.size() + 3);
    for (size_t t = 0; t < c.size(); ++t) {
      if (c[t].is_zero()) continue;
      BigInt twice = c[t];
      twice.mul_small(2);
      next[t] += twice;
      next[t + 1] += twice;
      BigInt quad = c[t];
      quad.mul_small(-4);
      next[t + 3] += quad;
    }
    c = std::move(next);
  }
  return c[static_cast<size_t>(m)];
}

}  // namespace catsweep
