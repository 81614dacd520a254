#pragma once

#include <catsweep/bigint.hpp>

namespace catsweep {

// Three independent evaluations of the same quantity, checked equal over a
// finite box by the tests: the coefficient of x^m in (2 + 2x - 4x^3)^n.

// 2^n * sum_{k=0}^{floor(m/3)} (-2)^k binom(n, m-3k) binom(3k-m+n, k);
// the second binomial takes the generalized (possibly negative) upper index.
BigInt coeff_single_sum(long long m, long long n);

// (-1)^m * sum_{j=0}^{n} binom(n,j) sum_{k=0}^{m} (-2)^k binom(n, m-k) binom(2j, k).
BigInt coeff_double_sum(long long m, long long n);

// Coefficient of x^m in (2 + 2x - 4x^3)^n by dense exact polynomial
// exponentiation; 0 for m > 3n.
BigInt poly_coeff(long long m, long long n);

}  // namespace catsweep
