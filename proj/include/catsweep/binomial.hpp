#pragma once

#include <catsweep/bigint.hpp>
#include <catsweep/modarith.hpp>

#include <cstdint>
#include <memory>
#include <vector>

namespace catsweep {

// Batch-built factorial machinery mod p: fact[i] = i!, inv_fact[i] and
// inv[i] for 0 <= i < p. The prefix products run as four interleaved
// block chains, each inverted with one extended-Euclid seed, so the whole
// table costs O(p) multiplications (batch inversion); inv[] itself is one
// vectorized elementwise product inv_fact[i] * fact[i-1].
class InverseTable {
public:
  InverseTable() = default;  // empty; rebuild() before use
  explicit InverseTable(uint64_t p) { rebuild(p); }
  void rebuild(uint64_t p);  // reuses the backing storage across primes

  uint64_t p() const { return p_; }
  uint64_t operator[](uint64_t i) const { return inv_[i]; }
  const uint32_t* data() const { return inv_.data(); }
  const uint32_t* fact() const { return fact_.data(); }
  const uint32_t* inv_fact() const { return inv_fact_.data(); }

private:
  uint64_t p_ = 0;
  std::vector<uint32_t> fact_, inv_fact_, inv_;
};

// An integer class p^val * unit modulo p^(val+e): the unit is kept modulo
// p^e and the p-adic valuation separately, so multiplying or dividing by
// p-divisible factors never touches a zero divisor.
struct ValuedResidue {
  uint64_t prime = 2;
  uint32_t exponent = 1;  // e
  uint64_t modulus = 2;   // p^e
  uint64_t unit = 1;      // in [0, p^e), coprime to p (0 only for the zero class)
  int64_t val = 0;

  static ValuedResidue one(uint64_t p, uint32_t e);

  void mul_integer(uint64_t f);  // f >= 1; strips factors of p into val
  void div_integer(uint64_t f);  // exact p-adic division
  void mul(const ValuedResidue& o);

  // p^val * unit mod p^e (zero once val >= e).
  uint64_t residue() const;
};

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binom_exact(uint64_t n, long long k);

// Generalized upper index: a(a-1)...(a-k+1)/k! for k >= 0 (any integer a,
// negative included); 0 for k < 0.
BigInt binom_gen(long long a, long long k);

// binom(n, k) mod p by Lucas' congruence: the product of the base-p
// digit binomials.
Residue binom_mod_lucas(uint64_t n, uint64_t k, uint64_t p);

// n! = p^val * unit with gcd(unit, p) = 1, unit mod p^e; val is Legendre's
// sum of floor(n/p^i). Unit products over a full period [1, p^e] contribute
// the generalized Wilson sign (-1 except p = 2, e >= 3).
ValuedResidue factorial_decomp(uint64_t n, uint64_t p, uint32_t e);

// binom(n, k) as a ValuedResidue mod p^e (three factorial decompositions);
// requires k <= n.
ValuedResidue binom_mod_valued(uint64_t n, uint64_t k, uint64_t p, uint32_t e);

// Streams binom(3k+d, k) mod p for k = 0..p-1 in O(1) multiplications per
// step: consecutive terms differ by the ratio
//   (3k+d+1)(3k+d+2)(3k+d+3) / ((k+1)(2k+d+1)(2k+d+2)),
// with p-divisible factors tracked as valuation increments on a
// ValuedResidue and the inverses taken from a shared batch-built table.
// Streams for different primes share nothing and run concurrently.
class BinomStream {
public:
  BinomStream(uint32_t d, uint64_t p);
  BinomStream(uint32_t d, uint64_t p, std::shared_ptr<const InverseTable> inv);

  uint64_t p() const { return p_; }
  uint32_t d() const { return d_; }
  uint64_t k() const { return k_; }
  const ValuedResidue& value() const { return cur_; }
  uint64_t residue() const { return cur_.val > 0 ? 0 : cur_.unit; }

  void advance();  // k -> k+1; valid while k+1 <= p-1

private:
  friend struct BinomRowFiller;
  uint64_t p_;
  uint32_t d_;
  std::shared_ptr<const InverseTable> inv_;
  Mod64 mod_;
  uint64_t k_ = 0;
  uint64_t r3_;  // (3k + d) mod p
  uint64_t r2_;  // (2k + d) mod p
  ValuedResidue cur_;

  uint64_t strip_into(uint64_t canonical, uint64_t full, int64_t dir);
};

// Bulk stream walk: out[k] = the collapsed residue of the k-th stream
// value, k = 0..p-1. Reference row filler (benchmark / equivalence tests).
void fill_binom_row(uint32_t d, uint64_t p, std::shared_ptr<const InverseTable> inv,
                    std::vector<uint32_t>& out);

struct RowScratch {
  std::vector<uint32_t> a, b;
};

// Production row filler: out[k] = binom(a*k + b, k + t) mod p for
// k = 0..p-1, with a in {2,3} and t in {-1,0}. Since k < p, Lucas'
// congruence collapses each term to binom((a*k+b) mod p, k+t) per quotient
// segment; a segment is then two vectorized elementwise products over the
// factorial tables, and the below-diagonal prefixes are exactly the
// vanishing tails of these rows. Equivalence with the stream is pinned by
// tests for every p <= 997.
void fill_binom_row_tables(const InverseTable& tables, unsigned a, unsigned b, int t,
                           std::vector<uint32_t>& out, RowScratch& scratch);

}  // namespace catsweep
