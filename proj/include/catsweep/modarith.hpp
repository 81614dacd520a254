#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace catsweep {

// Raised when an inverse modulo m does not exist (gcd(a, m) != 1). In the
// congruence checkers this only happens outside a statement's hypothesis
// range, where it is folded into the "inapplicable" verdict.
struct NotInvertibleError : std::domain_error {
  NotInvertibleError(long long a, uint64_t m)
      : std::domain_error("not invertible: " + std::to_string(a) + " mod " + std::to_string(m)) {}
};

// Plain 128-bit-intermediate helpers; any modulus below 2^63.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);
uint64_t canonical_mod(long long v, uint64_t m);

// Canonical residue modulo m >= 2: the value always lies in [0, m), and
// arithmetic keeps it there. All operations are pure.
class Residue {
public:
  Residue(uint64_t value, uint64_t modulus) : value_(value), modulus_(modulus) {
    assert(modulus_ >= 2 && value_ < modulus_);
  }
  static Residue reduce(long long v, uint64_t modulus) {
    return Residue(canonical_mod(v, modulus), modulus);
  }

  uint64_t value() const { return value_; }
  uint64_t modulus() const { return modulus_; }

  friend Residue operator+(Residue a, Residue b) {
    assert(a.modulus_ == b.modulus_);
    uint64_t s = a.value_ + b.value_;
    return Residue(s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_);
  }
  friend Residue operator-(Residue a, Residue b) {
    assert(a.modulus_ == b.modulus_);
    uint64_t s = a.value_ + a.modulus_ - b.value_;
    return Residue(s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_);
  }
  friend Residue operator*(Residue a, Residue b) {
    assert(a.modulus_ == b.modulus_);
    return Residue(mul_mod(a.value_, b.value_, a.modulus_), a.modulus_);
  }
  Residue pow(uint64_t e) const { return Residue(pow_mod(value_, e, modulus_), modulus_); }
  Residue inv() const;

  bool operator==(const Residue& o) const = default;

private:
  uint64_t value_;
  uint64_t modulus_;
};

Residue mod_pow(long long base, uint64_t exp, uint64_t m);
Residue mod_inv(long long a, uint64_t m);  // throws NotInvertibleError

// (-1)^((p-1)/2) for odd p: +1 iff p = 1 (mod 4).
int sign_half(uint64_t p);
// The value in {-1, 0, 1} congruent to a modulo 3.
int legendre3(long long a);

// Barrett-style fixed modulus for hot loops. reduce(x) is exact for every
// 64-bit x; mul(a, b) requires the plain product to fit 64 bits.
class Mod64 {
public:
  explicit Mod64(uint64_t m) : m_(m) {
    assert(m >= 2);
    // floor(2^64 / m): the quotient estimate in reduce() is then off by at
    // most one, fixed with a single conditional subtract.
    magic_ = static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) / m);
  }
  uint64_t m() const { return m_; }
  uint64_t reduce(uint64_t x) const {
    uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * magic_) >> 64);
    uint64_t r = x - q * m_;
    return r >= m_ ? r - m_ : r;
  }
  uint64_t mul(uint64_t a, uint64_t b) const { return reduce(a * b); }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const {
    uint64_t s = a + m_ - b;
    return s >= m_ ? s - m_ : s;
  }

private:
  uint64_t m_;
  uint64_t magic_;
};

// Montgomery multiplication for an odd modulus below 2^63; carries the
// mod p^2 and mod p^3 passes of the checkers.
class Montgomery64 {
public:
  explicit Montgomery64(uint64_t m);
  uint64_t m() const { return m_; }
  uint64_t one() const { return one_; }          // R mod m
  uint64_t to(uint64_t x) const { return mul(x, r2_); }
  uint64_t from(uint64_t x) const { return redc(x); }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }

private:
  uint64_t redc(unsigned __int128 t) const {
    uint64_t u = static_cast<uint64_t>(t) * neg_inv_;
    uint64_t r = static_cast<uint64_t>((t + static_cast<unsigned __int128>(u) * m_) >> 64);
    return r >= m_ ? r - m_ : r;
  }
  uint64_t m_, neg_inv_, one_, r2_;
};

}  // namespace catsweep
