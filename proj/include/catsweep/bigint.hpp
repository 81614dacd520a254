#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace catsweep {

// Arbitrary-precision signed integer: sign + 32-bit limbs, little endian.
// Covers exactly what the exact binomial / Catalan / identity oracles need:
// ring arithmetic, small divisors, bit shifts and reduction by a 64-bit
// modulus. All operations are pure value semantics; safe to use from any
// number of threads.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt power_of_two(unsigned bits);

  bool is_zero() const { return limbs_.empty(); }
  int signum() const { return limbs_.empty() ? 0 : sign_; }

  BigInt& negate();
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }

  BigInt operator*(const BigInt& o) const;
  BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }
  BigInt& mul_small(long long f);

  // Divides by d > 0. With rem == nullptr the division must be exact
  // (throws std::logic_error otherwise); with rem the remainder of the
  // magnitude is stored there.
  BigInt& div_small(uint32_t d, uint32_t* rem = nullptr);

  BigInt& shift_left(unsigned bits);

  uint64_t mod_u64(uint64_t m) const;  // canonical residue in [0, m)
  long long to_ll() const;             // value must fit

  int compare(const BigInt& o) const;  // -1 / 0 / +1
  bool operator==(const BigInt& o) const { return compare(o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(o) != 0; }
  bool operator<(const BigInt& o) const { return compare(o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
  bool operator>(const BigInt& o) const { return compare(o) > 0; }
  bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

  std::string to_string() const;
  size_t limb_count() const { return limbs_.size(); }

private:
  int sign_ = 1;  // meaningful only when limbs_ is nonempty
  std::vector<uint32_t> limbs_;

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

}  // namespace catsweep
