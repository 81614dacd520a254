#include <catsweep/bigint.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace catsweep {

BigInt::BigInt(long long v) {
  unsigned long long mag;
  if (v < 0) {
    sign_ = -1;
    mag = ~static_cast<unsigned long long>(v) + 1ull;
  } else {
    sign_ = 1;
    mag = static_cast<unsigned long long>(v);
  }
  while (mag) {
    limbs_.push_back(static_cast<uint32_t>(mag));
    mag >>= 32;
  }
}

BigInt BigInt::power_of_two(unsigned bits) {
  BigInt r;
  r.limbs_.assign(bits / 32 + 1, 0);
  r.limbs_.back() = 1u << (bits % 32);
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 1;
}

BigInt& BigInt::negate() {
  if (!limbs_.empty()) sign_ = -sign_;
  return *this;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.negate();
  return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0);
    a[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    borrow = s < 0;
    a[i] = static_cast<uint32_t>(s + (borrow << 32));
  }
  assert(borrow == 0 && "sub_mag requires |a| >= |b|");
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (sign_ == o.sign_) {
    add_mag(limbs_, o.limbs_);
  } else {
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) {
      limbs_.clear();
      sign_ = 1;
    } else if (c > 0) {
      sub_mag(limbs_, o.limbs_);
    } else {
      std::vector<uint32_t> tmp = o.limbs_;
      sub_mag(tmp, limbs_);
      limbs_ = std::move(tmp);
      sign_ = o.sign_;
    }
    trim();
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  if (&o == this) {
    limbs_.clear();
    sign_ = 1;
    return *this;
  }
  BigInt neg = o;
  neg.negate();
  return *this += neg;
}

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  if (is_zero() || o.is_zero()) return r;
  r.sign_ = sign_ * o.sign_;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = limbs_[i];
    for (size_t j = 0; j < o.limbs_.size(); ++j) {
      uint64_t s = ai * o.limbs_[j] + r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    r.limbs_[i + o.limbs_.size()] = static_cast<uint32_t>(carry);
  }
  r.trim();
  return r;
}

BigInt& BigInt::mul_small(long long f) {
  if (is_zero()) return *this;
  if (f == 0) {
    limbs_.clear();
    sign_ = 1;
    return *this;
  }
  unsigned long long mag;
  if (f < 0) {
    sign_ = -sign_;
    mag = ~static_cast<unsigned long long>(f) + 1ull;
  } else {
    mag = static_cast<unsigned long long>(f);
  }
  unsigned __int128 carry = 0;
  for (auto& limb : limbs_) {
    unsigned __int128 s = static_cast<unsigned __int128>(limb) * mag + carry;
    limb = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  while (carry) {
    limbs_.push_back(static_cast<uint32_t>(carry));
    carry >>= 32;
  }
  return *this;
}

BigInt& BigInt::div_small(uint32_t d, uint32_t* rem) {
  if (d == 0) throw std::logic_error("BigInt: division by zero");
  uint64_t r = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t cur = (r << 32) | limbs_[i];
    limbs_[i] = static_cast<uint32_t>(cur / d);
    r = cur % d;
  }
  if (rem) {
    *rem = static_cast<uint32_t>(r);
  } else if (r != 0) {
    throw std::logic_error("BigInt: inexact division");
  }
  trim();
  return *this;
}

BigInt& BigInt::shift_left(unsigned bits) {
  if (is_zero() || bits == 0) return *this;
  const unsigned limb_shift = bits / 32, bit_shift = bits % 32;
  const size_t old = limbs_.size();
  limbs_.resize(old + limb_shift + 1, 0);
  // High to low: each source limb is consumed before it can be overwritten.
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t v = 0;
    if (i >= limb_shift) {
      size_t src = i - limb_shift;
      if (src < old) v = static_cast<uint64_t>(limbs_[src]) << bit_shift;
      if (bit_shift && src >= 1 && src - 1 < old) v |= limbs_[src - 1] >> (32 - bit_shift);
    }
    limbs_[i] = static_cast<uint32_t>(v);
  }
  trim();
  return *this;
}

uint64_t BigInt::mod_u64(uint64_t m) const {
  assert(m >= 1);
  unsigned __int128 r = 0;
  for (size_t i = limbs_.size(); i-- > 0;) r = ((r << 32) | limbs_[i]) % m;
  uint64_t v = static_cast<uint64_t>(r);
  if (sign_ < 0 && v != 0) v = m - v;
  return v;
}

long long BigInt::to_ll() const {
  unsigned long long mag = 0;
  if (limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
  for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  if (sign_ >= 0) {
    if (mag > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit in long long");
    return static_cast<long long>(mag);
  }
  if (mag > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit in long long");
  return -static_cast<long long>(mag - 1) - 1;
}

int BigInt::compare(const BigInt& o) const {
  int s = signum(), t = o.signum();
  if (s != t) return s < t ? -1 : 1;
  if (s == 0) return 0;
  int c = cmp_mag(limbs_, o.limbs_);
  return s > 0 ? c : -c;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt t = *this;
  std::string digits;
  while (!t.is_zero()) {
    uint32_t rem;
    t.div_small(1000000000u, &rem);
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace catsweep
