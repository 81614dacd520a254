#include <catsweep/binomial.hpp>

#include <catsweep/kernels.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace catsweep {

namespace {

uint64_t prime_power(uint64_t p, uint32_t e) {
  assert(p >= 2 && e >= 1);
  unsigned __int128 m = 1;
  for (uint32_t i = 0; i < e; ++i) {
    m *= p;
    if (m >= (static_cast<unsigned __int128>(1) << 63))
      throw std::invalid_argument("prime power exceeds 2^63");
  }
  return static_cast<uint64_t>(m);
}

}  // namespace

void InverseTable::rebuild(uint64_t p) {
  assert(p >= 2 && p < (uint64_t(1) << 32));
  p_ = p;
  fact_.resize(p);
  inv_fact_.resize(p);
  inv_.resize(p);
  Mod64 md(p);
  fact_[0] = static_cast<uint32_t>(1 % p);
  inv_fact_[0] = fact_[0];
  inv_[0] = 0;
  if (p == 2) {
    fact_[1] = 1;
    inv_fact_[1] = 1;
    inv_[1] = 1;
    return;
  }

  // Four interleaved block chains keep the multiplicative latency off the
  // critical path; block offsets are fixed up with one vectorized scale.
  const uint64_t len = (p - 1) / 4;
  const uint64_t starts[4] = {1, 1 + len, 1 + 2 * len, 1 + 3 * len};
  const uint64_t ends[4] = {starts[1], starts[2], starts[3], p};
  {
    uint64_t f0 = 1, f1 = 1, f2 = 1, f3 = 1;
    for (uint64_t off = 0; off < len; ++off) {
      f0 = md.mul(f0, starts[0] + off);
      f1 = md.mul(f1, starts[1] + off);
      f2 = md.mul(f2, starts[2] + off);
      f3 = md.mul(f3, starts[3] + off);
      fact_[starts[0] + off] = static_cast<uint32_t>(f0);
      fact_[starts[1] + off] = static_cast<uint32_t>(f1);
      fact_[starts[2] + off] = static_cast<uint32_t>(f2);
      fact_[starts[3] + off] = static_cast<uint32_t>(f3);
    }
    for (uint64_t i = starts[3] + len; i < p; ++i) {
      f3 = md.mul(f3, i);
      fact_[i] = static_cast<uint32_t>(f3);
    }
  }
  for (int b = 1; b < 4; ++b) {
    // once block b-1 is global, its last entry is the offset for block b
    uint32_t offset = fact_[starts[b] - 1];
    kernels::scale_mod(fact_.data() + starts[b], fact_.data() + starts[b], offset,
                       ends[b] - starts[b], p);
  }

  // Descending inverse-factorial chains, one Euclid seed per block, again
  // interleaved four-wide over the common block length.
  {
    uint64_t g0 = mod_inv(static_cast<long long>(fact_[ends[0] - 1]), p).value();
    uint64_t g1 = mod_inv(static_cast<long long>(fact_[ends[1] - 1]), p).value();
    uint64_t g2 = mod_inv(static_cast<long long>(fact_[ends[2] - 1]), p).value();
    uint64_t g3 = mod_inv(static_cast<long long>(fact_[ends[3] - 1]), p).value();
    for (uint64_t i = ends[3] - 1; i >= starts[3] + len; --i) {  // ragged tail of block 3
      inv_fact_[i] = static_cast<uint32_t>(g3);
      g3 = md.mul(g3, i);
    }
    for (uint64_t off = 0; off < len; ++off) {
      uint64_t j0 = starts[0] + len - 1 - off;
      uint64_t j1 = starts[1] + len - 1 - off;
      uint64_t j2 = starts[2] + len - 1 - off;
      uint64_t j3 = starts[3] + len - 1 - off;
      inv_fact_[j0] = static_cast<uint32_t>(g0);
      inv_fact_[j1] = static_cast<uint32_t>(g1);
      inv_fact_[j2] = static_cast<uint32_t>(g2);
      inv_fact_[j3] = static_cast<uint32_t>(g3);
      g0 = md.mul(g0, j0);
      g1 = md.mul(g1, j1);
      g2 = md.mul(g2, j2);
      g3 = md.mul(g3, j3);
    }
  }
  kernels::mul_mod(inv_.data() + 1, inv_fact_.data() + 1, fact_.data(), p - 1, p);
}

ValuedResidue ValuedResidue::one(uint64_t p, uint32_t e) {
  ValuedResidue r;
  r.prime = p;
  r.exponent = e;
  r.modulus = prime_power(p, e);
  r.unit = 1;
  r.val = 0;
  return r;
}

void ValuedResidue::mul_integer(uint64_t f) {
  assert(f >= 1);
  while (f % prime == 0) {
    f /= prime;
    ++val;
  }
  unit = mul_mod(unit, f % modulus, modulus);
}

void ValuedResidue::div_integer(uint64_t f) {
  assert(f >= 1);
  while (f % prime == 0) {
    f /= prime;
    --val;
  }
  unit = mul_mod(unit, mod_inv(static_cast<long long>(f % modulus), modulus).value(), modulus);
}

void ValuedResidue::mul(const ValuedResidue& o) {
  assert(prime == o.prime && exponent == o.exponent);
  unit = mul_mod(unit, o.unit, modulus);
  val += o.val;
}

uint64_t ValuedResidue::residue() const {
  if (unit == 0) return 0;
  assert(val >= 0 && "fractional class has no residue");
  if (val >= exponent) return 0;
  uint64_t r = unit;
  for (int64_t i = 0; i < val; ++i) r = mul_mod(r, prime, modulus);
  return r;
}

BigInt binom_exact(uint64_t n, long long k) {
  if (k < 0 || static_cast<uint64_t>(k) > n) return BigInt(0);
  uint64_t kk = std::min<uint64_t>(static_cast<uint64_t>(k), n - static_cast<uint64_t>(k));
  BigInt r(1);
  for (uint64_t i = 1; i <= kk; ++i) {
    r.mul_small(static_cast<long long>(n - kk + i));
    r.div_small(static_cast<uint32_t>(i));  // intermediate is binom(n-kk+i, i)
  }
  return r;
}

BigInt binom_gen(long long a, long long k) {
  if (k < 0) return BigInt(0);
  BigInt r(1);
  for (long long i = 1; i <= k; ++i) {
    r.mul_small(a - i + 1);
    r.div_small(static_cast<uint32_t>(i));
  }
  return r;
}

Residue binom_mod_lucas(uint64_t n, uint64_t k, uint64_t p) {
  assert(p >= 2);
  uint64_t r = 1 % p;
  while (n || k) {
    uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return Residue(0, p);
    uint64_t kk = std::min(kd, nd - kd);
    uint64_t num = 1 % p, den = 1 % p;
    for (uint64_t i = 1; i <= kk; ++i) {
      num = mul_mod(num, nd - kk + i, p);
      den = mul_mod(den, i, p);
    }
    r = mul_mod(r, num, p);
    if (den > 1) r = mul_mod(r, mod_inv(static_cast<long long>(den), p).value(), p);
    n /= p;
    k /= p;
  }
  return Residue(r, p);
}

ValuedResidue factorial_decomp(uint64_t n, uint64_t p, uint32_t e) {
  ValuedResidue r = ValuedResidue::one(p, e);
  for (uint64_t q = n / p; q; q /= p) r.val += static_cast<int64_t>(q);

  const uint64_t m = r.modulus;
  const bool wilson_minus = !(p == 2 && e >= 3);
  uint64_t unit = 1 % m;
  for (uint64_t nn = n; nn > 0; nn /= p) {
    if (wilson_minus && (nn / m) % 2 == 1 && m > 1) unit = m - unit;
    uint64_t rem = nn % m;
    uint64_t jmodp = 0;
    for (uint64_t j = 1; j <= rem; ++j) {
      if (++jmodp == p) {
        jmodp = 0;
        continue;
      }
      unit = mul_mod(unit, j, m);
    }
  }
  r.unit = unit;
  return r;
}

ValuedResidue binom_mod_valued(uint64_t n, uint64_t k, uint64_t p, uint32_t e) {
  assert(k <= n);
  ValuedResidue dn = factorial_decomp(n, p, e);
  ValuedResidue dk = factorial_decomp(k, p, e);
  ValuedResidue dnk = factorial_decomp(n - k, p, e);
  ValuedResidue r = ValuedResidue::one(p, e);
  uint64_t den = mul_mod(dk.unit, dnk.unit, r.modulus);
  r.unit = mul_mod(dn.unit, mod_inv(static_cast<long long>(den), r.modulus).value(), r.modulus);
  r.val = dn.val - dk.val - dnk.val;
  return r;
}

BinomStream::BinomStream(uint32_t d, uint64_t p)
    : BinomStream(d, p, std::make_shared<InverseTable>(p)) {}

BinomStream::BinomStream(uint32_t d, uint64_t p, std::shared_ptr<const InverseTable> inv)
    : p_(p), d_(d), inv_(std::move(inv)), mod_(p) {
  assert(d <= 2 && p >= 2 && inv_ && inv_->p() == p);
  r3_ = d % p;
  r2_ = d % p;
  cur_ = ValuedResidue::one(p, 1);  // binom(d, 0) = 1
}

uint64_t BinomStream::strip_into(uint64_t canonical, uint64_t full, int64_t dir) {
  if (canonical != 0) return canonical;
  int64_t v = 0;
  while (full % p_ == 0) {
    full /= p_;
    ++v;
  }
  cur_.val += dir * v;
  return mod_.reduce(full);
}

void BinomStream::advance() {
  assert(k_ + 1 < p_ && "stream covers k = 0..p-1");
  const uint64_t base3 = 3 * k_ + d_;
  const uint64_t base2 = 2 * k_ + d_;
  uint64_t unit = cur_.unit;
  for (uint64_t i = 1; i <= 3; ++i) {
    uint64_t c = r3_ + i;
    while (c >= p_) c -= p_;
    unit = mod_.mul(unit, strip_into(c, base3 + i, +1));
  }
  unit = mod_.mul(unit, (*inv_)[k_ + 1]);  // k+1 <= p-1, never divisible
  for (uint64_t i = 1; i <= 2; ++i) {
    uint64_t c = r2_ + i;
    while (c >= p_) c -= p_;
    unit = mod_.mul(unit, (*inv_)[strip_into(c, base2 + i, -1)]);
  }
  cur_.unit = unit;
  assert(cur_.val >= 0);
  ++k_;
  r3_ += 3;
  while (r3_ >= p_) r3_ -= p_;
  r2_ += 2;
  while (r2_ >= p_) r2_ -= p_;
}

void fill_binom_row(uint32_t d, uint64_t p, std::shared_ptr<const InverseTable> inv,
                    std::vector<uint32_t>& out) {
  out.resize(p);
  BinomStream s(d, p, std::move(inv));
  for (uint64_t k = 0; k < p; ++k) {
    out[k] = static_cast<uint32_t>(s.residue());
    if (k + 1 < p) s.advance();
  }
}

namespace {

int64_t ceil_div(int64_t x, int64_t y) {  // y > 0
  return x > 0 ? (x + y - 1) / y : -(-x / y);
}

}  // namespace

void fill_binom_row_tables(const InverseTable& tables, unsigned a, unsigned b, int t,
                           std::vector<uint32_t>& out, RowScratch& scratch) {
  assert((a == 2 || a == 3) && b <= 2 && (t == 0 || t == -1));
  const int64_t p = static_cast<int64_t>(tables.p());
  out.assign(p, 0);
  const uint32_t* fact = tables.fact();
  const uint32_t* ifact = tables.inv_fact();
  for (int64_t c = 0; c < static_cast<int64_t>(a); ++c) {
    // segment where floor((a*k + b)/p) == c
    int64_t lo = c == 0 ? 0 : ceil_div(c * p - b, a);
    int64_t hi = std::min<int64_t>(p, ceil_div((c + 1) * p - b, a));
    // nonzero needs k + t >= 0 and (a-1)k >= c*p - b + t
    int64_t start = std::max<int64_t>(lo, std::max<int64_t>(-t, ceil_div(c * p - b + t, a - 1)));
    if (start >= hi) continue;
    const size_t n = static_cast<size_t>(hi - start);
    const int64_t rbase = a * start + b - c * p;            // upper digit
    const int64_t sbase = (a - 1) * start + b - t - c * p;  // upper minus lower
    scratch.a.resize(n);
    for (size_t i = 0; i < n; ++i) scratch.a[i] = fact[rbase + a * i];
    const uint32_t* bptr;
    if (a == 2) {
      bptr = ifact + sbase;
    } else {
      scratch.b.resize(n);
      for (size_t i = 0; i < n; ++i) scratch.b[i] = ifact[sbase + 2 * i];
      bptr = scratch.b.data();
    }
    uint32_t* dst = out.data() + start;
    kernels::mul_mod(dst, scratch.a.data(), ifact + (start + t), n, p);
    kernels::mul_mod(dst, dst, bptr, n, p);
  }
}

}  // namespace catsweep
