#include <catsweep/congruences.hpp>

#include <catsweep/kernels.hpp>
#include <catsweep/primes.hpp>

#include <algorithm>
#include <array>
#include <cassert>
#include <charconv>

namespace catsweep {

namespace {

constexpr std::array<const char*, 16> tag_names = {
    "PS1", "PS2", "T11A", "T11B", "T12A", "T12B", "T13", "X1",
    "X2",  "X3",  "L22A", "L22B", "T31",  "BPJ",  "W3",  "HS"};

std::array<CongruenceId, 19> make_all_ids() {
  std::array<CongruenceId, 19> ids{};
  size_t i = 0;
  for (uint8_t t = 0; t < 16; ++t) {
    auto tag = static_cast<CongruenceTag>(t);
    if (tag == CongruenceTag::T31) {
      for (uint8_t d = 0; d <= 1; ++d)
        for (uint8_t delta = 0; delta <= 1; ++delta) ids[i++] = CongruenceId{tag, d, delta};
    } else {
      ids[i++] = CongruenceId{tag, 0, 0};
    }
  }
  return ids;
}

const std::array<CongruenceId, 19>& all_ids_array() {
  static const auto ids = make_all_ids();
  return ids;
}

size_t report_rank(const CongruenceId& id) {
  auto t = static_cast<size_t>(id.tag);
  if (id.tag < CongruenceTag::T31) return t;
  if (id.tag == CongruenceTag::T31) return 12 + id.d * 2 + id.delta;
  return t + 3;
}

}  // namespace

std::string CongruenceId::name() const {
  std::string n = tag_names[static_cast<size_t>(tag)];
  if (tag == CongruenceTag::T31) {
    n += ':';
    n += static_cast<char>('0' + d);
    n += ',';
    n += static_cast<char>('0' + delta);
  }
  return n;
}

std::optional<CongruenceId> CongruenceId::parse(std::string_view token) {
  for (uint8_t t = 0; t < 16; ++t) {
    if (token == tag_names[t]) return CongruenceId{static_cast<CongruenceTag>(t), 0, 0};
  }
  if (token.size() == 7 && token.substr(0, 4) == "T31:" && token[5] == ',' &&
      (token[4] == '0' || token[4] == '1') && (token[6] == '0' || token[6] == '1')) {
    return CongruenceId{CongruenceTag::T31, static_cast<uint8_t>(token[4] - '0'),
                        static_cast<uint8_t>(token[6] - '0')};
  }
  return std::nullopt;
}

std::span<const CongruenceId> all_congruence_ids() {
  const auto& a = all_ids_array();
  return {a.data(), a.size()};
}

bool applicable(CongruenceId id, uint64_t p) {
  switch (id.tag) {
    case CongruenceTag::PS1:
    case CongruenceTag::PS2:
      return p > 3;
    case CongruenceTag::T11A:
    case CongruenceTag::T11B:
    case CongruenceTag::X1:
    case CongruenceTag::X2:
    case CongruenceTag::X3:
    case CongruenceTag::HS:
      return p != 2;
    case CongruenceTag::T12A:
    case CongruenceTag::T12B:
    case CongruenceTag::L22A:
    case CongruenceTag::L22B:
    case CongruenceTag::T31:
      return p > 5;
    case CongruenceTag::T13:
    case CongruenceTag::BPJ:
      return true;
    case CongruenceTag::W3:
      return p >= 5;
  }
  return false;
}

uint64_t congruence_modulus(CongruenceId id, uint64_t p) {
  switch (id.tag) {
    case CongruenceTag::BPJ:
      return p * p;
    case CongruenceTag::W3:
    case CongruenceTag::HS:
      return p * p * p;
    default:
      return p;
  }
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Skip:
      return "skip";
  }
  return "?";
}

InapplicableError::InapplicableError(const CongruenceId& id, uint64_t p)
    : std::domain_error(id.name() + " is not applicable at p = " + std::to_string(p)) {}

CongruenceChecker::CongruenceChecker()
    : CongruenceChecker(std::vector<CongruenceId>(all_congruence_ids().begin(),
                                                  all_congruence_ids().end())) {}

CongruenceChecker::CongruenceChecker(std::vector<CongruenceId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end(),
            [](const CongruenceId& a, const CongruenceId& b) { return report_rank(a) < report_rank(b); });
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

void CongruenceChecker::prepare(uint64_t p) {
  p_ = p;
  mod_ = Mod64(p);
  have_inv_ = false;
  have_b_[0] = have_b_[1] = have_b_[2] = 0;
  have_b0m_ = have_central_ = have_pow2_ = have_w_ = have_c1_ = have_c2_ = false;
}

void CongruenceChecker::ensure_inv() {
  if (!have_inv_) {
    inv_.rebuild(p_);
    have_inv_ = true;
  }
}

void CongruenceChecker::ensure_row(unsigned d) {
  if (have_b_[d]) return;
  ensure_inv();
  fill_binom_row_tables(inv_, 3, d, 0, b_[d], scratch_);
  have_b_[d] = 1;
}

void CongruenceChecker::ensure_b0m() {
  if (have_b0m_) return;
  ensure_inv();
  fill_binom_row_tables(inv_, 3, 0, -1, b0m_, scratch_);
  have_b0m_ = true;
}

void CongruenceChecker::ensure_central() {
  if (have_central_) return;
  ensure_inv();
  fill_binom_row_tables(inv_, 2, 0, 0, cb_, scratch_);
  fill_binom_row_tables(inv_, 2, 0, -1, cbm_, scratch_);
  have_central_ = true;
}

void CongruenceChecker::ensure_pow2() {
  if (have_pow2_) return;
  pow2_.resize(p_);
  uint64_t v = 1 % p_;
  for (uint64_t k = 0; k < p_; ++k) {
    pow2_[k] = static_cast<uint32_t>(v);
    v += v;
    if (v >= p_) v -= p_;
  }
  have_pow2_ = true;
}

void CongruenceChecker::ensure_w() {
  if (have_w_) return;
  ensure_pow2();
  ensure_inv();
  w_.resize(p_);
  w_[0] = 0;
  if (p_ > 1)
    kernels::mul_mod(w_.data() + 1, pow2_.data() + 1, inv_.data() + 1, p_ - 1, p_);
  have_w_ = true;
}

void CongruenceChecker::ensure_c1() {
  if (have_c1_) return;
  ensure_central();
  c1_.resize(p_);
  kernels::mul_sub_mod(c1_.data(), cb_.data(), static_cast<uint32_t>(1 % p_), cbm_.data(), p_, p_);
  have_c1_ = true;
}

void CongruenceChecker::ensure_c2() {
  if (have_c2_) return;
  ensure_row(0);
  ensure_b0m();
  c2_.resize(p_);
  kernels::mul_sub_mod(c2_.data(), b_[0].data(), static_cast<uint32_t>(2 % p_), b0m_.data(), p_,
                       p_);
  have_c2_ = true;
}

void CongruenceChecker::run(uint64_t p, std::vector<CongruenceResult>& out) {
  if (p < 2 || p > max_prime)
    throw std::invalid_argument("CongruenceChecker: prime out of supported range");
  if (!is_prime(p)) throw std::invalid_argument("CongruenceChecker: p is not prime");
  prepare(p);
  bpj_cases_.clear();
  out.reserve(out.size() + ids_.size());
  for (const CongruenceId& id : ids_) out.push_back(evaluate(id));
}

CongruenceResult CongruenceChecker::evaluate(CongruenceId id) {
  CongruenceResult r;
  r.id = id;
  r.p = p_;
  r.modulus = congruence_modulus(id, p_);
  if (!applicable(id, p_)) {
    r.verdict = Verdict::Skip;
    return r;
  }
  switch (id.tag) {
    case CongruenceTag::BPJ:
      return eval_bpj(id);
    case CongruenceTag::W3:
      return eval_w3(id);
    case CongruenceTag::HS:
      return eval_hs(id);
    default:
      break;
  }
  r.lhs = lhs_sum(id);
  r.rhs = rhs_formula(id);
  r.verdict = r.lhs == r.rhs ? Verdict::Pass : Verdict::Fail;
  return r;
}

uint64_t CongruenceChecker::lhs_sum(CongruenceId id) {
  const uint64_t p = p_;
  switch (id.tag) {
    case CongruenceTag::PS1:
      ensure_c1();
      return kernels::sum_mod(c1_.data(), p, p);
    case CongruenceTag::PS2:
      ensure_c1();
      return kernels::dot_mod(inv_.data() + 1, c1_.data() + 1, p - 1, p);
    case CongruenceTag::T11A:
      ensure_c2();
      ensure_pow2();
      return kernels::dot_mod(pow2_.data() + 1, c2_.data() + 1, p - 1, p);
    case CongruenceTag::T11B:
      ensure_c2();
      ensure_w();
      return kernels::dot_mod(w_.data() + 1, c2_.data() + 1, p - 1, p);
    case CongruenceTag::T12A:
      ensure_row(0);
      ensure_pow2();
      return kernels::dot_mod(pow2_.data(), b_[0].data(), p, p);
    case CongruenceTag::T12B:
      ensure_row(1);
      ensure_pow2();
      return kernels::dot_mod(pow2_.data(), b_[1].data(), p, p);
    case CongruenceTag::T13:
      ensure_row(0);
      ensure_w();
      return kernels::dot_mod(w_.data() + 1, b_[0].data() + 1, p - 1, p);
    case CongruenceTag::X1: {
      ensure_row(2);
      ensure_pow2();
      uint64_t s = kernels::dot_mod(pow2_.data(), b_[2].data(), p, p);
      s = mod_.sub(s, 1 % p);  // drop the k = 0 term binom(2,0) = 1
      return mod_.mul(5 % p, s);
    }
    case CongruenceTag::X2: {
      ensure_row(1);
      ensure_w();
      uint64_t s = kernels::dot_mod(w_.data() + 1, b_[1].data() + 1, p - 1, p);
      return mod_.mul(s, inv_[2]);
    }
    case CongruenceTag::X3: {
      ensure_row(2);
      ensure_w();
      uint64_t s = kernels::dot_mod(w_.data() + 1, b_[2].data() + 1, p - 1, p);
      return mod_.mul(s, inv_[2]);
    }
    case CongruenceTag::L22A:
    case CongruenceTag::L22B: {
      // Inner sums collapse through Lucas' congruence: for 2s < p the full
      // binomial sum is 3^(2s) exactly, for 2s = p + r it is 3^r (mod p).
      // What remains are two geometric series in (-9).
      const uint64_t r = canonical_mod(-9, p);
      const uint64_t dinv = mod_inv(static_cast<long long>(mod_.sub(r, 1)), p).value();
      auto geom = [&](uint64_t lo, uint64_t hi_exclusive) {  // sum_{s=lo}^{hi-1} r^s
        uint64_t a = pow_mod(r, lo, p), b = pow_mod(r, hi_exclusive, p);
        return mod_.mul(mod_.sub(b, a), dinv);
      };
      uint64_t half = (p + 1) / 2;
      uint64_t tail = mod_.mul(pow_mod(mod_inv(3, p).value(), p, p), geom(half, p));
      if (id.tag == CongruenceTag::L22B) return tail;
      return mod_.add(geom(0, half), tail);
    }
    case CongruenceTag::T31: {
      ensure_row(id.d);
      ensure_pow2();
      uint64_t klo = id.delta == 0 ? 0 : (p - id.d + 2) / 3;
      uint64_t khi = (id.delta * p + p - 1 - id.d) / 3;
      uint64_t s = klo > khi ? 0
                             : kernels::dot_mod(pow2_.data() + klo, b_[id.d].data() + klo,
                                                khi - klo + 1, p);
      if (id.delta) s = mod_.mul(s, inv_[2]);
      if ((id.d + id.delta) % 2) s = s == 0 ? 0 : p - s;
      return s;
    }
    default:
      break;
  }
  assert(false && "lhs_sum: unhandled id");
  return 0;
}

uint64_t CongruenceChecker::rhs_formula(CongruenceId id) const {
  const uint64_t p = p_;
  auto frac = [&](long long num, long long den) {
    Residue r = Residue::reduce(num, p) * mod_inv(den, p);
    return r.value();
  };
  switch (id.tag) {
    case CongruenceTag::PS1:
      return frac(3 * legendre3(static_cast<long long>(p)) - 1, 2);
    case CongruenceTag::PS2:
      return frac(3 * (1 - legendre3(static_cast<long long>(p))), 2);
    case CongruenceTag::T11A:
      return canonical_mod(2 * (sign_half(p) - 1), p);
    case CongruenceTag::T11B:
      return canonical_mod(4 * (1 - sign_half(p)), p);
    case CongruenceTag::T12A:
      return frac(6 * sign_half(p) - 1, 5);
    case CongruenceTag::T12B:
      return frac(4 * sign_half(p) + 1, 5);
    case CongruenceTag::T13:
      return 0;
    case CongruenceTag::X1:
    case CongruenceTag::X2:
      return canonical_mod(sign_half(p) - 1, p);
    case CongruenceTag::X3:
      return frac(3 * (sign_half(p) - 1), 2);
    case CongruenceTag::L22A:
      return frac(3 * sign_half(p) + 2, 5);
    case CongruenceTag::L22B:
      return frac(3 * (1 - sign_half(p)), 10);
    case CongruenceTag::T31: {
      long long sigma = sign_half(p);
      long long e = (4 - id.delta) + (3 * id.delta - 2) * (5 * id.d - 3) * sigma;
      return frac(e, 10);
    }
    default:
      break;
  }
  assert(false && "rhs_formula: unhandled id");
  return 0;
}

CongruenceResult CongruenceChecker::eval_bpj(CongruenceId id) {
  const uint64_t p = p_;
  ensure_inv();
  CongruenceResult r;
  r.id = id;
  r.p = p;
  r.modulus = p * p;
  // binom(p,j) = p * U_j exactly with U_j = binom(p-1,j-1)/j a unit, so
  // binom(p,j) mod p^2 is p * (U_j mod p) and the scan stays mod p:
  // U_j = fact[p-1] * inv_fact[j-1] * inv_fact[p-j] * inv[j].
  bpj_u_.resize(p);
  {
    scratch_.a.resize(p - 1);
    const uint32_t* ifact = inv_.inv_fact();
    for (uint64_t i = 0; i + 1 < p; ++i) scratch_.a[i] = ifact[p - 1 - i];  // inv_fact[p-j]
    uint32_t* u = bpj_u_.data() + 1;  // slot j holds U_j
    kernels::mul_mod(u, ifact, scratch_.a.data(), p - 1, p);
    kernels::scale_mod(u, u, inv_.fact()[p - 1], p - 1, p);
    kernels::mul_mod(u, u, inv_.data() + 1, p - 1, p);
  }
  uint64_t maxdev = 0;
  for (uint64_t j = 1; j < p; ++j) {
    uint64_t target = inv_[j];         // nonzero for 1 <= j < p
    if (j % 2 == 0) target = p - target;  // (-1)^(j-1)/j
    uint64_t dev = mod_.sub(bpj_u_[j], target);
    maxdev = std::max(maxdev, dev);
    if (want_bpj_cases_) bpj_cases_.push_back({j, p * bpj_u_[j], p * target});
  }
  r.lhs = p * maxdev;
  r.rhs = 0;
  r.verdict = maxdev == 0 ? Verdict::Pass : Verdict::Fail;
  return r;
}

CongruenceResult CongruenceChecker::eval_w3(CongruenceId id) const {
  const uint64_t p = p_;
  const uint64_t p3 = p * p * p;
  CongruenceResult r;
  r.id = id;
  r.p = p;
  r.modulus = p3;
  // binom(2p-1, p-1) = F2/F1 with F1 = (p-1)! and F2 = (p+1)...(2p-1); one
  // Montgomery walk covers both unit products.
  Montgomery64 mg(p3);
  const uint64_t one = mg.one();
  // Rotating accumulators hide the multiply latency of the product walks.
  uint64_t acc[4] = {one, one, one, one};
  uint64_t x = one;  // Montgomery form of the running integer
  unsigned slot = 0;
  for (uint64_t i = 2; i <= p - 1; ++i) {
    x = mg.add(x, one);
    acc[slot] = mg.mul(acc[slot], x);
    slot = (slot + 1) & 3;
  }
  uint64_t f1m = mg.mul(mg.mul(acc[0], acc[1]), mg.mul(acc[2], acc[3]));
  acc[0] = acc[1] = acc[2] = acc[3] = one;
  x = mg.add(x, one);  // skip p itself
  for (uint64_t i = p + 1; i <= 2 * p - 1; ++i) {
    x = mg.add(x, one);
    acc[slot] = mg.mul(acc[slot], x);
    slot = (slot + 1) & 3;
  }
  uint64_t f2m = mg.mul(mg.mul(acc[0], acc[1]), mg.mul(acc[2], acc[3]));
  uint64_t f1 = mg.from(f1m), f2 = mg.from(f2m);
  r.lhs = mul_mod(f2, mod_inv(static_cast<long long>(f1), p3).value(), p3);
  r.rhs = 1;
  r.verdict = r.lhs == r.rhs ? Verdict::Pass : Verdict::Fail;
  return r;
}

CongruenceResult CongruenceChecker::eval_hs(CongruenceId id) {
  const uint64_t p = p_;
  const uint64_t p2 = p * p, p3 = p2 * p;
  ensure_inv();
  CongruenceResult r;
  r.id = id;
  r.p = p;
  r.modulus = p3;
  // binom(p,j) = p * U_j with U_j a unit. Mod p^2,
  //   U_j = (-1)^(j-1) inv(j) (1 - p H_{j-1}),  H the prefix sum of table
  // inverses, and inv_{p^2}(j) = inv(j) - p inv(j) (j inv(j) - 1)/p; both
  // base-p digits of the canonical U_j therefore come from mod-p data with
  // no dependency between the j's. The oracle tests pin this evaluation
  // against exact binomials.
  uint64_t pinv64 = p;  // inverse of (odd) p mod 2^64 for exact division
  for (int i = 0; i < 5; ++i) pinv64 *= 2 - p * pinv64;
  const uint32_t* inv = inv_.data();
  const uint64_t h = (p - 1) / 2;
  uint64_t harmonic = 0;
  uint64_t su[2] = {0, 0}, sv[2] = {0, 0};  // digit sums, low/high half
  for (uint64_t j = 1; j < p; ++j) {
    uint64_t iv = inv[j];
    uint64_t b = (j * iv - 1) * pinv64;  // (j iv - 1)/p, already below p
    uint64_t t = mod_.mul(iv, b);
    uint64_t w = mod_.mul(iv, harmonic);
    uint64_t x = t + w;
    if (x >= p) x -= p;
    uint64_t v = x == 0 ? 0 : p - x;  // second digit of U_j for odd j
    uint64_t u = iv;
    if ((j & 1) == 0) {  // negate mod p^2 (U_j is never 0)
      u = p - iv;
      v = p - 1 - v;
    }
    harmonic += iv;
    if (harmonic >= p) harmonic -= p;
    int half = j > h;
    su[half] += u;
    sv[half] += v;
  }
  auto combine = [&](uint64_t udig, uint64_t vdig) {  // sum of canonical U_j mod p^2
    return static_cast<uint64_t>((udig + static_cast<unsigned __int128>(p) * vdig) % p2);
  };
  uint64_t sum_half = combine(su[1], sv[1]);
  uint64_t sum_all = combine(su[0] + su[1], sv[0] + sv[1]);
  uint64_t mid = static_cast<uint64_t>(static_cast<unsigned __int128>(p) * sum_all % p3);
  r.lhs = static_cast<uint64_t>(static_cast<unsigned __int128>(2 * p) * sum_half % p3);
  uint64_t pw = pow_mod(2, p, p3);
  r.rhs = pw >= 2 ? pw - 2 : pw + p3 - 2;
  r.verdict = (r.lhs == mid && mid == r.rhs) ? Verdict::Pass : Verdict::Fail;
  return r;
}

Residue lhs_value(CongruenceId id, uint64_t p) {
  CongruenceResult r = check(id, p);
  if (r.verdict == Verdict::Skip) throw InapplicableError(id, p);
  return Residue(r.lhs, r.modulus);
}

Residue rhs_value(CongruenceId id, uint64_t p) {
  CongruenceResult r = check(id, p);
  if (r.verdict == Verdict::Skip) throw InapplicableError(id, p);
  return Residue(r.rhs, r.modulus);
}

CongruenceResult check(CongruenceId id, uint64_t p) {
  CongruenceChecker checker(std::vector<CongruenceId>{id});
  std::vector<CongruenceResult> out;
  checker.run(p, out);
  return out.front();
}

std::vector<CongruenceResult> check_all(uint64_t p) { return check_all(p, all_congruence_ids()); }

std::vector<CongruenceResult> check_all(uint64_t p, std::span<const CongruenceId> ids) {
  CongruenceChecker checker(std::vector<CongruenceId>(ids.begin(), ids.end()));
  std::vector<CongruenceResult> out;
  checker.run(p, out);
  return out;
}

}  // namespace catsweep
