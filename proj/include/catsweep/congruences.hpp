#pragma once

#include <catsweep/binomial.hpp>
#include <catsweep/modarith.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catsweep {

// Every checkable congruence statement. T31 carries the two binary
// parameters (d, delta); all other tags carry none.
enum class CongruenceTag : uint8_t {
  PS1,   // sum C_k = (3(p|3) - 1)/2                        (mod p),   p > 3
  PS2,   // sum C_k/k = (3/2)(1 - (p|3))                    (mod p),   p > 3
  T11A,  // sum 2^k C_k^(2) = 2(s - 1)                      (mod p),   odd p
  T11B,  // sum 2^k C_k^(2)/k = 4(1 - s)                    (mod p),   odd p
  T12A,  // sum 2^k binom(3k,k) = (6s - 1)/5                (mod p),   p > 5
  T12B,  // sum 2^k binom(3k+1,k) = (4s + 1)/5              (mod p),   p > 5
  T13,   // sum (2^k/k) binom(3k,k) = 0                     (mod p),   any p
  X1,    // 5 sum 2^k binom(3k+2,k) = s - 1                 (mod p),   odd p
  X2,    // sum (2^(k-1)/k) binom(3k+1,k) = s - 1           (mod p),   odd p
  X3,    // sum (2^(k-1)/k) binom(3k+2,k) = (3/2)(s - 1)    (mod p),   odd p
  L22A,  // double binomial sum = (3s + 2)/5                (mod p),   p > 5
  L22B,  // shifted double binomial sum = (3/10)(1 - s)     (mod p),   p > 5
  T31,   // windowed sum with prefactor = (4-d')/10 + ...   (mod p),   p > 5
  BPJ,   // binom(p,j) = p(-1)^(j-1)/j for all j            (mod p^2), any p
  W3,    // binom(2p-1,p-1) = 1                             (mod p^3), p >= 5
  HS,    // 2*sum_{p/2<j<p} binom(p,j) = 2^p - 2            (mod p^3), odd p
};
// s above is (-1)^((p-1)/2); (p|3) the symbol in {-1,0,1} with p = (p|3) mod 3.

struct CongruenceId {
  CongruenceTag tag = CongruenceTag::PS1;
  uint8_t d = 0, delta = 0;  // used by T31 only

  bool has_params() const { return tag == CongruenceTag::T31; }
  std::string name() const;  // e.g. "T12A", "T31:0,1"
  bool operator==(const CongruenceId&) const = default;

  // Accepts a tag name or "T31:d,delta"; plain "T31" yields (0,0) — use
  // expand_ids for the collective form.
  static std::optional<CongruenceId> parse(std::string_view token);
};

// The 19 checks in report order: the 12 plain tags, T31 expanded over
// (d, delta) in lexicographic order, then BPJ, W3, HS.
std::span<const CongruenceId> all_congruence_ids();

// True when the statement's hypothesis admits p.
bool applicable(CongruenceId id, uint64_t p);
// The modulus the id is checked and reported at: p, p^2 or p^3.
uint64_t congruence_modulus(CongruenceId id, uint64_t p);

enum class Verdict : uint8_t { Pass, Fail, Skip };
const char* verdict_name(Verdict v);

struct CongruenceResult {
  CongruenceId id;
  uint64_t p = 0;
  uint64_t modulus = 0;
  uint64_t lhs = 0, rhs = 0;  // canonical residues; zero for skipped checks
  Verdict verdict = Verdict::Skip;
  bool pass() const { return verdict == Verdict::Pass; }
};

struct InapplicableError : std::domain_error {
  InapplicableError(const CongruenceId& id, uint64_t p);
};

// One BPJ instance, reported when per-j expansion is requested:
// lhs = binom(p,j) mod p^2, rhs = p*(-1)^(j-1)/j mod p^2.
struct BpjCase {
  uint64_t j, lhs, rhs;
};

// Per-prime evaluation engine. One instance per worker thread; the row
// buffers and inverse table are rebuilt per prime and reused across primes.
// Distinct instances share no mutable state.
class CongruenceChecker {
public:
  // Largest supported prime: keeps every p^3 modulus below 2^63.
  static constexpr uint64_t max_prime = 2097143;

  CongruenceChecker();
  explicit CongruenceChecker(std::vector<CongruenceId> ids);

  const std::vector<CongruenceId>& ids() const { return ids_; }
  void collect_bpj_cases(bool on) { want_bpj_cases_ = on; }

  // Appends one result per configured id, in report order. p must be prime
  // and at most max_prime.
  void run(uint64_t p, std::vector<CongruenceResult>& out);

  // Per-j BPJ detail from the most recent run (when collection is on).
  const std::vector<BpjCase>& bpj_cases() const { return bpj_cases_; }

private:
  std::vector<CongruenceId> ids_;
  bool want_bpj_cases_ = false;
  std::vector<BpjCase> bpj_cases_;

  // per-prime state
  uint64_t p_ = 0;
  Mod64 mod_{2};
  bool have_inv_ = false;
  InverseTable inv_;
  RowScratch scratch_;
  std::vector<uint32_t> pow2_, w_, b_[3], b0m_, cb_, cbm_, c1_, c2_, bpj_u_;
  uint8_t have_b_[3] = {0, 0, 0};
  bool have_b0m_ = false, have_central_ = false, have_pow2_ = false, have_w_ = false;
  bool have_c1_ = false, have_c2_ = false;

  void prepare(uint64_t p);
  void ensure_inv();
  void ensure_row(unsigned d);
  void ensure_b0m();
  void ensure_central();
  void ensure_pow2();
  void ensure_w();
  void ensure_c1();
  void ensure_c2();

  CongruenceResult evaluate(CongruenceId id);
  uint64_t lhs_sum(CongruenceId id);
  uint64_t rhs_formula(CongruenceId id) const;
  CongruenceResult eval_bpj(CongruenceId id);
  CongruenceResult eval_w3(CongruenceId id) const;
  CongruenceResult eval_hs(CongruenceId id);
};

// One-shot conveniences (each builds a fresh checker).
Residue lhs_value(CongruenceId id, uint64_t p);  // throws InapplicableError
Residue rhs_value(CongruenceId id, uint64_t p);  // throws InapplicableError
CongruenceResult check(CongruenceId id, uint64_t p);
std::vector<CongruenceResult> check_all(uint64_t p);
std::vector<CongruenceResult> check_all(uint64_t p, std::span<const CongruenceId> ids);

}  // namespace catsweep
