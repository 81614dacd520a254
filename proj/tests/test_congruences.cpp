#include <catsweep/congruences.hpp>

#include <catsweep/binomial.hpp>
#include <catsweep/catalan.hpp>
#include <catsweep/primes.hpp>

#include <doctest.h>

#include "oracle.hpp"

#include <map>
#include <memory>

using namespace catsweep;
using catsweep::testing::naive_lhs;
using catsweep::testing::naive_rhs;

namespace {

CongruenceId id_of(CongruenceTag tag, uint8_t d = 0, uint8_t delta = 0) {
  return CongruenceId{tag, d, delta};
}

}  // namespace

TEST_CASE("id naming and parsing") {
  CHECK(id_of(CongruenceTag::T12A).name() == "T12A");
  CHECK(id_of(CongruenceTag::T31, 0, 1).name() == "T31:0,1");
  CHECK(CongruenceId::parse("HS")->tag == CongruenceTag::HS);
  auto t31 = CongruenceId::parse("T31:1,0");
  REQUIRE(t31.has_value());
  CHECK(t31->d == 1);
  CHECK(t31->delta == 0);
  CHECK(!CongruenceId::parse("T31:2,0").has_value());
  CHECK(!CongruenceId::parse("nope").has_value());
  CHECK(all_congruence_ids().size() == 19);
}

TEST_CASE("applicability follows the hypotheses") {
  CHECK(!applicable(id_of(CongruenceTag::T12A), 5));
  CHECK(applicable(id_of(CongruenceTag::T13), 2));
  CHECK(!applicable(id_of(CongruenceTag::T11A), 2));
  CHECK(applicable(id_of(CongruenceTag::T12A), 7));
  CHECK(applicable(id_of(CongruenceTag::X1), 3));
  CHECK(applicable(id_of(CongruenceTag::X1), 5));  // checked, not skipped
  CHECK(!applicable(id_of(CongruenceTag::W3), 3));
  CHECK(applicable(id_of(CongruenceTag::W3), 5));
  CHECK(!applicable(id_of(CongruenceTag::HS), 2));
  CHECK(applicable(id_of(CongruenceTag::BPJ), 2));
  CHECK(!applicable(id_of(CongruenceTag::T31, 1, 1), 5));
}

TEST_CASE("pinned spot values") {
  auto t11a = check(id_of(CongruenceTag::T11A), 3);
  CHECK(t11a.pass());
  CHECK(t11a.lhs == 2);
  CHECK(t11a.rhs == 2);

  auto w3 = check(id_of(CongruenceTag::W3), 7);
  CHECK(w3.pass());
  CHECK(w3.modulus == 343);
  CHECK(w3.lhs == 1);

  auto t12a5 = check(id_of(CongruenceTag::T12A), 5);
  CHECK(t12a5.verdict == Verdict::Skip);

  auto t12a = check(id_of(CongruenceTag::T12A), 7);
  CHECK(t12a.pass());
  CHECK(t12a.lhs == 0);
  CHECK(t12a.rhs == 0);

  auto t31 = check(id_of(CongruenceTag::T31, 0, 0), 7);
  CHECK(t31.pass());
  CHECK(t31.lhs == 4);
  CHECK(t31.rhs == 4);

  CHECK(lhs_value(id_of(CongruenceTag::T13), 3).value() == 0);
  for (uint64_t p : {2ull, 3ull, 7ull, 97ull})
    CHECK(rhs_value(id_of(CongruenceTag::T13), p).value() == 0);
  CHECK(rhs_value(id_of(CongruenceTag::T11A), 3).value() == 2);

  CHECK_THROWS_AS(lhs_value(id_of(CongruenceTag::T12A), 5), InapplicableError);
}

TEST_CASE("check_all covers every id in report order") {
  auto results = check_all(7);
  REQUIRE(results.size() == 19);
  auto ids = all_congruence_ids();
  for (size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].id == ids[i]);
    CHECK(results[i].pass());
  }

  auto at2 = check_all(2);
  REQUIRE(at2.size() == 19);
  for (const auto& r : at2) {
    bool applies = r.id.tag == CongruenceTag::T13 || r.id.tag == CongruenceTag::BPJ;
    CHECK((r.verdict == Verdict::Skip) == !applies);
    if (applies) CHECK(r.pass());
  }

  CongruenceId only_t12a = id_of(CongruenceTag::T12A);
  auto single = check_all(5, std::span<const CongruenceId>(&only_t12a, 1));
  REQUIRE(single.size() == 1);
  CHECK(single[0].verdict == Verdict::Skip);
}

TEST_CASE("checker rejects invalid primes") {
  CongruenceChecker checker;
  std::vector<CongruenceResult> out;
  CHECK_THROWS_AS(checker.run(91, out), std::invalid_argument);
  CHECK_THROWS_AS(checker.run(1, out), std::invalid_argument);
  CHECK_THROWS_AS(checker.run(CongruenceChecker::max_prime + 10, out), std::invalid_argument);
}

// The central soundness statement: the production lhs/rhs agree with the
// exact big-integer evaluation of every displayed expression.
TEST_CASE("soundness against the exact oracle for every prime up to 200") {
  for (uint64_t p : sieve_primes(200)) {
    for (const CongruenceId& id : all_congruence_ids()) {
      if (!applicable(id, p)) continue;
      CAPTURE(p);
      CAPTURE(id.name());
      uint64_t modulus = congruence_modulus(id, p);
      CHECK(lhs_value(id, p).value() == naive_lhs(id, p).residue(modulus));
      CHECK(rhs_value(id, p).value() == naive_rhs(id, p).residue(modulus));
      CHECK(check(id, p).pass());
    }
  }
}

TEST_CASE("termwise decomposition: C2_k = 3 binom(3k,k) - 2 binom(3k+1,k) (mod p)") {
  RowScratch scratch;
  std::vector<uint32_t> b0, b1, b0m;
  for (uint64_t p : sieve_primes(997)) {
    if (p == 2) continue;
    InverseTable t(p);
    Mod64 md(p);
    fill_binom_row_tables(t, 3, 0, 0, b0, scratch);
    fill_binom_row_tables(t, 3, 1, 0, b1, scratch);
    fill_binom_row_tables(t, 3, 0, -1, b0m, scratch);
    for (uint64_t k = 0; k < p; ++k) {
      uint64_t c2 = md.sub(b0[k], md.mul(2 % p, b0m[k]));
      uint64_t alt = md.sub(md.mul(3 % p, b0[k]), md.mul(2 % p, b1[k]));
      CHECK(c2 == alt);
      if (p <= 101) CHECK(c2 == catalan2_mod(k, p).value());
    }
  }
}

TEST_CASE("T31 window sums plus vanishing tail recompose the full sums") {
  for (uint64_t p : sieve_primes(997)) {
    if (p <= 5) continue;
    Mod64 md(p);
    for (uint8_t d = 0; d <= 1; ++d) {
      // undo the prefactor (-1)^(d+delta)/2^delta to recover the raw sums
      uint64_t raw[2];
      for (uint8_t delta = 0; delta <= 1; ++delta) {
        uint64_t v = lhs_value(id_of(CongruenceTag::T31, d, delta), p).value();
        if (delta) v = md.mul(v, 2);
        if ((d + delta) % 2) v = v ? p - v : 0;
        raw[delta] = v;
      }
      uint64_t tail = 0;
      uint64_t pw = pow_mod(2, (2 * p - d + 2) / 3, p);
      for (uint64_t k = (2 * p - d + 2) / 3; 3 * k <= 3 * p - 3; ++k) {
        uint64_t term = md.mul(pw, binom_mod_lucas(3 * k + d, k, p).value());
        tail = md.add(tail, term);
        pw = md.add(pw, pw);
      }
      CHECK(tail == 0);
      uint64_t full =
          lhs_value(id_of(d == 0 ? CongruenceTag::T12A : CongruenceTag::T12B), p).value();
      CHECK(md.add(md.add(raw[0], raw[1]), tail) == full);
    }
  }
}

TEST_CASE("BPJ per-j cases match exact binomials for sampled primes") {
  for (uint64_t p : {2ull, 3ull, 5ull, 31ull, 101ull, 311ull}) {
    CongruenceChecker checker({id_of(CongruenceTag::BPJ)});
    checker.collect_bpj_cases(true);
    std::vector<CongruenceResult> out;
    checker.run(p, out);
    REQUIRE(out.size() == 1);
    CHECK(out[0].pass());
    const auto& cases = checker.bpj_cases();
    REQUIRE(cases.size() == p - 1);
    uint64_t p2 = p * p;
    for (const auto& c : cases) {
      CHECK(c.lhs == binom_exact(p, static_cast<long long>(c.j)).mod_u64(p2));
      CHECK(c.lhs == c.rhs);
      CHECK(c.lhs == binom_mod_valued(p, c.j, p, 2).residue());
    }
  }
}

TEST_CASE("HS is an exact integer identity for p <= 61") {
  for (uint64_t p : sieve_primes(61)) {
    if (p == 2) continue;
    BigInt half(0), all(0);
    for (uint64_t j = 1; j < p; ++j) {
      BigInt b = binom_exact(p, static_cast<long long>(j));
      if (2 * j > p) half += b;
      all += b;
    }
    half.mul_small(2);
    BigInt pw = BigInt::power_of_two(static_cast<unsigned>(p));
    pw -= BigInt(2);
    CHECK(half == all);
    CHECK(all == pw);
    // and the production check reports exactly these values mod p^3
    auto r = check(id_of(CongruenceTag::HS), p);
    uint64_t p3 = p * p * p;
    CHECK(r.pass());
    CHECK(r.lhs == half.mod_u64(p3));
    CHECK(r.rhs == pw.mod_u64(p3));
  }
}

TEST_CASE("statements hold on a denser sample of primes") {
  for (uint64_t p : {211ull, 499ull, 997ull, 2003ull, 9973ull}) {
    auto results = check_all(p);
    for (const auto& r : results) {
      CAPTURE(p);
      CAPTURE(r.id.name());
      CHECK(r.verdict != Verdict::Fail);
    }
  }
}
