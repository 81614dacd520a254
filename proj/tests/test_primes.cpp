#include <catsweep/primes.hpp>

#include <doctest.h>

#include <algorithm>

using namespace catsweep;

namespace {

bool trial_division(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("sieve_primes basics") {
  CHECK(sieve_primes(10) == std::vector<uint64_t>{2, 3, 5, 7});
  CHECK(sieve_primes(2) == std::vector<uint64_t>{2});
  CHECK(sieve_primes(1).empty());
  CHECK(sieve_primes(0).empty());
}

TEST_CASE("sieve matches is_prime up to 1e5") {
  auto primes = sieve_primes(100000);
  CHECK(std::is_sorted(primes.begin(), primes.end()));
  CHECK(std::adjacent_find(primes.begin(), primes.end()) == primes.end());
  CHECK(primes.size() == 9592);
  size_t idx = 0;
  for (uint64_t n = 0; n <= 100000; ++n) {
    bool in_sieve = idx < primes.size() && primes[idx] == n;
    if (in_sieve) ++idx;
    CHECK(in_sieve == is_prime(n));
  }
}

TEST_CASE("is_prime handles known tricky composites") {
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(!is_prime(91));  // 7 * 13
  CHECK(!is_prime(561));                    // Carmichael
  CHECK(!is_prime(3215031751ull));          // strong pseudoprime to 2,3,5,7
  CHECK(!is_prime(3825123056546413051ull)); // strong pseudoprime to first 9 primes
  CHECK(is_prime((uint64_t(1) << 61) - 1));  // Mersenne prime
  CHECK(!is_prime((uint64_t(1) << 62) - 1));
  CHECK(is_prime(2097143));
}

TEST_CASE("PrimeRange matches sieve on windows") {
  auto all = sieve_primes(200000);
  auto window = PrimeRange(50000, 150000).to_vector();
  std::vector<uint64_t> expected;
  for (uint64_t p : all)
    if (p >= 50000 && p <= 150000) expected.push_back(p);
  CHECK(window == expected);

  CHECK(PrimeRange(2, 30).to_vector() == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(PrimeRange(14, 16).to_vector().empty());
  CHECK(PrimeRange(13, 13).to_vector() == std::vector<uint64_t>{13});
  CHECK(PrimeRange(0, 1).to_vector().empty());
  CHECK_THROWS(PrimeRange(5, 3));
}

TEST_CASE("narrow high windows use direct testing and stay correct") {
  // exercises the Miller-Rabin path (narrow window far from zero)
  uint64_t lo = 200000000, hi = 200002000;
  auto got = PrimeRange(lo, hi).to_vector();
  std::vector<uint64_t> expected;
  for (uint64_t n = lo; n <= hi; ++n)
    if (trial_division(n)) expected.push_back(n);
  CHECK(got == expected);
  CHECK(!got.empty());

  // same window through the segmented path must agree
  auto wide = PrimeRange(lo - 100000, hi).to_vector();
  std::vector<uint64_t> tail;
  for (uint64_t p : wide)
    if (p >= lo) tail.push_back(p);
  CHECK(tail == got);
}
