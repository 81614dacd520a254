// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criterion 8 drives the installed CLI binaries, whose
// paths arrive as argv[1] (normal build) and argv[2] (fault-injection
// build).

#include <catsweep/binomial.hpp>
#include <catsweep/catalan.hpp>
#include <catsweep/congruences.hpp>
#include <catsweep/identities.hpp>
#include <catsweep/modarith.hpp>
#include <catsweep/primes.hpp>
#include <catsweep/sweep.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace catsweep;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("C%d %s: %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[1 << 16];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

// Criterion 1: full sweep of every applicable id over p <= 1e5; zero
// failures; <= 60 s single-threaded and <= 15 s with jobs = 8.
void criterion1() {
  std::ofstream devnull("/dev/null");
  RunConfig cfg;
  cfg.min_prime = 2;
  cfg.max_prime = 100000;
  cfg.format = ReportFormat::Json;

  cfg.jobs = 1;
  auto t0 = std::chrono::steady_clock::now();
  SweepSummary s1 = run_sweep(cfg, devnull);
  double t_single = seconds(t0);

  cfg.jobs = 8;
  t0 = std::chrono::steady_clock::now();
  SweepSummary s8 = run_sweep(cfg, devnull);
  double t_jobs8 = seconds(t0);

  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "sweep p<=1e5: %llu checks, %llu failures; %.1fs single (<=60), %.1fs jobs=8 "
                "(<=15)",
                static_cast<unsigned long long>(s1.checked),
                static_cast<unsigned long long>(s1.failed + s8.failed), t_single, t_jobs8);
  bool ok = s1.failed == 0 && s8.failed == 0 && s1.checked == s8.checked && t_single <= 60.0 &&
            t_jobs8 <= 15.0;
  report(1, ok, detail);
}

// Criterion 2: three-way identity over 0 <= n <= 25, 0 <= m <= 3n+2, <= 5 s.
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  size_t instances = 0;
  bool ok = true;
  for (long long n = 0; n <= 25 && ok; ++n)
    for (long long m = 0; m <= 3 * n + 2; ++m) {
      BigInt a = coeff_single_sum(m, n);
      if (a != coeff_double_sum(m, n) || a != poly_coeff(m, n)) {
        ok = false;
        break;
      }
      if (m > 3 * n && !a.is_zero()) {
        ok = false;
        break;
      }
      ++instances;
    }
  double t = seconds(t0);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%zu identity instances, %.1fs (<=5)", instances, t);
  report(2, ok && t <= 5.0, detail);
}

// Criterion 3: Lucas equals exact-then-reduce for n <= 500, k <= n,
// p in {2,3,5,7,11,13}, <= 10 s.
void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  const std::array<uint64_t, 6> ps = {2, 3, 5, 7, 11, 13};
  std::vector<BigInt> row{BigInt(1)};  // Pascal row n
  size_t checks = 0;
  for (uint64_t n = 0; n <= 500 && ok; ++n) {
    for (uint64_t k = 0; k <= n && ok; ++k)
      for (uint64_t p : ps) {
        if (binom_mod_lucas(n, k, p).value() != row[k].mod_u64(p)) ok = false;
        ++checks;
      }
    // next Pascal row
    std::vector<BigInt> next(n + 2, BigInt(1));
    for (uint64_t k = 1; k <= n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  double t = seconds(t0);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%zu Lucas/exact comparisons, %.1fs (<=10)", checks, t);
  report(3, ok && t <= 10.0, detail);
}

// Criterion 4: the stream rows equal the Lucas rows elementwise for every
// prime p <= 997 and d in {0,1,2}.
void criterion4() {
  bool ok = true;
  size_t rows = 0;
  for (uint64_t p : sieve_primes(997)) {
    auto inv = std::make_shared<InverseTable>(p);
    for (uint32_t d = 0; d <= 2 && ok; ++d) {
      std::vector<uint32_t> row;
      fill_binom_row(d, p, inv, row);
      for (uint64_t k = 0; k < p; ++k)
        if (row[k] != binom_mod_lucas(3 * k + d, k, p).value()) {
          ok = false;
          break;
        }
      ++rows;
    }
    if (!ok) break;
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%zu stream rows match Lucas elementwise", rows);
  report(4, ok, detail);
}

// Criterion 5: the pinned spot values.
void criterion5() {
  bool ok = true;
  std::string bad;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      bad += what;
      bad += ' ';
    }
  };
  auto t12a = check(CongruenceId{CongruenceTag::T12A, 0, 0}, 7);
  expect(t12a.pass() && t12a.lhs == 0 && t12a.rhs == 0, "T12A@7");
  auto t31 = check(CongruenceId{CongruenceTag::T31, 0, 0}, 7);
  expect(t31.pass() && t31.lhs == 4 && t31.rhs == 4, "T31(0,0)@7");
  auto t11a = check(CongruenceId{CongruenceTag::T11A, 0, 0}, 3);
  expect(t11a.pass() && t11a.lhs == 2 && t11a.rhs == 2, "T11A@3");
  auto w3 = check(CongruenceId{CongruenceTag::W3, 0, 0}, 7);
  expect(w3.pass() && w3.lhs == 1 && w3.modulus == 343, "W3@7");
  BinomStream s(0, 7);
  std::vector<uint64_t> row;
  for (uint64_t k = 0; k < 7; ++k) {
    row.push_back(s.residue());
    if (k + 1 < 7) s.advance();
  }
  expect(row == std::vector<uint64_t>{1, 3, 1, 0, 5, 0, 0}, "stream(0,7)");
  report(5, ok, ok ? "all five spot values reproduced" : "mismatch: " + bad);
}

// Criterion 6: proof-step facts. BPJ for all odd p <= 2000 and every j;
// W3 for 5 <= p <= 2000; HS exactly for odd p <= 61 and mod p^4 for
// p <= 2000.
void criterion6() {
  bool ok = true;
  std::string bad;
  for (uint64_t p : sieve_primes(2000)) {
    // BPJ (aggregate covers every j; also true at p = 2, checked anyway)
    auto bpj = check(CongruenceId{CongruenceTag::BPJ, 0, 0}, p);
    if (bpj.verdict != Verdict::Pass) {
      ok = false;
      bad = "BPJ@" + std::to_string(p);
      break;
    }
    if (p >= 5) {
      auto w3 = check(CongruenceId{CongruenceTag::W3, 0, 0}, p);
      if (!w3.pass()) {
        ok = false;
        bad = "W3@" + std::to_string(p);
        break;
      }
      // independent route for the same binomial
      if (binom_mod_valued(2 * p - 1, p - 1, p, 3).residue() != 1) {
        ok = false;
        bad = "W3-oracle@" + std::to_string(p);
        break;
      }
    }
    if (p == 2) continue;
    // HS exactly (p <= 61 big integers), and mod p^4 for everything else:
    // binom(p,j) streamed exactly as p * unit with inverses mod p^3.
    if (p <= 61) {
      BigInt half(0), all(0);
      for (uint64_t j = 1; j < p; ++j) {
        BigInt b = binom_exact(p, static_cast<long long>(j));
        if (2 * j > p) half += b;
        all += b;
      }
      half.mul_small(2);
      BigInt pw = BigInt::power_of_two(static_cast<unsigned>(p));
      pw -= BigInt(2);
      if (half != all || all != pw) {
        ok = false;
        bad = "HS-exact@" + std::to_string(p);
        break;
      }
    }
    {
      uint64_t p3 = p * p * p, p4 = p3 * p;
      unsigned __int128 u = 1;  // binom(p,j)/p mod p^3, via plain 128-bit ops
      uint64_t sum_all = 0, sum_half = 0;
      for (uint64_t j = 1; j < p; ++j) {
        uint64_t uu = static_cast<uint64_t>(u);
        sum_all = (sum_all + uu) % p3;
        if (2 * j > p) sum_half = (sum_half + uu) % p3;
        if (j + 1 < p) {
          u = u * (p - j) % p3;
          u = u * mod_inv(static_cast<long long>(j + 1), p3).value() % p3;
        }
      }
      uint64_t lhs = static_cast<uint64_t>(static_cast<unsigned __int128>(2 * p) * sum_half % p4);
      uint64_t mid = static_cast<uint64_t>(static_cast<unsigned __int128>(p) * sum_all % p4);
      uint64_t rhs = pow_mod(2, p, p4);
      rhs = rhs >= 2 ? rhs - 2 : rhs + p4 - 2;
      if (lhs != mid || mid != rhs) {
        ok = false;
        bad = "HS-p4@" + std::to_string(p);
        break;
      }
    }
  }
  report(6, ok, ok ? "BPJ/W3/HS proof-step facts hold up to 2000" : "failed: " + bad);
}

// Criterion 7: tail vanishing for 5 < p <= 997, d in {0,1}.
void criterion7() {
  bool ok = true;
  size_t checks = 0;
  for (uint64_t p : sieve_primes(997)) {
    if (p <= 5) continue;
    for (uint32_t d = 0; d <= 1; ++d)
      for (uint64_t k = (2 * p - d + 2) / 3; 3 * k <= 3 * p - 3; ++k) {
        if (binom_mod_lucas(3 * k + d, k, p).value() != 0) ok = false;
        ++checks;
      }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%zu tail binomials vanish mod p", checks);
  report(7, ok, detail);
}

// Criterion 8: CLI determinism across jobs in {1,4,8} on [2, 1e4] plus the
// three scripted exit codes.
void criterion8(const std::string& cli, const std::string& cli_faulty) {
  std::string base = cli + " --min-prime 2 --max-prime 10000 --format json 2>/dev/null";
  CommandResult j1 = run_command(base + " --jobs 1");
  CommandResult j4 = run_command(base + " --jobs 4");
  CommandResult j8 = run_command(base + " --jobs 8");
  bool identical = !j1.out.empty() && j1.out == j4.out && j4.out == j8.out;

  CommandResult all_pass =
      run_command(cli + " --min-prime 2 --max-prime 500 >/dev/null 2>/dev/null");
  CommandResult faulty =
      run_command(cli_faulty + " --min-prime 2 --max-prime 500 >/dev/null 2>/dev/null");
  CommandResult bad_flag = run_command(cli + " --format nonsense >/dev/null 2>/dev/null");

  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "jobs{1,4,8} byte-identical=%s; exit codes: all-pass=%d (want 0), "
                "injected-fault=%d (want 1), bad-flag=%d (want 2)",
                identical ? "yes" : "NO", all_pass.exit_code, faulty.exit_code,
                bad_flag.exit_code);
  bool ok = identical && all_pass.exit_code == 0 && faulty.exit_code == 1 &&
            bad_flag.exit_code == 2;
  report(8, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <catsweep-binary> <catsweep-faulty-binary>\n", argv[0]);
    return 2;
  }
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(argv[1], argv[2]);
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria PASS\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
