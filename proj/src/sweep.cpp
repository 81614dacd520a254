#include <catsweep/sweep.hpp>

#include <catsweep/primes.hpp>

#include <atomic>
#include <charconv>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace catsweep {

namespace {

void append_u64(std::string& buf, uint64_t v) {
  char tmp[20];
  auto [end, ec] = std::to_chars(tmp, tmp + sizeof(tmp), v);
  buf.append(tmp, end);
}

void append_json(std::string& buf, const std::string& id_name, const CongruenceId* params,
                 uint64_t p, uint64_t modulus, uint64_t lhs, uint64_t rhs, const char* verdict) {
  buf += "{\"id\":\"";
  buf += id_name;
  buf += '"';
  if (params) {
    buf += ",\"d\":";
    append_u64(buf, params->d);
    buf += ",\"delta\":";
    append_u64(buf, params->delta);
  }
  buf += ",\"p\":";
  append_u64(buf, p);
  buf += ",\"modulus\":";
  append_u64(buf, modulus);
  buf += ",\"lhs\":";
  append_u64(buf, lhs);
  buf += ",\"rhs\":";
  append_u64(buf, rhs);
  buf += ",\"verdict\":\"";
  buf += verdict;
  buf += "\"}\n";
}

void append_csv(std::string& buf, const std::string& id_name, const CongruenceId* params,
                uint64_t p, uint64_t modulus, uint64_t lhs, uint64_t rhs, const char* verdict) {
  buf += id_name;
  buf += ',';
  if (params) {
    append_u64(buf, params->d);
    buf += ',';
    append_u64(buf, params->delta);
  } else {
    buf += ',';
  }
  buf += ',';
  append_u64(buf, p);
  buf += ',';
  append_u64(buf, modulus);
  buf += ',';
  append_u64(buf, lhs);
  buf += ',';
  append_u64(buf, rhs);
  buf += ',';
  buf += verdict;
  buf += '\n';
}

void append_text(std::string& buf, const std::string& id_name, uint64_t p, uint64_t modulus,
                 uint64_t lhs, uint64_t rhs, const char* verdict) {
  buf += "p=";
  append_u64(buf, p);
  buf += ' ';
  buf += id_name;
  buf += " mod=";
  append_u64(buf, modulus);
  buf += " lhs=";
  append_u64(buf, lhs);
  buf += " rhs=";
  append_u64(buf, rhs);
  buf += ' ';
  buf += verdict;
  buf += '\n';
}

}  // namespace

const char* csv_header() { return "id,d,delta,p,modulus,lhs,rhs,verdict"; }

void append_record(std::string& buf, const CongruenceResult& r, ReportFormat f) {
  const bool t31 = r.id.has_params();
  const char* verdict = verdict_name(r.verdict);
  switch (f) {
    case ReportFormat::Text:
      append_text(buf, r.id.name(), r.p, r.modulus, r.lhs, r.rhs, verdict);
      break;
    case ReportFormat::Json:
      append_json(buf, t31 ? "T31" : r.id.name(), t31 ? &r.id : nullptr, r.p, r.modulus, r.lhs,
                  r.rhs, verdict);
      break;
    case ReportFormat::Csv:
      append_csv(buf, t31 ? "T31" : r.id.name(), t31 ? &r.id : nullptr, r.p, r.modulus, r.lhs,
                 r.rhs, verdict);
      break;
  }
}

void append_bpj_case(std::string& buf, uint64_t p, const BpjCase& c, ReportFormat f) {
  std::string id_name = "BPJ:";
  append_u64(id_name, c.j);
  const char* verdict = c.lhs == c.rhs ? "pass" : "fail";
  switch (f) {
    case ReportFormat::Text:
      append_text(buf, id_name, p, p * p, c.lhs, c.rhs, verdict);
      break;
    case ReportFormat::Json:
      append_json(buf, id_name, nullptr, p, p * p, c.lhs, c.rhs, verdict);
      break;
    case ReportFormat::Csv:
      append_csv(buf, id_name, nullptr, p, p * p, c.lhs, c.rhs, verdict);
      break;
  }
}

std::string summary_line(const SweepSummary& s) {
  std::string line = "summary: checked=";
  append_u64(line, s.checked);
  line += " passed=";
  append_u64(line, s.passed);
  line += " skipped=";
  append_u64(line, s.skipped);
  line += " failed=";
  append_u64(line, s.failed);
  return line;
}

std::optional<std::vector<CongruenceId>> parse_id_list(std::string_view list) {
  std::vector<CongruenceId> out;
  if (list.empty() || list == "all") {
    out.assign(all_congruence_ids().begin(), all_congruence_ids().end());
    return out;
  }
  std::vector<std::string> tokens;
  size_t start = 0;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    tokens.emplace_back(list.substr(start, comma - start));
    start = comma + 1;
  }
  // "T31:d,delta" contains the list separator; re-join such pairs.
  std::vector<std::string> merged;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i + 1 < tokens.size() && tokens[i].size() == 5 && tokens[i].rfind("T31:", 0) == 0 &&
        tokens[i + 1].size() == 1) {
      merged.push_back(tokens[i] + "," + tokens[i + 1]);
      ++i;
    } else {
      merged.push_back(tokens[i]);
    }
  }
  for (const std::string& tok : merged) {
    if (tok == "all") {
      out.assign(all_congruence_ids().begin(), all_congruence_ids().end());
      continue;
    }
    if (tok == "T31") {
      for (const CongruenceId& id : all_congruence_ids())
        if (id.tag == CongruenceTag::T31) out.push_back(id);
      continue;
    }
    auto id = CongruenceId::parse(tok);
    if (!id) return std::nullopt;
    out.push_back(*id);
  }
  // report order, deduplicated (CongruenceChecker re-sorts anyway)
  CongruenceChecker normalizer(out);
  return normalizer.ids();
}

namespace {

struct BlockResult {
  std::string bytes;
  SweepSummary summary;
};

class PrimeRunner {
public:
  PrimeRunner(const RunConfig& cfg, std::vector<CongruenceId> ids)
      : cfg_(cfg), checker_(std::move(ids)) {
    checker_.collect_bpj_cases(cfg.verbose_bpj);
  }

  void process(uint64_t p, std::string& buf, SweepSummary& s) {
    records_.clear();
    checker_.run(p, records_);
    for (CongruenceResult& r : records_) {
      if (cfg_.record_hook) cfg_.record_hook(r);
      ++s.checked;
      switch (r.verdict) {
        case Verdict::Pass:
          ++s.passed;
          break;
        case Verdict::Fail:
          ++s.failed;
          break;
        case Verdict::Skip:
          ++s.skipped;
          break;
      }
      append_record(buf, r, cfg_.format);
      if (cfg_.verbose_bpj && r.id.tag == CongruenceTag::BPJ && r.verdict != Verdict::Skip)
        for (const BpjCase& c : checker_.bpj_cases()) append_bpj_case(buf, p, c, cfg_.format);
    }
  }

private:
  const RunConfig& cfg_;
  CongruenceChecker checker_;
  std::vector<CongruenceResult> records_;
};

}  // namespace

SweepSummary run_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.min_prime < 2 || cfg.min_prime > cfg.max_prime)
    throw std::invalid_argument("run_sweep: need 2 <= min_prime <= max_prime");
  if (cfg.max_prime > CongruenceChecker::max_prime)
    throw std::invalid_argument("run_sweep: max_prime above supported bound " +
                                std::to_string(CongruenceChecker::max_prime));
  if (cfg.jobs < 1) throw std::invalid_argument("run_sweep: jobs must be >= 1");

  std::vector<CongruenceId> ids = cfg.ids;
  if (ids.empty()) ids.assign(all_congruence_ids().begin(), all_congruence_ids().end());

  const std::vector<uint64_t> primes = PrimeRange(cfg.min_prime, cfg.max_prime).to_vector();
  if (cfg.format == ReportFormat::Csv) out << csv_header() << '\n';

  SweepSummary total;
  if (cfg.jobs == 1 || primes.size() <= 1) {
    PrimeRunner runner(cfg, ids);
    std::string buf;
    for (uint64_t p : primes) {
      buf.clear();
      runner.process(p, buf, total);
      out << buf;
    }
    return total;
  }

  constexpr size_t block_size = 32;
  const size_t blocks = (primes.size() + block_size - 1) / block_size;
  std::vector<std::optional<BlockResult>> done(blocks);
  std::atomic<size_t> next_block{0};
  std::mutex mu;
  std::condition_variable cv;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      PrimeRunner runner(cfg, ids);
      for (;;) {
        size_t b = next_block.fetch_add(1);
        if (b >= blocks) return;
        BlockResult res;
        size_t lo = b * block_size, hi = std::min(primes.size(), lo + block_size);
        for (size_t i = lo; i < hi; ++i) runner.process(primes[i], res.bytes, res.summary);
        {
          std::lock_guard<std::mutex> lock(mu);
          done[b] = std::move(res);
        }
        cv.notify_one();
      }
    } catch (...) {
      {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  unsigned nworkers = static_cast<unsigned>(std::min<size_t>(cfg.jobs, blocks));
  pool.reserve(nworkers);
  for (unsigned i = 0; i < nworkers; ++i) pool.emplace_back(worker);

  // Single merger restores ascending block order, so output bytes do not
  // depend on the worker count.
  for (size_t b = 0; b < blocks; ++b) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[b].has_value() || failure; });
    if (failure) break;
    BlockResult res = std::move(*done[b]);
    done[b].reset();
    lock.unlock();
    out << res.bytes;
    total.checked += res.summary.checked;
    total.passed += res.summary.passed;
    total.skipped += res.summary.skipped;
    total.failed += res.summary.failed;
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return total;
}

}  // namespace catsweep
