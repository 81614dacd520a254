#pragma once

#include <catsweep/congruences.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace catsweep {

enum class ReportFormat : uint8_t { Text, Json, Csv };

struct RunConfig {
  uint64_t min_prime = 2;
  uint64_t max_prime = 100000;
  std::vector<CongruenceId> ids;  // empty = all 19 checks
  ReportFormat format = ReportFormat::Text;
  unsigned jobs = 1;
  bool verbose_bpj = false;
  // Applied to every aggregate record before it is formatted; test seam
  // used by the fault-injection build.
  std::function<void(CongruenceResult&)> record_hook;
};

struct SweepSummary {
  uint64_t checked = 0;  // passed + skipped + failed
  uint64_t passed = 0;
  uint64_t skipped = 0;
  uint64_t failed = 0;
};

// Streams one record per (prime, id) in ascending (p, report-order), plus
// per-j BPJ detail records when verbose_bpj is set. Output bytes are
// identical for any jobs value. Throws std::invalid_argument on a bad
// config (range, bounds).
SweepSummary run_sweep(const RunConfig& cfg, std::ostream& out);

// Record serialization (shared by the sweep and the tests).
const char* csv_header();
void append_record(std::string& buf, const CongruenceResult& r, ReportFormat f);
void append_bpj_case(std::string& buf, uint64_t p, const BpjCase& c, ReportFormat f);
std::string summary_line(const SweepSummary& s);

// Comma-separated id list -> expanded, deduplicated ids in report order.
// "all" (or empty) selects everything; returns nothing on an unknown token.
std::optional<std::vector<CongruenceId>> parse_id_list(std::string_view list);

}  // namespace catsweep
