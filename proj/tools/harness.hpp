#ifndef FFDET_TOOLS_HARNESS_HPP
#define FFDET_TOOLS_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ffdet/report.hpp"

namespace ffdet::harness {

/// One prime power q = p^r in an enumeration.
struct QEntry {
  std::int64_t p;
  int r;
  std::int64_t q;

  bool operator==(const QEntry&) const = default;
};

/// Ascending odd prime powers q = p^r <= bound with q ≡ 2 (mod 3) —
/// the determinant family's hypothesis set.  Throws for bound < 5.
std::vector<QEntry> enumerate_valid_q(std::int64_t bound);

/// Ascending odd prime powers q = p^r <= bound (q >= 3) — the domain of
/// the inversion-permutation sign identity.  Throws for bound < 3.
std::vector<QEntry> enumerate_odd_prime_powers(std::int64_t bound);

/// Everything one invocation needs.  Defaults give the full desk-scale
/// sweep with deterministic output.
struct RunConfig {
  std::string command;  // verify-theorem | verify-lemmas | conjecture |
                        // zoo | det-tq | field-info
  std::int64_t max_q = 200;
  std::int64_t max_p = 200;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> p;
  std::optional<int> r;
  std::optional<std::int64_t> lambda;
  std::optional<std::string> cache_path;
  std::string format = "json-lines";  // json-lines | table
  std::uint64_t seed = 0xFFDE7;
  int trials = 100;
  int jobs = 1;
  // When false (default) the emitted elapsed_ms is pinned to 0 so that
  // repeated runs are byte-identical; when true, measured wall times are
  // emitted instead.
  bool timings = false;
};

/// Executes the configured command, writing the report stream to `out`
/// and diagnostics to `err`.  Returns 0 when every report matched, 1 when
/// any report mismatched, 2 on a usage or configuration error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Serializes one report as a single JSON object in the fixed key order
/// claim, params, computed, predicted, matched, elapsed_ms (compact, no
/// trailing newline).  `elapsed_ms` overrides the report's own value.
std::string report_json_line(const VerificationReport& report,
                             std::int64_t elapsed_ms);

}  // namespace ffdet::harness

#endif  // FFDET_TOOLS_HARNESS_HPP
