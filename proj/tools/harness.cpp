#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ffdet/field.hpp"
#include "ffdet/matrices.hpp"
#include "ffdet/modulus_cache.hpp"
#include "ffdet/poly.hpp"
#include "json.hpp"

namespace ffdet::harness {

namespace {

using nlohmann::ordered_json;

std::vector<QEntry> enumerate_prime_powers(std::int64_t bound, bool mod3_filter) {
  std::vector<QEntry> out;
  for (std::int64_t q = 3; q <= bound; ++q) {
    if (q % 2 == 0) continue;
    if (mod3_filter && q % 3 != 2) continue;
    const auto decomposed = prime_power_decompose(q);
    if (!decomposed) continue;
    out.push_back(QEntry{decomposed->first, decomposed->second, q});
  }
  return out;
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "ffdet: error: " << message << "\n"
      << "usage: ffdet <verify-theorem|verify-lemmas|conjecture|zoo|det-tq|"
         "field-info>\n"
      << "             [--q N] [--p N] [--r N] [--lambda N] [--max-q N] "
         "[--max-p N]\n"
      << "             [--seed N] [--trials N] [--jobs N] [--cache PATH]\n"
      << "             [--format json-lines|table] [--timings]\n";
  return 2;
}

std::string params_str(const std::map<std::string, std::int64_t>& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ' ';
    s += k + '=' + std::to_string(v);
  }
  return s;
}

void emit_table(const std::vector<VerificationReport>& reports, bool timings,
                std::ostream& out) {
  const std::vector<std::string> header{"claim",     "params",  "computed",
                                        "predicted", "matched", "elapsed_ms"};
  std::vector<std::vector<std::string>> rows;
  rows.reserve(reports.size());
  for (const VerificationReport& r : reports) {
    rows.push_back({std::string(claim_tag(r.claim)), params_str(r.params),
                    r.computed, r.predicted, r.matched ? "yes" : "no",
                    std::to_string(timings ? r.elapsed_ms : 0)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      out << (c + 1 < row.size() ? "  " : "");
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

/// Runs the tasks on up to `jobs` threads, preserving input order in the
/// result vector.  The first exception (if any) is rethrown.
std::vector<VerificationReport> run_tasks(
    std::vector<std::function<VerificationReport()>> tasks, int jobs) {
  std::vector<VerificationReport> results(tasks.size());
  if (tasks.empty()) return results;
  const auto n = tasks.size();
  const auto workers = static_cast<std::size_t>(
      std::clamp<std::int64_t>(jobs, 1, static_cast<std::int64_t>(n)));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = tasks[i]();
      } catch (...) {
        const std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

constexpr std::int64_t kZooSpBound = 50;
constexpr std::int64_t kZooApBound = 43;
constexpr std::int64_t kCarlitzPrimes[] = {5, 7, 11, 13};
constexpr std::int64_t kCarlitzLambdas[] = {0, 1, 2};
constexpr std::int64_t kRemarkPrimes[] = {5, 11};
constexpr std::int64_t kLerchMax = 60;
constexpr int kLemma22NMax = 5;
constexpr std::int64_t kLemma22FieldP = 7;

}  // namespace

std::vector<QEntry> enumerate_valid_q(std::int64_t bound) {
  if (bound < 5) {
    throw std::invalid_argument("enumerate_valid_q: bound must be at least 5");
  }
  return enumerate_prime_powers(bound, /*mod3_filter=*/true);
}

std::vector<QEntry> enumerate_odd_prime_powers(std::int64_t bound) {
  if (bound < 3) {
    throw std::invalid_argument(
        "enumerate_odd_prime_powers: bound must be at least 3");
  }
  return enumerate_prime_powers(bound, /*mod3_filter=*/false);
}

std::string report_json_line(const VerificationReport& report,
                             std::int64_t elapsed_ms) {
  ordered_json j;
  j["claim"] = std::string(claim_tag(report.claim));
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : report.params) j["params"][k] = v;
  j["computed"] = report.computed;
  j["predicted"] = report.predicted;
  j["matched"] = report.matched;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format != "json-lines" && cfg.format != "table") {
    return usage_error(err, "unknown --format '" + cfg.format + "'");
  }
  if (cfg.max_q < 5) return usage_error(err, "--max-q must be at least 5");
  if (cfg.max_p < 5) return usage_error(err, "--max-p must be at least 5");
  if (cfg.jobs < 1) return usage_error(err, "--jobs must be at least 1");
  if (cfg.trials < 1) return usage_error(err, "--trials must be at least 1");

  std::optional<ModulusCache> cache_storage;
  if (cfg.cache_path) cache_storage.emplace(*cfg.cache_path);
  ModulusCache* cache = cache_storage ? &*cache_storage : nullptr;

  std::vector<std::function<VerificationReport()>> tasks;
  auto for_entry = [cache](QEntry e, auto&& check) {
    return [e, cache, check] { return check(make_field(e.p, e.r, cache)); };
  };

  if (cfg.command == "verify-theorem") {
    for (const QEntry e : enumerate_valid_q(cfg.max_q)) {
      tasks.push_back(for_entry(e, [](const FieldCtx& ctx) {
        return check_theorem(ctx);
      }));
      tasks.push_back(for_entry(e, [](const FieldCtx& ctx) {
        return theorem_assembly_check(ctx);
      }));
    }
  } else if (cfg.command == "verify-lemmas") {
    for (const QEntry e : enumerate_valid_q(cfg.max_q)) {
      tasks.push_back(for_entry(e, [](const FieldCtx& ctx) {
        return verify_lemma21(ctx);
      }));
    }
    tasks.push_back([&cfg] {
      return check_lemma22_field(kLemma22FieldP, kLemma22NMax, cfg.trials,
                                 cfg.seed);
    });
    tasks.push_back([&cfg] {
      return check_lemma22_rational(kLemma22NMax, cfg.trials, cfg.seed);
    });
    for (std::int64_t m = 1; m <= kLerchMax; ++m) {
      tasks.push_back([m] { return check_lemma23(m); });
    }
    for (const QEntry e : enumerate_odd_prime_powers(cfg.max_q)) {
      tasks.push_back(for_entry(e, [](const FieldCtx& ctx) {
        return check_lemma24(ctx);
      }));
    }
  } else if (cfg.command == "conjecture") {
    for (std::int64_t p = 5; p <= cfg.max_p; p += 2) {
      if (p % 3 != 2 || !is_prime(p)) continue;
      tasks.push_back([p] { return check_corollary(p); });
    }
  } else if (cfg.command == "zoo") {
    for (std::int64_t p = 3; p <= kZooSpBound; p += 2) {
      if (!is_prime(p)) continue;
      tasks.push_back([p] { return check_sun_sp(p); });
    }
    for (std::int64_t p = 3; p <= kZooApBound; p += 2) {
      if (p % 4 != 3 || !is_prime(p)) continue;
      tasks.push_back([p] { return check_sun_ap(p); });
    }
    for (const std::int64_t p : kCarlitzPrimes) {
      if (cfg.lambda) {
        tasks.push_back([p, l = *cfg.lambda] { return check_carlitz(p, l); });
      } else {
        for (const std::int64_t l : kCarlitzLambdas) {
          tasks.push_back([p, l] { return check_carlitz(p, l); });
        }
      }
    }
    for (const std::int64_t p : kRemarkPrimes) {
      tasks.push_back([p] { return check_remark_rational(p); });
    }
  } else if (cfg.command == "det-tq") {
    if (!cfg.q) return usage_error(err, "det-tq requires --q");
    const auto decomposed = prime_power_decompose(*cfg.q);
    if (!decomposed || decomposed->first == 2 || *cfg.q % 3 != 2) {
      return usage_error(err, "--q " + std::to_string(*cfg.q) +
                                  " is not an odd prime power ≡ 2 (mod 3)");
    }
    const auto [p, r] = *decomposed;
    tasks.push_back([p, r, cache] { return check_theorem(make_field(p, r, cache)); });
  } else if (cfg.command == "field-info") {
    if (!cfg.p) return usage_error(err, "field-info requires --p");
    const std::int64_t p = *cfg.p;
    const int r = cfg.r.value_or(1);
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
      return usage_error(err, "--p must be an odd prime");
    }
    if (r < 1 || r > 64) return usage_error(err, "--r must be in [1, 64]");
    const FieldCtx ctx = make_field(p, r, cache);
    out << p << ' ' << r << ' ';
    const std::vector<std::int64_t>& m = ctx.modulus();
    for (std::size_t i = 0; i < m.size(); ++i) {
      out << (i ? "," : "") << m[i];
    }
    out << '\n';
    return 0;
  } else {
    return usage_error(err, "unknown command '" + cfg.command + "'");
  }

  std::vector<VerificationReport> reports;
  try {
    reports = run_tasks(std::move(tasks), cfg.jobs);
  } catch (const std::exception& e) {
    err << "ffdet: error: " << e.what() << '\n';
    return 2;
  }
  std::sort(reports.begin(), reports.end(), report_less);

  if (cfg.format == "table") {
    emit_table(reports, cfg.timings, out);
  } else {
    for (const VerificationReport& r : reports) {
      out << report_json_line(r, cfg.timings ? r.elapsed_ms : 0) << '\n';
    }
  }
  const bool all_matched =
      std::all_of(reports.begin(), reports.end(),
                  [](const VerificationReport& r) { return r.matched; });
  return all_matched ? 0 : 1;
}

}  // namespace ffdet::harness
