#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "harness.hpp"

namespace {

// Attaches the full shared flag set.  Every subcommand accepts every flag
// (inapplicable ones are ignored), which keeps invocations uniform.
void add_flags(CLI::App* sub, ffdet::harness::RunConfig& cfg) {
  sub->add_option("--q", cfg.q, "explicit prime power q");
  sub->add_option("--p", cfg.p, "explicit prime p");
  sub->add_option("--r", cfg.r, "extension degree r");
  sub->add_option("--lambda", cfg.lambda, "shift parameter for the charpoly family");
  sub->add_option("--max-q", cfg.max_q, "sweep bound on q (default 200)");
  sub->add_option("--max-p", cfg.max_p, "sweep bound on p (default 200)");
  sub->add_option("--seed", cfg.seed, "seed for the randomized determinant checks");
  sub->add_option("--trials", cfg.trials, "randomized trials per check (default 100)");
  sub->add_option("--jobs", cfg.jobs, "max concurrent checks (default 1)");
  sub->add_option("--cache", cfg.cache_path, "irreducible-modulus cache file");
  sub->add_option("--format", cfg.format, "json-lines (default) or table")
      ->check(CLI::IsMember({"json-lines", "table"}));
  sub->add_flag("--timings", cfg.timings,
                "emit measured elapsed_ms instead of the deterministic 0");
}

}  // namespace

int main(int argc, char** argv) {
  ffdet::harness::RunConfig cfg;
  CLI::App app{
      "ffdet — exact determinant identities over finite fields and the "
      "rationals"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
  };
  constexpr Command kCommands[] = {
      {"verify-theorem",
       "determinant closed form plus its proof-chain links over all valid q"},
      {"verify-lemmas",
       "polynomial congruence, product determinant formula, and permutation "
       "sign identities"},
      {"conjecture", "quadratic-residue status of 2·det over primes ≡ 2 (mod 3)"},
      {"zoo", "related determinant and characteristic-polynomial families"},
      {"det-tq", "one determinant with its predicted value (requires --q)"},
      {"field-info", "the chosen reduction modulus for (p, r) (requires --p)"},
  };
  for (const Command& c : kCommands) add_flags(app.add_subcommand(c.name, c.help), cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return ffdet::harness::run(cfg, std::cout, std::cerr);
}
