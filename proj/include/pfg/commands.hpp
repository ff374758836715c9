// Copyright 2026 The pfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFG_COMMANDS_HPP
#define PFG_COMMANDS_HPP

// Subcommands of the pfg tool, callable in-process. Each returns the record
// to print and the process exit code; invalid input surfaces as a pfg::Error,
// which the front end maps to exit code 2.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfg/beliefs.hpp"
#include "pfg/combinatorics.hpp"
#include "pfg/core.hpp"
#include "pfg/cournot.hpp"
#include "pfg/errors.hpp"
#include "pfg/io.hpp"
#include "pfg/numeric.hpp"
#include "pfg/oracle/best_response.hpp"
#include "pfg/report.hpp"
#include "pfg/values.hpp"

namespace pfg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kTable2First = 3;
inline constexpr int kTable2Last = 10;
inline constexpr int kTable1Players = 11;
inline constexpr double kBestResponseRelTol = 1e-10;

struct GlobalOptions {
  report::Format format = report::Format::kTable;
  unsigned precision = 4;
  std::string a = "2";
  std::string c = "1";
};

struct CommandResult {
  report::OutputRecord record;
  int exit_code = kExitOk;
};

inline MarketParams market_from(const GlobalOptions& options) {
  return MarketParams(parse_rational(options.a), parse_rational(options.c));
}

// "uniform", "gamma", or "file:<path>".
inline BeliefFamily resolve_belief(const std::string& spec) {
  if (spec == "uniform") return uniform_family();
  if (spec == "gamma") return gamma_family();
  if (spec.rfind("file:", 0) == 0 && spec.size() > 5) {
    return io::load_belief_file(spec.substr(5));
  }
  throw UsageError("unknown belief '" + spec +
                   "' (expected uniform, gamma or file:<path>)");
}

namespace detail {

inline void add_market_inputs(report::OutputRecord& record,
                              const MarketParams& params) {
  record.add_input("a", to_fraction_string(params.a()));
  record.add_input("c", to_fraction_string(params.c()));
}

inline std::string verdict_word(bool nonempty) {
  return nonempty ? "nonempty" : "empty";
}

inline ExactRational min_margin(const CoreVerdict& verdict) {
  return *std::min_element(verdict.margins.begin(), verdict.margins.end());
}

}  // namespace detail

// Rows (s, nu(s), v(s)) for s = 1..n, or with `table2` the singleton worths
// for n = 3..10 next to the shifted n = 11 value they must equal.
inline CommandResult cmd_table(int n, const std::string& belief, bool table2,
                               const GlobalOptions& options) {
  const MarketParams params = market_from(options);
  const BeliefFamily family = resolve_belief(belief);
  CommandResult result;
  auto& record = result.record;
  record.command = "table";
  record.add_input("belief", family.id());
  detail::add_market_inputs(record, params);

  if (table2) {
    record.add_input("table2", "true");
    const SymmetricGame reference = build_game(kTable1Players, family, params);
    record.columns = {{"n"}, {"nu_singleton"}, {"v_singleton"},
                      {"shift_s"}, {"shift_equal"}};
    bool all_equal = true;
    for (int players = kTable2First; players <= kTable2Last; ++players) {
      const SymmetricGame game = build_game(players, family, params);
      const int shifted = 1 + (kTable1Players - players);
      const bool equal = game.nu(1) == reference.nu(shifted);
      all_equal = all_equal && equal;
      record.add_row({static_cast<long long>(players), game.nu(1), game.worth(1),
                      static_cast<long long>(shifted), equal});
    }
    record.add_summary("shift_consistent", all_equal);
    result.exit_code = all_equal ? kExitOk : kExitCheckFailed;
    return result;
  }

  if (n < 2) throw UsageError("table requires --n >= 2");
  record.add_input("n", std::to_string(n));
  const SymmetricGame game = build_game(n, family, params);
  record.columns = {{"s"}, {"nu"}, {"v"}};
  for (int s = 1; s <= n; ++s) {
    record.add_row({static_cast<long long>(s), game.nu(s), game.worth(s)});
  }
  return result;
}

inline CommandResult cmd_scan(int n_min, int n_max, const std::string& belief,
                              const GlobalOptions& /*options*/) {
  if (n_min < 2 || n_min > n_max) {
    throw UsageError("scan requires 2 <= --n-min <= --n-max");
  }
  const BeliefFamily family = resolve_belief(belief);
  const auto verdicts = threshold_scan(family, n_min, n_max);
  CommandResult result;
  auto& record = result.record;
  record.command = "scan";
  record.add_input("belief", family.id());
  record.add_input("n_min", std::to_string(n_min));
  record.add_input("n_max", std::to_string(n_max));
  record.columns = {{"n"}, {"core"}, {"violating_sizes"}, {"min_margin"},
                    {"margins", true}};
  long long nonempty = 0;
  for (const auto& v : verdicts) {
    if (v.nonempty) ++nonempty;
    record.add_row({static_cast<long long>(v.n), detail::verdict_word(v.nonempty),
                    v.violating_sizes, detail::min_margin(v), v.margins});
  }
  record.add_summary("nonempty_count", nonempty);
  record.add_summary("empty_count",
                     static_cast<long long>(verdicts.size()) - nonempty);
  return result;
}

inline CommandResult cmd_compare(int n, const std::string& belief_g,
                                 const std::string& belief_z,
                                 const GlobalOptions& /*options*/) {
  if (n < 2) throw UsageError("compare requires --n >= 2");
  const BeliefFamily g = resolve_belief(belief_g);
  const BeliefFamily z = resolve_belief(belief_z);
  const TransferVerdict verdict = corollary1_transfer(g, z, n);
  CommandResult result;
  auto& record = result.record;
  record.command = "compare";
  record.add_input("n", std::to_string(n));
  record.add_input("g", g.id());
  record.add_input("z", z.id());
  record.columns = {{"s"}, {"h_g"}, {"h_z"}, {"g_exceeds_z"}};
  for (int s = 1; s <= n; ++s) {
    ExactRational h_g = harmonic_number(g(n, s));
    ExactRational h_z = harmonic_number(z(n, s));
    const bool exceeds = h_g > h_z;
    record.add_row({static_cast<long long>(s), std::move(h_g), std::move(h_z),
                    exceeds});
  }
  record.add_summary("dominates", verdict.dominates);
  record.add_summary("g_core", detail::verdict_word(verdict.g_core.nonempty));
  record.add_summary("z_core", detail::verdict_word(verdict.z_core.nonempty));
  record.add_summary("consistency",
                     std::string(verdict.consistent ? "ok" : "violated"));
  result.exit_code = verdict.consistent ? kExitOk : kExitCheckFailed;
  return result;
}

inline CommandResult cmd_check_allocation(int n, const std::string& belief,
                                          std::vector<ExactRational> payoffs,
                                          const GlobalOptions& options) {
  if (n < 2) throw UsageError("check-allocation requires --n >= 2");
  const MarketParams params = market_from(options);
  const BeliefFamily family = resolve_belief(belief);
  const SymmetricGame game = build_game(n, family, params);
  const Allocation x{std::move(payoffs)};
  const AllocationVerdict verdict = allocation_in_core(game, x);

  CommandResult result;
  auto& record = result.record;
  record.command = "check-allocation";
  record.add_input("n", std::to_string(n));
  record.add_input("belief", family.id());
  detail::add_market_inputs(record, params);
  record.add_summary("in_core", verdict.in_core);
  if (verdict.violating_size) {
    record.add_summary("violating_size",
                       static_cast<long long>(*verdict.violating_size));
    record.add_summary("deficit", verdict.deficit);
  }
  record.columns = {{"player"}, {"payoff"}};
  for (std::size_t i = 0; i < x.payoffs.size(); ++i) {
    record.add_row({static_cast<long long>(i) + 1, x.payoffs[i]});
  }
  result.exit_code = verdict.in_core ? kExitOk : kExitCheckFailed;
  return result;
}

inline CommandResult cmd_check_allocation(int n, const std::string& belief,
                                          const std::string& payoffs_path,
                                          const GlobalOptions& options) {
  return cmd_check_allocation(n, belief, io::load_payoffs_file(payoffs_path),
                              options);
}

struct SuiteResult {
  std::string name;
  long long checks = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

namespace detail {

inline std::string where(int n, int s) {
  return "n=" + std::to_string(n) + " s=" + std::to_string(s);
}

inline SuiteResult verify_partitions(int max_m) {
  SuiteResult suite{"partitions", 0, std::nullopt};
  for (int m = 0; m <= max_m && suite.passed(); ++m) {
    std::vector<long long> by_blocks(static_cast<std::size_t>(m) + 1, 0);
    long long total = 0;
    RestrictedGrowthString rgs(m);
    do {
      ++by_blocks[rgs.block_count()];
      ++total;
    } while (rgs.advance());
    if (ExactInt(std::to_string(total)) != bell(m)) {
      suite.counterexample = "bell(" + std::to_string(m) + ") = " +
                             bell(m).get_str() + " but enumerated " +
                             std::to_string(total);
    }
    for (int j = 0; j <= m && suite.passed(); ++j) {
      const ExactInt table = stirling2(m, j);
      if (ExactInt(std::to_string(by_blocks[j])) != table ||
          stirling2_alternating(m, j) != table) {
        suite.counterexample = "stirling2(" + std::to_string(m) + ", " +
                               std::to_string(j) + ") disagrees";
      }
      ++suite.checks;
    }
    ++suite.checks;
  }
  return suite;
}

// Closed form vs harmonic representation, and expected profit at the
// equilibrium profile against both.
inline SuiteResult verify_representation(int max_players) {
  SuiteResult suite{"representation", 0, std::nullopt};
  const MarketParams unit;
  for (int n = 1; n <= max_players && suite.passed(); ++n) {
    for (int s = 1; s <= n && suite.passed(); ++s) {
      const BeliefDistribution b = uniform_belief(n, s);
      const ExactRational harmonic = worth_harmonic(b, unit);
      const ExactRational profit = expected_profit(unit, b, equilibrium(unit, b));
      if (worth_direct(n, s, unit) != harmonic || profit != harmonic) {
        suite.counterexample = "worth mismatch at " + where(n, s);
      }
      ++suite.checks;
    }
  }
  return suite;
}

inline SuiteResult verify_harmonic_identity(int max_players) {
  SuiteResult suite{"harmonic-identity", 0, std::nullopt};
  for (int n = 1; n <= max_players && suite.passed(); ++n) {
    for (int s = 1; s <= n && suite.passed(); ++s) {
      for (const auto& b : {uniform_belief(n, s), gamma_belief(n, s)}) {
        const HarmonicSummary summary = probabilistic_harmonic(b);
        if (summary.F != 1 - summary.h) {
          suite.counterexample = "F != 1 - h at " + where(n, s);
        }
        ++suite.checks;
      }
    }
  }
  return suite;
}

inline bool close_relative(double expected, double actual, double tol) {
  return std::abs(expected - actual) <= tol * std::max(std::abs(expected), 1e-300);
}

inline SuiteResult verify_best_response(int max_outsiders) {
  SuiteResult suite{"best-response", 0, std::nullopt};
  const MarketParams unit;
  const int n = kTable1Players;
  for (int m = 0; m <= max_outsiders && suite.passed(); ++m) {
    const int s = n - m;
    for (const auto& b : {uniform_belief(n, s), gamma_belief(n, s)}) {
      const EquilibriumProfile exact = equilibrium(unit, b);
      const oracle::BestResponseResult numeric = oracle::best_response_iteration(b);
      bool ok = numeric.converged &&
                close_relative(to_double(exact.q_s()), numeric.q_s, kBestResponseRelTol);
      for (int j = 1; j <= m && ok; ++j) {
        ok = close_relative(to_double(exact.q_structure(j)),
                            numeric.q_by_structure[j - 1], kBestResponseRelTol);
      }
      if (!ok) suite.counterexample = "best response mismatch at " + where(n, s);
      ++suite.checks;
    }
  }
  return suite;
}

}  // namespace detail

inline std::vector<SuiteResult> run_verification(int max_m) {
  if (max_m < 0) throw UsageError("verify requires --max-m >= 0");
  if (max_m > kMaxEnumeration) {
    throw SizeLimitError("verify limited to --max-m <= " +
                         std::to_string(kMaxEnumeration));
  }
  return {detail::verify_partitions(max_m),
          detail::verify_representation(max_m + 1),
          detail::verify_harmonic_identity(max_m + 1),
          detail::verify_best_response(std::min(max_m, 4))};
}

inline CommandResult cmd_verify(int max_m, const GlobalOptions& /*options*/) {
  const auto suites = run_verification(max_m);
  CommandResult result;
  auto& record = result.record;
  record.command = "verify";
  record.add_input("max_m", std::to_string(max_m));
  record.columns = {{"suite"}, {"status"}, {"checks"}, {"counterexample"}};
  bool all = true;
  for (const auto& suite : suites) {
    all = all && suite.passed();
    record.add_row({suite.name, std::string(suite.passed() ? "pass" : "fail"),
                    suite.checks, suite.counterexample.value_or("")});
  }
  record.add_summary("all_passed", all);
  result.exit_code = all ? kExitOk : kExitCheckFailed;
  return result;
}

}  // namespace pfg::cli

#endif  // PFG_COMMANDS_HPP
