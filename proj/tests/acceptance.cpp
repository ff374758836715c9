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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and time limits are fixed constants below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pfg/commands.hpp"
#include "pfg/oracle/best_response.hpp"
#include "pfg/oracle/exhaustive_core.hpp"
#include "test_support.hpp"

namespace {

using pfg::ExactRational;
using ojson = nlohmann::ordered_json;

constexpr double kTableTolerance = 5e-5;
constexpr double kBestResponseTolerance = 1e-10;

const std::vector<double> kTable1 = {0.0226, 0.0252, 0.0285, 0.0326,
                                     0.0378, 0.0446, 0.0539, 0.0672,
                                     0.0865, 0.1111, 0.25};
const std::vector<double> kTable2 = {0.0865, 0.0672, 0.0539, 0.0446,
                                     0.0378, 0.0326, 0.0285, 0.0252};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // <= 0: no limit
  std::function<Outcome()> run;
};

ojson json_of(const pfg::cli::CommandResult& r, unsigned precision) {
  return ojson::parse(pfg::report::render_json(r.record, precision));
}

double decimal_field(const ojson& cell) {
  return std::stod(cell["decimal"].get<std::string>());
}

Outcome table1() {
  Outcome out;
  pfg::cli::GlobalOptions options;
  options.precision = 4;
  const auto rows = json_of(pfg::cli::cmd_table(11, "uniform", false, options), 4)
                        ["results"]["rows"];
  if (rows.size() != kTable1.size()) {
    out.fail("expected 11 rows");
    return out;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double shown = decimal_field(rows[i]["nu"]);
    if (std::abs(shown - kTable1[i]) > kTableTolerance) {
      out.fail("s=" + std::to_string(i + 1) + " shows " + std::to_string(shown));
    }
  }
  if (out.pass) out.detail = "11/11 values within 5e-5";
  return out;
}

Outcome table2() {
  Outcome out;
  const auto doc = json_of(pfg::cli::cmd_table(0, "uniform", true, {}), 4);
  const auto rows = doc["results"]["rows"];
  if (rows.size() != kTable2.size()) {
    out.fail("expected 8 rows");
    return out;
  }
  const pfg::SymmetricGame eleven = pfg::build_game(11, pfg::uniform_family());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = static_cast<int>(i) + 3;
    const double shown = decimal_field(rows[i]["nu_singleton"]);
    if (std::abs(shown - kTable2[i]) > kTableTolerance) {
      out.fail("n=" + std::to_string(n) + " shows " + std::to_string(shown));
    }
    // v^n(1) = v^11(1 + (11 - n)).
    const ExactRational exact =
        pfg::parse_rational(rows[i]["nu_singleton"]["exact"].get<std::string>());
    if (exact != eleven.nu(1 + 11 - n)) {
      out.fail("n=" + std::to_string(n) + " differs from the shifted n=11 value");
    }
  }
  if (out.pass) out.detail = "8/8 values within 5e-5, all equal to shifted n=11 worths";
  return out;
}

Outcome threshold() {
  Outcome out;
  const auto rows = json_of(pfg::cli::cmd_scan(2, 200, "uniform", {}), 4)["results"]["rows"];
  if (rows.size() != 199) {
    out.fail("expected 199 verdicts");
    return out;
  }
  int empty = 0;
  for (const auto& row : rows) {
    const int n = row["n"].get<int>();
    const bool nonempty = row["core"] == "nonempty";
    const bool expected = n == 2 || n >= 11;
    if (nonempty != expected) out.fail("wrong verdict at n=" + std::to_string(n));
    empty += !nonempty;
  }
  if (out.pass) out.detail = "empty exactly for n=3..10 (" + std::to_string(empty) + " values)";
  return out;
}

Outcome gamma_core() {
  Outcome out;
  const pfg::MarketParams unit;
  long checks = 0;
  for (int n = 1; n <= 200; ++n) {
    const ExactRational grand = pfg::gamma_worth(n, n, unit) / n;
    for (int s = 1; s <= n; ++s) {
      const bool polynomial = sgn(pfg::gamma_polynomial(n, s)) >= 0;
      const bool per_capita = grand >= pfg::gamma_worth(n, s, unit) / s;
      if (polynomial != per_capita || !pfg::gamma_inequality_check(n, s)) {
        out.fail("failure at n=" + std::to_string(n) + " s=" + std::to_string(s));
      }
      ++checks;
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " (n, s) pairs, both forms true";
  return out;
}

Outcome core_inclusion() {
  Outcome out;
  const pfg::MarketParams unit;
  long strict = 0;
  long equal = 0;
  for (int n = 2; n <= 50; ++n) {
    for (int s = 1; s < n; ++s) {
      const ExactRational uniform = pfg::worth_harmonic(pfg::uniform_belief(n, s), unit);
      const ExactRational gamma = pfg::gamma_worth(n, s, unit);
      if (n - s >= 2) {
        if (!(uniform > gamma)) out.fail("not strict at n=" + std::to_string(n));
        ++strict;
      } else {
        if (uniform != gamma) out.fail("n-s=1 not equal at n=" + std::to_string(n));
        ++equal;
      }
    }
    if (!pfg::core_inclusion_check(n)) out.fail("core_inclusion_check(" + std::to_string(n) + ")");
  }
  if (out.pass) {
    out.detail = std::to_string(strict) + " strict, " + std::to_string(equal) +
                 " equal at n-s=1";
  }
  return out;
}

Outcome representation() {
  Outcome out;
  const pfg::MarketParams unit;
  long checks = 0;
  for (int n = 1; n <= 40; ++n) {
    for (int s = 1; s <= n; ++s) {
      if (pfg::worth_direct(n, s, unit) !=
          pfg::worth_harmonic(pfg::uniform_belief(n, s), unit)) {
        out.fail("mismatch at n=" + std::to_string(n) + " s=" + std::to_string(s));
      }
      ++checks;
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " exact equalities";
  return out;
}

Outcome harmonic_identity() {
  Outcome out;
  std::mt19937 rng(pfg::testing::kSeed);
  long checks = 0;
  auto check = [&](const pfg::BeliefDistribution& b) {
    const auto summary = pfg::probabilistic_harmonic(b);
    if (summary.F != 1 - summary.h) {
      out.fail("F != 1 - h at n=" + std::to_string(b.n()) + " s=" + std::to_string(b.s()));
    }
    ++checks;
  };
  for (int n = 1; n <= 30; ++n) {
    for (int s = 1; s <= n; ++s) {
      check(pfg::uniform_belief(n, s));
      check(pfg::gamma_belief(n, s));
    }
    for (int trial = 0; trial < 100; ++trial) {
      const int s = std::uniform_int_distribution<int>(1, n)(rng);
      check(pfg::custom_belief(n, s, pfg::testing::random_weights(rng, n, s)));
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " beliefs";
  return out;
}

bool close_relative(double expected, double actual) {
  return std::abs(expected - actual) <= kBestResponseTolerance * std::abs(expected);
}

Outcome oracle_equivalence() {
  Outcome out;
  for (int m = 0; m <= 12; ++m) {
    std::vector<long long> by_blocks(static_cast<std::size_t>(m) + 1, 0);
    long long total = 0;
    pfg::for_each_restricted_growth_string(m, [&](std::span<const int> rgs) {
      int blocks = 0;
      for (int d : rgs) blocks = std::max(blocks, d + 1);
      ++by_blocks[blocks];
      ++total;
    });
    if (pfg::ExactInt(std::to_string(total)) != pfg::bell(m)) {
      out.fail("bell mismatch at m=" + std::to_string(m));
    }
    for (int j = 0; j <= m; ++j) {
      if (pfg::ExactInt(std::to_string(by_blocks[j])) != pfg::stirling2(m, j)) {
        out.fail("stirling mismatch at m=" + std::to_string(m));
      }
    }
  }
  const pfg::MarketParams unit;
  long equilibria = 0;
  for (int n = 1; n <= 20; ++n) {
    for (int s = std::max(1, n - 4); s <= n; ++s) {
      for (const auto& b : {pfg::uniform_belief(n, s), pfg::gamma_belief(n, s)}) {
        const auto exact = pfg::equilibrium(unit, b);
        const auto numeric = pfg::oracle::best_response_iteration(b);
        bool ok = numeric.converged && close_relative(pfg::to_double(exact.q_s()), numeric.q_s);
        for (int j = 1; j <= b.outsiders(); ++j) {
          ok = ok && close_relative(pfg::to_double(exact.q_structure(j)),
                                    numeric.q_by_structure[j - 1]);
        }
        if (!ok) out.fail("best response mismatch at n=" + std::to_string(n));
        ++equilibria;
      }
    }
  }
  if (out.pass) {
    out.detail = "partitions m<=12 exact; " + std::to_string(equilibria) +
                 " equilibria within 1e-10";
  }
  return out;
}

Outcome monotonicity_and_shift() {
  Outcome out;
  for (int n = 2; n <= 40; ++n) {
    if (!pfg::build_game(n, pfg::uniform_family()).strictly_increasing()) {
      out.fail("not increasing at n=" + std::to_string(n));
    }
  }
  for (int n = 2; n <= 20; ++n) {
    const auto base = pfg::build_game(n, pfg::uniform_family());
    for (int k = 1; k <= 10; ++k) {
      if (!pfg::shift_check(base, pfg::build_game(n + k, pfg::uniform_family()), k)) {
        out.fail("shift fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  if (out.pass) out.detail = "increasing for n<=40, shift exact for n<=20, k<=10";
  return out;
}

// Efficient allocations scattered around the equal split; the spread varies
// per trial so both core members and blocked allocations occur.
pfg::Allocation random_allocation(std::mt19937& rng, const pfg::SymmetricGame& game) {
  const int n = game.n();
  pfg::Allocation x = pfg::equal_split(game);
  const int spread = std::uniform_int_distribution<int>(50, 4000)(rng);
  for (int i = 0; i + 1 < n; ++i) {
    const ExactRational delta =
        (pfg::testing::random_rational(rng, 40, 40) - 1) / (spread * n);
    x.payoffs[i] += delta;
    x.payoffs[n - 1] -= delta;
  }
  std::shuffle(x.payoffs.begin(), x.payoffs.end(), rng);
  return x;
}

Outcome allocation_checker() {
  Outcome out;
  std::mt19937 rng(pfg::testing::kSeed + 7);
  long in_core = 0;
  long blocked = 0;
  for (int n = 2; n <= 14; ++n) {
    const auto uniform = pfg::build_game(n, pfg::uniform_family());
    const auto gamma = pfg::build_game(n, pfg::gamma_family());
    for (int trial = 0; trial < 200; ++trial) {
      const auto& game = trial % 2 == 0 ? uniform : gamma;
      const pfg::Allocation x = random_allocation(rng, game);
      const bool fast = pfg::allocation_in_core(game, x).in_core;
      if (fast != pfg::oracle::allocation_in_core_exhaustive(game, x)) {
        out.fail("disagreement at n=" + std::to_string(n));
      }
      (fast ? in_core : blocked)++;
    }
  }
  if (out.pass) {
    out.detail = "2600 allocations agree (" + std::to_string(in_core) + " in core, " +
                 std::to_string(blocked) + " blocked)";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Table 1 reproduction", 1.0, table1},
      {2, "Table 2 reproduction and shift", 1.0, table2},
      {3, "Core threshold over n = 2..200", 30.0, threshold},
      {4, "Gamma-core inequality, n <= 200", 30.0, gamma_core},
      {5, "Core inclusion, n <= 50", 10.0, core_inclusion},
      {6, "Direct vs harmonic worth, n <= 40", 0.0, representation},
      {7, "F = 1 - h identity, n <= 30", 0.0, harmonic_identity},
      {8, "Partition and best-response oracles", 0.0, oracle_equivalence},
      {9, "Monotonicity and shift", 0.0, monotonicity_and_shift},
      {10, "Prefix-sum vs exhaustive core check, n <= 14", 0.0, allocation_checker},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      outcome.fail("runtime " + std::to_string(elapsed) + " s exceeds limit");
    }
    failures += !outcome.pass;
    std::printf("[%s] AC%-2d %-46s %7.3f s  %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), elapsed, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
