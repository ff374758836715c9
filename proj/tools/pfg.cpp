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

// pfg: coalition worths and core analysis for Cournot games in which a
// deviating coalition holds beliefs about how outsiders will organize.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pfg/commands.hpp"
#include "pfg/errors.hpp"

namespace {

int emit(const pfg::cli::CommandResult& result,
         const pfg::cli::GlobalOptions& options) {
  std::cout << pfg::report::render(result.record, options.format,
                                   options.precision);
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalition worths and core analysis for Cournot oligopolies "
               "with probabilistic beliefs over outsider coalition structures"};
  app.require_subcommand(1);

  pfg::cli::GlobalOptions options;
  std::string format = "table";
  app.add_option("--format", format, "Output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--precision", options.precision, "Decimal digits in output")
      ->check(CLI::Range(0u, 60u));
  app.add_option("--a", options.a, "Demand intercept (rational literal)");
  app.add_option("--c", options.c, "Marginal cost (rational literal)");

  int n = 0;
  std::string belief = "uniform";

  auto* table = app.add_subcommand("table", "Worth of every coalition size");
  table->fallthrough();
  bool table2 = false;
  table->add_option("--n", n, "Number of players");
  table->add_option("--belief", belief, "uniform, gamma or file:<path>");
  table->add_flag("--table2", table2,
                  "Singleton worths for n = 3..10 with the shift check");

  auto* scan = app.add_subcommand("scan", "Core emptiness over a range of n");
  scan->fallthrough();
  int n_min = 2;
  int n_max = 2;
  scan->add_option("--n-min", n_min, "Smallest n")->required();
  scan->add_option("--n-max", n_max, "Largest n (at most 200)")->required();
  scan->add_option("--belief", belief, "uniform, gamma or file:<path>");

  auto* compare = app.add_subcommand(
      "compare", "Harmonic dominance of two belief families and core transfer");
  compare->fallthrough();
  std::string belief_g = "uniform";
  std::string belief_z = "gamma";
  compare->add_option("--n", n, "Number of players")->required();
  compare->add_option("--g", belief_g, "Dominating family candidate");
  compare->add_option("--z", belief_z, "Dominated family candidate");

  auto* check = app.add_subcommand("check-allocation",
                                   "Test whether a payoff vector lies in the core");
  check->fallthrough();
  std::string payoffs_path;
  check->add_option("--n", n, "Number of players")->required();
  check->add_option("--belief", belief, "uniform, gamma or file:<path>");
  check->add_option("--payoffs", payoffs_path,
                    "JSON array of rational payoff strings")
      ->required();

  auto* verify = app.add_subcommand("verify", "Run the oracle cross-checks");
  verify->fallthrough();
  int max_m = 10;
  verify->add_option("--max-m", max_m, "Largest set size to enumerate (<= 14)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pfg::cli::kExitUsage;
  }

  try {
    options.format = pfg::report::parse_format(format);
    if (*table) {
      if (!table2 && n == 0) throw pfg::UsageError("table requires --n or --table2");
      return emit(pfg::cli::cmd_table(n, belief, table2, options), options);
    }
    if (*scan) return emit(pfg::cli::cmd_scan(n_min, n_max, belief, options), options);
    if (*compare) {
      return emit(pfg::cli::cmd_compare(n, belief_g, belief_z, options), options);
    }
    if (*check) {
      return emit(pfg::cli::cmd_check_allocation(n, belief, payoffs_path, options),
                  options);
    }
    if (*verify) return emit(pfg::cli::cmd_verify(max_m, options), options);
  } catch (const pfg::EfficiencyError& e) {
    std::cerr << "efficiency error: " << e.what() << "\n";
    return pfg::cli::kExitUsage;
  } catch (const pfg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return pfg::cli::kExitUsage;
  } catch (const pfg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pfg::cli::kExitUsage;
  }
  return pfg::cli::kExitUsage;
}
