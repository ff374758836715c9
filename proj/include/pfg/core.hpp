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

#ifndef PFG_CORE_HPP
#define PFG_CORE_HPP

// Core of a symmetric game.
//
// For identical players the core is non-empty iff v(N)/n >= v(s)/s for every
// coalition size s (Rajan's per-capita condition); the equal split is then a
// core allocation. Ties count as non-empty.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pfg/beliefs.hpp"
#include "pfg/errors.hpp"
#include "pfg/numeric.hpp"
#include "pfg/values.hpp"

namespace pfg {

struct CoreVerdict {
  int n = 0;
  bool nonempty = false;
  std::vector<int> violating_sizes;    // increasing
  std::vector<ExactRational> margins;  // margins[s - 1] = nu[n]/n - nu[s]/s

  const ExactRational& margin(int s) const {
    return margins.at(static_cast<std::size_t>(s) - 1);
  }
};

inline CoreVerdict rajan_core_nonempty(const SymmetricGame& game) {
  CoreVerdict verdict;
  verdict.n = game.n();
  verdict.margins.reserve(static_cast<std::size_t>(game.n()));
  const ExactRational per_capita = game.nu(game.n()) / game.n();
  for (int s = 1; s <= game.n(); ++s) {
    ExactRational margin = per_capita - game.nu(s) / s;
    if (sgn(margin) < 0) verdict.violating_sizes.push_back(s);
    verdict.margins.push_back(std::move(margin));
  }
  verdict.nonempty = verdict.violating_sizes.empty();
  return verdict;
}

inline constexpr int kMaxScanPlayers = 200;

// One verdict per n in [n_min, n_max], evaluated on up to `threads` workers
// (0 picks the hardware concurrency). Results are in increasing n.
inline std::vector<CoreVerdict> threshold_scan(const BeliefFamily& family,
                                               int n_min, int n_max,
                                               unsigned threads = 0) {
  if (n_min < 2 || n_min > n_max) {
    throw DomainError("threshold_scan requires 2 <= n_min <= n_max");
  }
  if (n_max > kMaxScanPlayers) {
    throw SizeLimitError("threshold_scan limited to n_max <= " +
                         std::to_string(kMaxScanPlayers));
  }
  const std::size_t count = static_cast<std::size_t>(n_max - n_min) + 1;
  std::vector<std::optional<CoreVerdict>> slots(count);
  std::vector<std::exception_ptr> failures(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  shared_stirling_table();
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = rajan_core_nonempty(build_game(n_min + static_cast<int>(i), family));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  std::vector<CoreVerdict> verdicts;
  verdicts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    verdicts.push_back(std::move(*slots[i]));
  }
  return verdicts;
}

// s n^2 + (4s - 4 - 2s^2) n + s (4 + s^2 - 4s), which equals
// s (n - s + 2)^2 - 4n.
inline ExactInt gamma_polynomial(int n, int s) {
  check_coalition_size(n, s);
  const ExactInt nn(n);
  const ExactInt ss(s);
  return ss * nn * nn + (4 * ss - 4 - 2 * ss * ss) * nn +
         ss * (4 + ss * ss - 4 * ss);
}

// v_gamma(N)/n >= v_gamma(s)/s, decided by the polynomial and by the
// per-capita worths. Throws std::logic_error if the two disagree.
inline bool gamma_inequality_check(int n, int s) {
  const bool by_polynomial = sgn(gamma_polynomial(n, s)) >= 0;
  const MarketParams unit;
  const bool by_worth =
      gamma_worth(n, n, unit) / n >= gamma_worth(n, s, unit) / s;
  if (by_polynomial != by_worth) {
    throw std::logic_error("gamma inequality forms disagree at n = " +
                           std::to_string(n) + ", s = " + std::to_string(s));
  }
  return by_polynomial;
}

struct Allocation {
  std::vector<ExactRational> payoffs;  // profit units, one per player
};

struct AllocationVerdict {
  bool in_core = false;
  // Smallest coalition size that can block, with the amount it is short by.
  std::optional<int> violating_size;
  ExactRational deficit = 0;
};

// In a symmetric game the hardest coalition of size s to satisfy is the s
// lowest-paid players, so comparing sorted prefix sums against v(s) decides
// membership.
inline AllocationVerdict allocation_in_core(const SymmetricGame& game,
                                            const Allocation& x) {
  if (x.payoffs.size() != static_cast<std::size_t>(game.n())) {
    throw AllocationLengthError(
        "allocation has " + std::to_string(x.payoffs.size()) +
        " payoffs for a game with " + std::to_string(game.n()) + " players");
  }
  ExactRational total = 0;
  for (const auto& p : x.payoffs) total += p;
  if (total != game.worth(game.n())) {
    throw EfficiencyError("payoffs sum to " + to_fraction_string(total) +
                          ", grand coalition is worth " +
                          to_fraction_string(game.worth(game.n())));
  }
  std::vector<ExactRational> sorted = x.payoffs;
  std::sort(sorted.begin(), sorted.end());
  AllocationVerdict verdict;
  ExactRational prefix = 0;
  for (int s = 1; s <= game.n(); ++s) {
    prefix += sorted[static_cast<std::size_t>(s) - 1];
    const ExactRational worth = game.worth(s);
    if (prefix < worth) {
      verdict.violating_size = s;
      verdict.deficit = worth - prefix;
      return verdict;
    }
  }
  verdict.in_core = true;
  return verdict;
}

inline Allocation equal_split(const SymmetricGame& game) {
  return Allocation{std::vector<ExactRational>(
      static_cast<std::size_t>(game.n()), game.worth(game.n()) / game.n())};
}

// Sufficient condition for the uniform-belief core to sit inside the gamma
// core: v(S) > v_gamma(S) whenever the outsiders can form more than one
// structure (n - s >= 2), and v(S) = v_gamma(S) for n - s <= 1, where the two
// beliefs coincide.
inline bool core_inclusion_check(int n) {
  if (n < 2) throw DomainError("core_inclusion_check requires n >= 2");
  const MarketParams unit;
  for (int s = 1; s <= n; ++s) {
    const ExactRational uniform = worth_harmonic(uniform_belief(n, s), unit);
    const ExactRational gamma = gamma_worth(n, s, unit);
    const bool holds = n - s >= 2 ? uniform > gamma : uniform == gamma;
    if (!holds) return false;
  }
  return true;
}

struct TransferVerdict {
  bool dominates = false;
  CoreVerdict g_core;
  CoreVerdict z_core;
  // false only if g dominates z, g's core is non-empty and z's is empty.
  bool consistent = true;
};

inline TransferVerdict corollary1_transfer(const BeliefFamily& g,
                                           const BeliefFamily& z, int n) {
  TransferVerdict verdict;
  verdict.dominates = harmonic_dominates(g, z, n);
  verdict.g_core = rajan_core_nonempty(build_game(n, g));
  verdict.z_core = rajan_core_nonempty(build_game(n, z));
  verdict.consistent =
      !(verdict.dominates && verdict.g_core.nonempty) || verdict.z_core.nonempty;
  return verdict;
}

}  // namespace pfg

#endif  // PFG_CORE_HPP
