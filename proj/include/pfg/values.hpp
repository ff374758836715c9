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

#ifndef PFG_VALUES_HPP
#define PFG_VALUES_HPP

// Coalition worths.
//
// worth_harmonic() is the canonical route, valid for any belief:
//   v(S) = h^2 / (1 + h)^2 * (a - c)^2.
// worth_direct() evaluates the closed form for uniform beliefs straight from
// Stirling and Bell numbers and shares no code with the harmonic route.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfg/beliefs.hpp"
#include "pfg/combinatorics.hpp"
#include "pfg/cournot.hpp"
#include "pfg/errors.hpp"
#include "pfg/numeric.hpp"

namespace pfg {

// (a-c)^2 / B_m * (1 - F) / (2 - F)^2 * sum_{j=0}^{m} {m brace j} / (j + 1),
// m = n - s, with F = sum_j j {m brace j} / ((j + 1) B_m).
inline ExactRational worth_direct(int n, int s, const MarketParams& params) {
  check_coalition_size(n, s);
  const int m = n - s;
  const ExactInt total = bell(m);
  ExactRational stirling_sum = 0;
  ExactRational weighted = 0;
  for (int j = 0; j <= m; ++j) {
    const ExactInt count = stirling2(m, j);
    if (count == 0) continue;
    stirling_sum += make_ratio(count, j + 1);
    weighted += make_ratio(count * j, j + 1);
  }
  const ExactRational F = weighted / total;
  const ExactRational two_minus_f = 2 - F;
  return params.margin_squared() / total * (1 - F) /
         (two_minus_f * two_minus_f) * stirling_sum;
}

inline ExactRational worth_from_harmonic(const ExactRational& h,
                                         const MarketParams& params) {
  const ExactRational ratio = h / (1 + h);
  return ratio * ratio * params.margin_squared();
}

inline ExactRational worth_harmonic(const BeliefDistribution& b,
                                    const MarketParams& params) {
  return worth_from_harmonic(harmonic_number(b), params);
}

// (a - c)^2 / (2 + n - s)^2.
inline ExactRational gamma_worth(int n, int s, const MarketParams& params) {
  check_coalition_size(n, s);
  const long d = 2L + n - s;
  return params.margin_squared() / ExactRational(d * d);
}

// Symmetric game on n players: worth depends only on coalition size.
class SymmetricGame {
 public:
  // nu[s] = v(s) / (a - c)^2 for s = 0..n.
  SymmetricGame(int n, std::vector<ExactRational> nu, std::string family_id,
                MarketParams params)
      : n_(n),
        nu_(std::move(nu)),
        family_id_(std::move(family_id)),
        params_(std::move(params)) {
    if (n < 1) throw DomainError("a game needs at least one player");
    if (nu_.size() != static_cast<std::size_t>(n) + 1) {
      throw ValidationError("normalized worth vector must have n + 1 entries");
    }
    if (sgn(nu_[0]) != 0) throw ValidationError("empty coalition must be worth 0", 0);
  }

  int n() const noexcept { return n_; }
  const std::string& family_id() const noexcept { return family_id_; }
  const MarketParams& params() const noexcept { return params_; }

  std::span<const ExactRational> nu() const noexcept { return nu_; }
  const ExactRational& nu(int s) const {
    if (s < 0 || s > n_) throw DomainError("coalition size out of range");
    return nu_[static_cast<std::size_t>(s)];
  }

  // Worth in profit units.
  ExactRational worth(int s) const { return nu(s) * params_.margin_squared(); }

  bool strictly_increasing() const {
    for (int s = 1; s <= n_; ++s) {
      if (nu_[s] <= nu_[s - 1]) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<ExactRational> nu_;
  std::string family_id_;
  MarketParams params_;
};

inline SymmetricGame build_game(int n, const BeliefFamily& family,
                                const MarketParams& params = {}) {
  if (n < 2) throw DomainError("build_game requires n >= 2");
  std::vector<ExactRational> nu(static_cast<std::size_t>(n) + 1);
  nu[0] = 0;
  const MarketParams unit;
  for (int s = 1; s <= n; ++s) nu[s] = worth_harmonic(family(n, s), unit);
  return SymmetricGame(n, std::move(nu), family.id(), params);
}

// nu_n[s] == nu_{n+k}[s+k] for every 1 <= s <= n.
inline bool shift_check(const SymmetricGame& game_n, const SymmetricGame& game_nk,
                        int k) {
  if (k < 1) throw UsageError("shift_check requires k >= 1");
  if (game_nk.n() != game_n.n() + k) {
    throw UsageError("shift_check: second game must have n + k players");
  }
  if (game_n.family_id() != game_nk.family_id()) {
    throw UsageError("shift_check: games use different belief families");
  }
  if (!(game_n.params() == game_nk.params())) {
    throw UsageError("shift_check: games use different market parameters");
  }
  for (int s = 1; s <= game_n.n(); ++s) {
    if (game_n.nu(s) != game_nk.nu(s + k)) return false;
  }
  return true;
}

}  // namespace pfg

#endif  // PFG_VALUES_HPP
