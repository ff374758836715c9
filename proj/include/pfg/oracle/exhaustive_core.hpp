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

#ifndef PFG_ORACLE_EXHAUSTIVE_CORE_HPP
#define PFG_ORACLE_EXHAUSTIVE_CORE_HPP

// Core membership by checking every one of the 2^n - 1 coalitions.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pfg/core.hpp"
#include "pfg/errors.hpp"
#include "pfg/values.hpp"

namespace pfg::oracle {

inline constexpr int kMaxExhaustivePlayers = 16;

// Assumes x is efficient; only the blocking conditions are checked.
inline bool allocation_in_core_exhaustive(const SymmetricGame& game,
                                          const Allocation& x) {
  const int n = game.n();
  if (n > kMaxExhaustivePlayers) {
    throw SizeLimitError("exhaustive core check limited to 16 players");
  }
  if (x.payoffs.size() != static_cast<std::size_t>(n)) {
    throw AllocationLengthError("allocation length mismatch");
  }
  std::vector<ExactRational> worth(static_cast<std::size_t>(n) + 1);
  for (int s = 0; s <= n; ++s) worth[s] = game.worth(s);

  const std::uint32_t full = (std::uint32_t{1} << n);
  std::vector<ExactRational> coalition_sum(full);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::uint32_t rest = mask & (mask - 1);
    coalition_sum[mask] = coalition_sum[rest] + x.payoffs[std::countr_zero(mask)];
    if (coalition_sum[mask] < worth[std::popcount(mask)]) return false;
  }
  return true;
}

}  // namespace pfg::oracle

#endif  // PFG_ORACLE_EXHAUSTIVE_CORE_HPP
