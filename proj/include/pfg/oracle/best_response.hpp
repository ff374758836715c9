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

#ifndef PFG_ORACLE_BEST_RESPONSE_HPP
#define PFG_ORACLE_BEST_RESPONSE_HPP

// Numeric cross-check of the closed-form Cournot equilibrium.
//
// Works in doubles with a - c = 1 and never uses the F functional: each
// player best-responds to current outputs, S against its expected outsider
// output and each outsider coalition against S and its j - 1 peers. The
// damped map q <- (q + BR(q)) / 2 is iterated from zero output.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "pfg/beliefs.hpp"
#include "pfg/numeric.hpp"

namespace pfg::oracle {

struct BestResponseResult {
  double q_s = 0.0;
  std::vector<double> q_by_structure;  // element j - 1 holds q^j
  long iterations = 0;
  bool converged = false;
};

inline BestResponseResult best_response_iteration(const BeliefDistribution& b,
                                                  double tolerance = 1e-12,
                                                  long max_iterations = 10'000'000) {
  const int m = b.outsiders();
  std::vector<double> probs;
  for (const auto& p : b.probs()) probs.push_back(to_double(p));

  BestResponseResult r;
  r.q_by_structure.assign(static_cast<std::size_t>(m), 0.0);
  std::vector<double> next(static_cast<std::size_t>(m));
  for (r.iterations = 0; r.iterations < max_iterations; ++r.iterations) {
    double expected_outsiders = 0.0;
    for (int j = 1; j <= m; ++j) {
      expected_outsiders += probs[j] * j * r.q_by_structure[j - 1];
    }
    const double br_s = std::max(0.0, (1.0 - expected_outsiders) / 2.0);
    const double next_s = 0.5 * (r.q_s + br_s);
    double change = std::abs(next_s - r.q_s);
    for (int j = 1; j <= m; ++j) {
      const double q = r.q_by_structure[j - 1];
      const double br = std::max(0.0, (1.0 - r.q_s - (j - 1) * q) / 2.0);
      next[j - 1] = 0.5 * (q + br);
      change = std::max(change, std::abs(next[j - 1] - q));
    }
    r.q_s = next_s;
    r.q_by_structure.swap(next);
    if (change < tolerance) {
      r.converged = true;
      ++r.iterations;
      break;
    }
  }
  return r;
}

// Expected profit of S with a - c = 1, in doubles.
inline double expected_profit_double(const std::vector<double>& probs, double q_s,
                                     const std::vector<double>& q_by_structure) {
  double total = 0.0;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    const double outsiders = j == 0 ? 0.0 : static_cast<double>(j) * q_by_structure[j - 1];
    total += probs[j] * (1.0 - q_s - outsiders) * q_s;
  }
  return total;
}

// Profit of one outsider coalition producing `own` while S produces q_s and
// its j - 1 peers produce `peer` each.
inline double outsider_profit_double(int j, double q_s, double peer, double own) {
  return (1.0 - q_s - (j - 1) * peer - own) * own;
}

}  // namespace pfg::oracle

#endif  // PFG_ORACLE_BEST_RESPONSE_HPP
