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

#ifndef PFG_COURNOT_HPP
#define PFG_COURNOT_HPP

// Linear Cournot market: inverse demand P = max(a - Q, 0), unit cost c.
//
// The deviant coalition S maximizes its expected profit over the outsider
// structures it believes possible; inside a structure with j coalitions every
// outsider coalition best-responds to S and to the other j - 1. With
// F = f_functional(b):
//
//   q_s = (1 - F) / (2 - F) * (a - c)
//   q^j = (a - c) / ((j + 1) (2 - F))
//
// Since F < 1 the price stays strictly above c at equilibrium, so the kinked
// branch of demand is never reached.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfg/beliefs.hpp"
#include "pfg/errors.hpp"
#include "pfg/numeric.hpp"

namespace pfg {

class MarketParams {
 public:
  // Default market a = 2, c = 1, so a - c = 1.
  MarketParams() : a_(2), c_(1) {}

  MarketParams(ExactRational a, ExactRational c)
      : a_(std::move(a)), c_(std::move(c)) {
    if (sgn(c_) < 0 || c_ >= a_) {
      throw DomainError("market parameters must satisfy 0 <= c < a, got a = " +
                        to_fraction_string(a_) +
                        ", c = " + to_fraction_string(c_));
    }
  }

  const ExactRational& a() const noexcept { return a_; }
  const ExactRational& c() const noexcept { return c_; }
  ExactRational margin() const { return a_ - c_; }
  ExactRational margin_squared() const {
    ExactRational m = margin();
    return m * m;
  }

  bool operator==(const MarketParams&) const = default;

 private:
  ExactRational a_;
  ExactRational c_;
};

class EquilibriumProfile {
 public:
  EquilibriumProfile(ExactRational q_s, std::vector<ExactRational> per_structure)
      : q_s_(std::move(q_s)), per_structure_(std::move(per_structure)) {}

  const ExactRational& q_s() const noexcept { return q_s_; }

  // Output of each outsider coalition under a j-coalition structure, j >= 1.
  const ExactRational& q_structure(int j) const {
    if (j < 1 || static_cast<std::size_t>(j) > per_structure_.size()) {
      throw DomainError("no outsider structure with " + std::to_string(j) +
                        " coalitions");
    }
    return per_structure_[static_cast<std::size_t>(j) - 1];
  }

  // Element j - 1 holds q^j.
  std::span<const ExactRational> q_by_structure() const noexcept {
    return per_structure_;
  }

 private:
  ExactRational q_s_;
  std::vector<ExactRational> per_structure_;
};

inline EquilibriumProfile equilibrium(const MarketParams& params,
                                      const BeliefDistribution& b) {
  const ExactRational F = f_functional(b);
  const ExactRational two_minus_f = 2 - F;
  const ExactRational margin = params.margin();
  ExactRational q_s = (1 - F) / two_minus_f * margin;
  std::vector<ExactRational> per_structure;
  per_structure.reserve(static_cast<std::size_t>(b.outsiders()));
  for (int j = 1; j <= b.outsiders(); ++j) {
    per_structure.emplace_back(margin / (two_minus_f * (j + 1)));
  }
  return EquilibriumProfile(std::move(q_s), std::move(per_structure));
}

// sum_j f(j) (a - q_s - j q^j - c) q_s. Throws std::logic_error if some
// structure with positive probability would push the price to zero.
inline ExactRational expected_profit(const MarketParams& params,
                                     const BeliefDistribution& b,
                                     const EquilibriumProfile& profile) {
  if (profile.q_by_structure().size() !=
      static_cast<std::size_t>(b.outsiders())) {
    throw UsageError("equilibrium profile does not match belief support");
  }
  const auto probs = b.probs();
  ExactRational total = 0;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    if (sgn(probs[j]) == 0) continue;
    ExactRational outsiders_output = 0;
    if (j > 0) {
      outsiders_output = static_cast<long>(j) *
                         profile.q_structure(static_cast<int>(j));
    }
    ExactRational price = params.a() - profile.q_s() - outsiders_output;
    if (sgn(price) <= 0) {
      throw std::logic_error("equilibrium price left the interior regime");
    }
    total += probs[j] * (price - params.c()) * profile.q_s();
  }
  return total;
}

}  // namespace pfg

#endif  // PFG_COURNOT_HPP
