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

#ifndef PFG_BELIEFS_HPP
#define PFG_BELIEFS_HPP

// Beliefs a deviating coalition S (|S| = s, n players in total) holds about
// the number j of coalitions its n - s outsiders will form.
//
// Index j runs over 0..n-s. For s < n the outsiders form at least one
// coalition, so probs[0] = 0; for s = n the outsider set is empty and its
// unique structure has zero coalitions, so probs[0] = 1.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfg/combinatorics.hpp"
#include "pfg/errors.hpp"
#include "pfg/numeric.hpp"

namespace pfg {

inline void check_coalition_size(int n, int s) {
  if (s < 1 || s > n) {
    throw DomainError("coalition size s = " + std::to_string(s) +
                      " outside [1, n] for n = " + std::to_string(n));
  }
}

// Stored as non-negative integer counts over their sum, so that for the
// uniform belief the counts are Stirling numbers and the common denominator
// is a Bell number.
class BeliefDistribution {
 public:
  // Throws ValidationError unless `probs` is a distribution over 0..n-s that
  // respects the probs[0] convention.
  BeliefDistribution(int n, int s, std::span<const ExactRational> probs)
      : n_(n), s_(s) {
    check_coalition_size(n, s);
    check_length(probs.size(), "probability");
    ExactRational total = 0;
    ExactInt common = 1;
    for (std::size_t j = 0; j < probs.size(); ++j) {
      if (sgn(probs[j]) < 0) throw ValidationError("negative probability", j);
      total += probs[j];
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
              probs[j].get_den().get_mpz_t());
    }
    if (total != 1) throw ValidationError("probabilities must sum to 1");
    counts_.reserve(probs.size());
    for (const auto& p : probs) counts_.emplace_back(p.get_num() * (common / p.get_den()));
    denominator_ = common;
    check_convention();
  }

  // probs[j] = counts[j] / sum(counts).
  static BeliefDistribution from_counts(int n, int s, std::vector<ExactInt> counts) {
    return BeliefDistribution(n, s, std::move(counts));
  }

  int n() const noexcept { return n_; }
  int s() const noexcept { return s_; }
  int outsiders() const noexcept { return n_ - s_; }
  std::size_t size() const noexcept { return counts_.size(); }

  std::span<const ExactInt> counts() const noexcept { return counts_; }
  const ExactInt& denominator() const noexcept { return denominator_; }

  ExactRational prob(int j) const {
    return make_ratio(counts_.at(static_cast<std::size_t>(j)), denominator_);
  }

  std::vector<ExactRational> probs() const {
    std::vector<ExactRational> out;
    out.reserve(counts_.size());
    for (const auto& c : counts_) out.push_back(make_ratio(c, denominator_));
    return out;
  }

  friend bool operator==(const BeliefDistribution& lhs, const BeliefDistribution& rhs) {
    if (lhs.n_ != rhs.n_ || lhs.s_ != rhs.s_) return false;
    for (std::size_t j = 0; j < lhs.counts_.size(); ++j) {
      if (lhs.counts_[j] * rhs.denominator_ != rhs.counts_[j] * lhs.denominator_) {
        return false;
      }
    }
    return true;
  }

 private:
  BeliefDistribution(int n, int s, std::vector<ExactInt> counts)
      : n_(n), s_(s), counts_(std::move(counts)), denominator_(0) {
    check_coalition_size(n, s);
    check_length(counts_.size(), "count");
    for (std::size_t j = 0; j < counts_.size(); ++j) {
      if (sgn(counts_[j]) < 0) throw ValidationError("negative weight", j);
      denominator_ += counts_[j];
    }
    check_convention();
    if (sgn(denominator_) == 0) throw ValidationError("weights are all zero");
  }

  void check_length(std::size_t size, const char* what) const {
    const std::size_t expected = static_cast<std::size_t>(n_ - s_) + 1;
    if (size != expected) {
      throw ValidationError("expected n - s + 1 = " + std::to_string(expected) +
                                " " + what + " entries, got " + std::to_string(size),
                            std::min(size, expected));
    }
  }

  void check_convention() const {
    if (s_ < n_ && sgn(counts_[0]) != 0) {
      throw ValidationError("weight for zero outsider coalitions must be 0", 0);
    }
  }

  int n_;
  int s_;
  std::vector<ExactInt> counts_;
  ExactInt denominator_;
};

// f(j) = {n-s brace j} / B_{n-s}: every outsider structure equally likely.
inline BeliefDistribution uniform_belief(int n, int s) {
  check_coalition_size(n, s);
  const int m = n - s;
  std::vector<ExactInt> counts;
  counts.reserve(static_cast<std::size_t>(m) + 1);
  if (m <= kSharedTableMax) {
    const auto row = shared_stirling_table().row(m);
    counts.assign(row.begin(), row.end());
  } else {
    const StirlingTable table(m);
    const auto row = table.row(m);
    counts.assign(row.begin(), row.end());
  }
  return BeliefDistribution::from_counts(n, s, std::move(counts));
}

// Point mass on the all-singletons structure, j = n - s.
inline BeliefDistribution gamma_belief(int n, int s) {
  check_coalition_size(n, s);
  std::vector<ExactInt> counts(static_cast<std::size_t>(n - s) + 1, ExactInt(0));
  counts.back() = 1;
  return BeliefDistribution::from_counts(n, s, std::move(counts));
}

// Normalizes non-negative weights. Errors name the offending index.
inline BeliefDistribution custom_belief(int n, int s,
                                        std::span<const ExactRational> weights) {
  check_coalition_size(n, s);
  const std::size_t expected = static_cast<std::size_t>(n - s) + 1;
  if (weights.size() != expected) {
    throw ValidationError("expected " + std::to_string(expected) +
                              " weights, got " + std::to_string(weights.size()),
                          std::min(weights.size(), expected));
  }
  ExactInt common = 1;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (sgn(weights[j]) < 0) throw ValidationError("negative weight", j);
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), weights[j].get_den().get_mpz_t());
  }
  std::vector<ExactInt> counts;
  counts.reserve(weights.size());
  for (const auto& w : weights) counts.emplace_back(w.get_num() * (common / w.get_den()));
  return BeliefDistribution::from_counts(n, s, std::move(counts));
}

namespace detail {

// lcm(1, 2, ..., k).
inline ExactInt lcm_up_to(std::size_t k) {
  ExactInt result = 1;
  for (unsigned long i = 2; i <= k; ++i) {
    mpz_lcm_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

// sum_j counts[j] * weight(j) / (j + 1) over the belief's denominator, with
// integer arithmetic and a single reduction at the end.
template <typename Weight>
ExactRational expectation_over_successor(const BeliefDistribution& b, Weight weight) {
  const auto counts = b.counts();
  const ExactInt scale = lcm_up_to(counts.size());
  ExactInt total = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (sgn(counts[j]) == 0) continue;
    total += counts[j] * weight(j) * (scale / static_cast<unsigned long>(j + 1));
  }
  return make_ratio(total, b.denominator() * scale);
}

}  // namespace detail

// F = sum_j j f(j) / (j + 1).
inline ExactRational f_functional(const BeliefDistribution& b) {
  return detail::expectation_over_successor(
      b, [](std::size_t j) { return static_cast<unsigned long>(j); });
}

struct HarmonicSummary {
  ExactRational h;  // sum_j f(j) / (1 + j)
  ExactRational F;  // f_functional; equals 1 - h
};

inline ExactRational harmonic_number(const BeliefDistribution& b) {
  return detail::expectation_over_successor(b, [](std::size_t) { return 1UL; });
}

inline HarmonicSummary probabilistic_harmonic(const BeliefDistribution& b) {
  return {harmonic_number(b), f_functional(b)};
}

// A rule assigning a belief to every (n, s). Generators must be safe to call
// from several threads at once.
class BeliefFamily {
 public:
  using Generator = std::function<BeliefDistribution(int n, int s)>;

  BeliefFamily(std::string id, Generator generator)
      : id_(std::move(id)), generator_(std::move(generator)) {}

  const std::string& id() const noexcept { return id_; }

  BeliefDistribution operator()(int n, int s) const {
    BeliefDistribution b = generator_(n, s);
    if (b.n() != n || b.s() != s) {
      throw UsageError("belief family '" + id_ + "' returned a belief for (" +
                       std::to_string(b.n()) + ", " + std::to_string(b.s()) +
                       ") when asked for (" + std::to_string(n) + ", " +
                       std::to_string(s) + ")");
    }
    return b;
  }

 private:
  std::string id_;
  Generator generator_;
};

inline BeliefFamily uniform_family() {
  return BeliefFamily("uniform", [](int n, int s) { return uniform_belief(n, s); });
}

inline BeliefFamily gamma_family() {
  return BeliefFamily("gamma", [](int n, int s) { return gamma_belief(n, s); });
}

// Weights keyed by (n, s). Sizes with n - s <= 1 admit a single distribution
// and may be omitted; any other missing size is a ValidationError on lookup.
using WeightTable = std::map<std::pair<int, int>, std::vector<ExactRational>>;

inline BeliefFamily custom_family(std::string id, WeightTable weights) {
  return BeliefFamily(
      std::move(id),
      [table = std::move(weights)](int n, int s) -> BeliefDistribution {
        if (auto it = table.find({n, s}); it != table.end()) {
          return custom_belief(n, s, it->second);
        }
        check_coalition_size(n, s);
        if (n - s <= 1) return gamma_belief(n, s);
        throw ValidationError("no belief weights given for n = " +
                              std::to_string(n) + ", s = " + std::to_string(s));
      });
}

// Strict harmonic dominance h_g(n, s) > h_z(n, s) over every size where two
// valid beliefs can differ. At s = n and s = n - 1 the distribution is forced
// (all mass on j = 0, resp. j = 1), so both h values coincide and those sizes
// are skipped. With no comparable size (n <= 2) the answer is false.
inline bool harmonic_dominates(const BeliefFamily& g, const BeliefFamily& z,
                               int n) {
  if (n <= 2) return false;
  for (int s = 1; s <= n - 2; ++s) {
    if (harmonic_number(g(n, s)) <= harmonic_number(z(n, s))) return false;
  }
  return true;
}

}  // namespace pfg

#endif  // PFG_BELIEFS_HPP
