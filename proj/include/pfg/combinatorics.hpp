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

#ifndef PFG_COMBINATORICS_HPP
#define PFG_COMBINATORICS_HPP

// Stirling numbers of the second kind, Bell numbers, and set partitions.
//
// StirlingTable is the production path: a triangular table filled row by row
// with {m, j} = j * {m-1, j} + {m-1, j-1}. The alternating-sum formula in
// stirling2_alternating() and the partition enumerator are independent checks
// on the table.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "pfg/errors.hpp"
#include "pfg/numeric.hpp"

namespace pfg {

class StirlingTable {
 public:
  explicit StirlingTable(int max_m) : max_m_(max_m) {
    if (max_m < 0) throw DomainError("StirlingTable: max_m must be >= 0");
    rows_.resize(static_cast<std::size_t>(max_m) + 1);
    bell_.resize(static_cast<std::size_t>(max_m) + 1);
    rows_[0] = {ExactInt(1)};
    bell_[0] = 1;
    for (int m = 1; m <= max_m; ++m) {
      const auto& prev = rows_[m - 1];
      auto& row = rows_[m];
      row.assign(static_cast<std::size_t>(m) + 1, ExactInt(0));
      for (int j = 1; j <= m; ++j) {
        if (j < m) row[j] = j * prev[j];
        row[j] += prev[j - 1];
      }
      ExactInt total = 0;
      for (const auto& entry : row) total += entry;
      bell_[m] = total;
    }
  }

  int max_m() const noexcept { return max_m_; }

  // {m brace j}; zero whenever j > m.
  const ExactInt& operator()(int m, int j) const {
    check_row(m);
    if (j < 0) throw DomainError("stirling2: j must be >= 0");
    if (j > m) return zero();
    return rows_[m][j];
  }

  const ExactInt& bell(int m) const {
    check_row(m);
    return bell_[m];
  }

  std::span<const ExactInt> row(int m) const {
    check_row(m);
    return rows_[m];
  }

 private:
  void check_row(int m) const {
    if (m < 0 || m > max_m_) {
      throw DomainError("StirlingTable: row " + std::to_string(m) +
                        " outside [0, " + std::to_string(max_m_) + "]");
    }
  }

  static const ExactInt& zero() {
    static const ExactInt value(0);
    return value;
  }

  int max_m_;
  std::vector<std::vector<ExactInt>> rows_;
  std::vector<ExactInt> bell_;
};

inline constexpr int kSharedTableMax = 256;

// Process-wide read-only table; initialization is thread-safe.
inline const StirlingTable& shared_stirling_table() {
  static const StirlingTable table(kSharedTableMax);
  return table;
}

inline ExactInt stirling2(int m, int j) {
  if (m < 0 || j < 0) throw DomainError("stirling2: arguments must be >= 0");
  if (m <= kSharedTableMax) return shared_stirling_table()(m, j);
  if (j > m) return 0;
  return StirlingTable(m)(m, j);
}

inline ExactInt bell(int m) {
  if (m < 0) throw DomainError("bell: m must be >= 0");
  if (m <= kSharedTableMax) return shared_stirling_table().bell(m);
  return StirlingTable(m).bell(m);
}

// (1/j!) * sum_{i=0}^{j} (-1)^i C(j, i) (j - i)^m, with 0^0 = 1.
inline ExactInt stirling2_alternating(int m, int j) {
  if (m < 0 || j < 0) throw DomainError("stirling2: arguments must be >= 0");
  if (j > m) return 0;
  ExactInt sum = 0;
  ExactInt binom;
  ExactInt power;
  for (int i = 0; i <= j; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j),
                 static_cast<unsigned long>(i));
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j - i),
                  static_cast<unsigned long>(m));
    if (i % 2 == 0) {
      sum += binom * power;
    } else {
      sum -= binom * power;
    }
  }
  ExactInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(j));
  ExactInt result;
  mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), factorial.get_mpz_t());
  return result;
}

// A partition of {1..m} into non-empty blocks. Blocks are ordered by their
// smallest element and each block is sorted.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  bool operator==(const SetPartition&) const = default;
};

// True if `p` is a canonical partition of {1..m}.
inline bool is_canonical_partition(const SetPartition& p, int m) {
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  int previous_min = 0;
  for (const auto& block : p.blocks) {
    if (block.empty() || block.front() <= previous_min) return false;
    previous_min = block.front();
    for (std::size_t i = 0; i < block.size(); ++i) {
      const int label = block[i];
      if (label < 1 || label > m || seen[label]) return false;
      if (i > 0 && block[i - 1] >= label) return false;
      seen[label] = true;
    }
  }
  for (int label = 1; label <= m; ++label) {
    if (!seen[label]) return false;
  }
  return true;
}

inline constexpr int kMaxEnumeration = 14;

// Restricted growth strings a[0..m-1] with a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]), visited in lexicographic order. Element i+1
// belongs to block a[i].
class RestrictedGrowthString {
 public:
  explicit RestrictedGrowthString(int m)
      : digits_(static_cast<std::size_t>(check_bound(m)), 0),
        prefix_max_(static_cast<std::size_t>(m), 0) {}

  std::span<const int> digits() const noexcept { return digits_; }

  int block_count() const noexcept {
    return digits_.empty() ? 0 : prefix_max_.back() + 1;
  }

  // Steps to the next string; returns false once the sequence is exhausted.
  bool advance() {
    for (std::size_t i = digits_.size(); i-- > 1;) {
      if (digits_[i] <= prefix_max_[i - 1]) {
        ++digits_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], digits_[i]);
        for (std::size_t k = i + 1; k < digits_.size(); ++k) {
          digits_[k] = 0;
          prefix_max_[k] = prefix_max_[i];
        }
        return true;
      }
    }
    return false;
  }

  SetPartition partition() const {
    SetPartition p;
    p.blocks.resize(static_cast<std::size_t>(block_count()));
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      p.blocks[digits_[i]].push_back(static_cast<int>(i) + 1);
    }
    return p;
  }

 private:
  static int check_bound(int m) {
    if (m < 0) throw DomainError("partition enumeration: m must be >= 0");
    if (m > kMaxEnumeration) {
      throw SizeLimitError("partition enumeration limited to m <= " +
                           std::to_string(kMaxEnumeration) + ", got " +
                           std::to_string(m));
    }
    return m;
  }

  std::vector<int> digits_;
  std::vector<int> prefix_max_;
};

// Calls visit(rgs) for every restricted growth string of length m, where rgs
// is a std::span<const int>. Cheaper than materializing SetPartitions.
template <typename Visitor>
void for_each_restricted_growth_string(int m, Visitor&& visit) {
  RestrictedGrowthString rgs(m);
  do {
    visit(rgs.digits());
  } while (rgs.advance());
}

// Input range over every SetPartition of {1..m}, each exactly once.
class PartitionStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SetPartition;
    using difference_type = std::ptrdiff_t;
    using pointer = const SetPartition*;
    using reference = const SetPartition&;

    iterator() = default;
    explicit iterator(int m) : rgs_(m), done_(false) {
      current_ = rgs_.partition();
    }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      if (rgs_.advance()) {
        current_ = rgs_.partition();
      } else {
        done_ = true;
      }
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& lhs, const iterator& rhs) {
      return lhs.done_ && rhs.done_;
    }

   private:
    RestrictedGrowthString rgs_{0};
    SetPartition current_;
    bool done_ = true;
  };

  explicit PartitionStream(int m) : m_(m) {
    // Validate eagerly so the bound error surfaces at the call site.
    RestrictedGrowthString probe(m);
  }

  iterator begin() const { return iterator(m_); }
  iterator end() const { return iterator(); }

 private:
  int m_;
};

inline PartitionStream enumerate_partitions(int m) { return PartitionStream(m); }

}  // namespace pfg

#endif  // PFG_COMBINATORICS_HPP
