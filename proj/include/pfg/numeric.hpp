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

#ifndef PFG_NUMERIC_HPP
#define PFG_NUMERIC_HPP

// Exact number types and their textual forms.
//
// Every game quantity is held as an exact rational. Text conversion accepts
// "p/q" and plain decimal literals ("0.25", "-3", "+1.5") and never goes
// through floating point.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "pfg/errors.hpp"

namespace pfg {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

namespace detail {

inline bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

inline ExactInt ten_to(unsigned long exponent) {
  ExactInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace detail

// num / den in lowest terms. GMP requires canonical operands for arithmetic.
inline ExactRational make_ratio(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRational value(num, den);
  value.canonicalize();
  return value;
}

// Parses "p/q", "p", or a decimal literal with optional sign.
inline ExactRational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  ExactRational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
      throw ParseError("malformed rational literal '" + original + "'");
    }
    ExactInt denominator(std::string(den), 10);
    if (denominator == 0) {
      throw ParseError("zero denominator in '" + original + "'");
    }
    value = make_ratio(ExactInt(std::string(num), 10), denominator);
  } else {
    std::string_view whole = text;
    std::string_view frac;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      whole = text.substr(0, dot);
      frac = text.substr(dot + 1);
    }
    const bool whole_ok = whole.empty() || detail::all_digits(whole);
    const bool frac_ok = frac.empty() || detail::all_digits(frac);
    if (!whole_ok || !frac_ok || (whole.empty() && frac.empty())) {
      throw ParseError("malformed decimal literal '" + original + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    value = make_ratio(ExactInt(digits, 10), detail::ten_to(frac.size()));
  }
  return negative ? ExactRational(-value) : value;
}

// Canonical "p/q" rendering; the denominator is always written, "0/1"
// included, so consumers can split on '/' unconditionally.
inline std::string to_fraction_string(const ExactRational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

// Fixed-point rendering with `digits` fractional digits, rounding half to
// even.
inline std::string to_decimal(const ExactRational& value, unsigned digits) {
  const ExactInt scale = detail::ten_to(digits);
  ExactInt scaled_num = value.get_num() * scale;
  const ExactInt& den = value.get_den();
  ExactInt quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  ExactInt remainder = scaled_num - quotient * den;
  const int cmp_half = cmp(ExactInt(2 * remainder), den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quotient.get_mpz_t()))) {
    quotient += 1;
  }
  const bool negative = sgn(quotient) < 0;
  std::string body = ExactInt(abs(quotient)).get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, 1, '.');
  }
  return negative ? "-" + body : body;
}

inline double to_double(const ExactRational& value) { return value.get_d(); }

}  // namespace pfg

#endif  // PFG_NUMERIC_HPP
