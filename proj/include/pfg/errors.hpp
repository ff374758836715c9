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

#ifndef PFG_ERRORS_HPP
#define PFG_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pfg {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation,
// e.g. a coalition size s with s == 0 or s > n.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A request exceeds a fixed computational bound (enumeration size, scan range).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Inputs that are well-formed but mutually inconsistent, e.g. comparing games
// built from different belief families.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (rational literals, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

// User-provided data violates a structural requirement. When the problem can
// be pinned to one element, index() names it.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what,
                           std::optional<std::size_t> index = std::nullopt)
      : Error(index ? what + " (index " + std::to_string(*index) + ")" : what),
        index_(index) {}

  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::optional<std::size_t> index_;
};

class AllocationLengthError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Payoffs do not add up to the worth of the grand coalition.
class EfficiencyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace pfg

#endif  // PFG_ERRORS_HPP
