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

#ifndef PFG_IO_HPP
#define PFG_IO_HPP

// File formats read by the command-line tool.
//
// Belief file: {"n": int, "s": int, "weights": ["0", "3/4", "0.25", ...]}, or
// a JSON array of such objects to cover several coalition sizes. Payoffs file:
// a JSON array of rational strings. Weights and payoffs may be strings or
// JSON integers; floating-point JSON numbers are rejected so that no value
// passes through a double.

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfg/beliefs.hpp"
#include "pfg/errors.hpp"
#include "pfg/numeric.hpp"

namespace pfg::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": invalid JSON: " + e.what());
  }
}

inline ExactRational rational_from_json(const json& value,
                                        const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned()
               ? parse_rational(std::to_string(value.get<unsigned long long>()))
               : parse_rational(std::to_string(value.get<long long>()));
  }
  throw ParseError(where + ": expected a rational string such as \"3/4\"");
}

inline std::vector<ExactRational> rationals_from_json(const json& array,
                                                      const std::string& where) {
  if (!array.is_array()) throw ParseError(where + ": expected a JSON array");
  std::vector<ExactRational> values;
  values.reserve(array.size());
  for (std::size_t i = 0; i < array.size(); ++i) {
    values.push_back(
        rational_from_json(array[i], where + "[" + std::to_string(i) + "]"));
  }
  return values;
}

namespace detail {

inline int int_field(const json& object, const char* key,
                     const std::string& where) {
  if (!object.contains(key) || !object[key].is_number_integer()) {
    throw ParseError(where + ": missing integer field '" + key + "'");
  }
  return object[key].get<int>();
}

}  // namespace detail

struct BeliefSpec {
  int n = 0;
  int s = 0;
  std::vector<ExactRational> weights;
};

inline std::vector<BeliefSpec> parse_belief_document(const std::string& text,
                                                     const std::string& origin) {
  const json doc = parse_json(text, origin);
  std::vector<json> entries;
  if (doc.is_array()) {
    entries.assign(doc.begin(), doc.end());
  } else if (doc.is_object()) {
    entries.push_back(doc);
  } else {
    throw ParseError(origin + ": belief document must be an object or array");
  }
  std::vector<BeliefSpec> specs;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where =
        doc.is_array() ? origin + "[" + std::to_string(i) + "]" : origin;
    const json& entry = entries[i];
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    if (!entry.contains("weights")) {
      throw ParseError(where + ": missing field 'weights'");
    }
    specs.push_back({detail::int_field(entry, "n", where),
                     detail::int_field(entry, "s", where),
                     rationals_from_json(entry["weights"], where + ".weights")});
  }
  return specs;
}

// Validates every entry eagerly, so a bad file fails before any computation.
inline BeliefFamily belief_family_from_document(const std::string& text,
                                                const std::string& id) {
  WeightTable table;
  for (auto& spec : parse_belief_document(text, id)) {
    custom_belief(spec.n, spec.s, spec.weights);
    if (!table.emplace(std::pair{spec.n, spec.s}, std::move(spec.weights)).second) {
      throw ValidationError(id + ": duplicate entry for n = " +
                            std::to_string(spec.n) +
                            ", s = " + std::to_string(spec.s));
    }
  }
  return custom_family(id, std::move(table));
}

inline BeliefFamily load_belief_file(const std::string& path) {
  return belief_family_from_document(read_file(path), "file:" + path);
}

inline std::vector<ExactRational> parse_payoffs(const std::string& text,
                                                const std::string& origin) {
  return rationals_from_json(parse_json(text, origin), origin);
}

inline std::vector<ExactRational> load_payoffs_file(const std::string& path) {
  return parse_payoffs(read_file(path), path);
}

}  // namespace pfg::io

#endif  // PFG_IO_HPP
