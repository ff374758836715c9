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

#ifndef PFG_REPORT_HPP
#define PFG_REPORT_HPP

// Command output: one record type rendered as JSON, CSV, or an aligned text
// table. Records hold exact values; decimals are produced at render time by
// rounding the exact rational, so both forms always agree. Field order is the
// insertion order, which keeps output byte-stable.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pfg/errors.hpp"
#include "pfg/numeric.hpp"

namespace pfg::report {

inline constexpr const char* kSchemaVersion = "1";

using Cell = std::variant<std::string, long long, bool, ExactRational,
                          std::vector<int>, std::vector<ExactRational>>;

struct Field {
  std::string name;
  Cell value;
};

struct Column {
  std::string name;
  // Detail columns appear in JSON and CSV but not in the text table.
  bool detail = false;
};

struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Field> summary;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
  }
  void add_summary(std::string name, Cell value) {
    summary.push_back({std::move(name), std::move(value)});
  }
  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
      throw std::logic_error("report row width does not match columns");
    }
    rows.push_back(std::move(row));
  }
};

enum class Format { kTable, kCsv, kJson };

inline Format parse_format(const std::string& text) {
  if (text == "table") return Format::kTable;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw UsageError("unknown format '" + text + "' (expected table, csv or json)");
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson rational_json(const ExactRational& q, unsigned precision) {
  ojson out;
  out["exact"] = to_fraction_string(q);
  out["decimal"] = to_decimal(q, precision);
  return out;
}

inline ojson cell_json(const Cell& cell, unsigned precision) {
  return std::visit(
      [precision](const auto& v) -> ojson {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExactRational>) {
          return rational_json(v, precision);
        } else if constexpr (std::is_same_v<T, std::vector<ExactRational>>) {
          ojson list = ojson::array();
          for (const auto& q : v) list.push_back(rational_json(q, precision));
          return list;
        } else {
          return ojson(v);
        }
      },
      cell);
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ';';
    out += render(items[i]);
  }
  return out;
}

// Decimal form of a cell for CSV and text output.
inline std::string cell_text(const Cell& cell, unsigned precision) {
  return std::visit(
      [precision](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, ExactRational>) {
          return to_decimal(v, precision);
        } else if constexpr (std::is_same_v<T, std::vector<int>>) {
          return join(v, [](int x) { return std::to_string(x); });
        } else {
          return join(v, [precision](const ExactRational& q) {
            return to_decimal(q, precision);
          });
        }
      },
      cell);
}

// Exact form for rational cells, empty otherwise.
inline std::string cell_exact(const Cell& cell) {
  if (const auto* q = std::get_if<ExactRational>(&cell)) {
    return to_fraction_string(*q);
  }
  if (const auto* list = std::get_if<std::vector<ExactRational>>(&cell)) {
    return join(*list, [](const ExactRational& q) { return to_fraction_string(q); });
  }
  return {};
}

inline bool is_rational(const Cell& cell) {
  return std::holds_alternative<ExactRational>(cell) ||
         std::holds_alternative<std::vector<ExactRational>>(cell);
}

}  // namespace detail

inline std::string render_json(const OutputRecord& record, unsigned precision) {
  detail::ojson out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = record.command;
  detail::ojson inputs = detail::ojson::object();
  for (const auto& [key, value] : record.inputs) inputs[key] = value;
  out["inputs"] = inputs;
  detail::ojson results;
  detail::ojson summary = detail::ojson::object();
  for (const auto& field : record.summary) {
    summary[field.name] = detail::cell_json(field.value, precision);
  }
  results["summary"] = summary;
  detail::ojson rows = detail::ojson::array();
  for (const auto& row : record.rows) {
    detail::ojson entry;
    for (std::size_t i = 0; i < row.size(); ++i) {
      entry[record.columns[i].name] = detail::cell_json(row[i], precision);
    }
    rows.push_back(entry);
  }
  results["rows"] = rows;
  out["results"] = results;
  return out.dump(2) + "\n";
}

// Comment lines carry metadata and summary; rational columns are followed by
// a "<name>_exact" column.
inline std::string render_csv(const OutputRecord& record, unsigned precision) {
  std::ostringstream out;
  out << "# schema_version=" << kSchemaVersion << "\n";
  out << "# command=" << record.command << "\n";
  for (const auto& [key, value] : record.inputs) {
    out << "# input." << key << "=" << value << "\n";
  }
  for (const auto& field : record.summary) {
    out << "# " << field.name << "=" << detail::cell_text(field.value, precision);
    if (detail::is_rational(field.value)) {
      out << " (" << detail::cell_exact(field.value) << ")";
    }
    out << "\n";
  }
  std::vector<bool> exact_column(record.columns.size(), false);
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (detail::is_rational(row[i])) exact_column[i] = true;
    }
  }
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (i > 0) out << ",";
    out << record.columns[i].name;
    if (exact_column[i]) out << "," << record.columns[i].name << "_exact";
  }
  out << "\n";
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ",";
      out << detail::cell_text(row[i], precision);
      if (exact_column[i]) out << "," << detail::cell_exact(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

inline std::string render_table(const OutputRecord& record, unsigned precision) {
  std::ostringstream out;
  out << record.command;
  for (const auto& [key, value] : record.inputs) out << "  " << key << "=" << value;
  out << "\n";
  for (const auto& field : record.summary) {
    out << field.name << ": " << detail::cell_text(field.value, precision) << "\n";
  }
  if (record.columns.empty()) return out.str();

  std::vector<std::size_t> shown;
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (!record.columns[i].detail) shown.push_back(i);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (std::size_t i : shown) width.push_back(record.columns[i].name.size());
  for (const auto& row : record.rows) {
    std::vector<std::string> line;
    for (std::size_t k = 0; k < shown.size(); ++k) {
      line.push_back(detail::cell_text(row[shown[k]], precision));
      width[k] = std::max(width[k], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k > 0) out << "  ";
      out << std::string(width[k] - line[k].size(), ' ') << line[k];
    }
    out << "\n";
  };
  std::vector<std::string> header;
  for (std::size_t i : shown) header.push_back(record.columns[i].name);
  emit(header);
  for (const auto& line : cells) emit(line);
  return out.str();
}

inline std::string render(const OutputRecord& record, Format format,
                          unsigned precision) {
  switch (format) {
    case Format::kJson:
      return render_json(record, precision);
    case Format::kCsv:
      return render_csv(record, precision);
    case Format::kTable:
      break;
  }
  return render_table(record, precision);
}

}  // namespace pfg::report

#endif  // PFG_REPORT_HPP
