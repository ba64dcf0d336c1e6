// Copyright 2026 The Tower Interpolation Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Text formats: site CSV, values CSV and polynomial JSON.

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tower/site.hpp"

namespace tower {

// A prime modulus, or nullopt for the rationals.
struct FieldSpec {
  std::optional<std::uint32_t> prime;

  std::string name() const { return prime ? "F_" + std::to_string(*prime) : "Q"; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline FieldSpec parse_field_spec(std::string_view text) {
  const std::string t(detail::trim(text));
  if (t == "Q" || t == "q") return {};
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 10) {
    throw Error(ErrorCode::kParseError, "field must be a prime or Q, got '" + t + "'");
  }
  const std::uint64_t q = std::stoull(t);
  if (q > 0xffffffffULL || !is_prime(q)) throw Error(ErrorCode::kNonPrimeField, t + " is not a prime below 2^32");
  return {static_cast<std::uint32_t>(q)};
}

struct CsvTable {
  std::optional<FieldSpec> field;  // from a "# field: ..." header
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

// Comma separated cells, '#' comment lines, blank lines skipped. All rows
// must have the same number of cells.
inline CsvTable read_csv(std::istream& in, std::string_view what) {
  CsvTable out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view t = detail::trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      std::string_view rest = detail::trim(t.substr(1));
      if (rest.rfind("field:", 0) == 0) out.field = parse_field_spec(rest.substr(6));
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss{std::string(t)};
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.emplace_back(detail::trim(cell));
    if (t.back() == ',') cells.emplace_back();
    if (!out.rows.empty() && cells.size() != out.rows.front().size()) {
      throw Error(ErrorCode::kParseError, std::string(what) + " line " + std::to_string(number) + ": expected " +
                                              std::to_string(out.rows.front().size()) + " columns, got " +
                                              std::to_string(cells.size()));
    }
    out.rows.push_back(std::move(cells));
    out.line_numbers.push_back(number);
  }
  if (out.rows.empty()) throw Error(ErrorCode::kParseError, std::string(what) + " has no data rows");
  return out;
}

template <Field F>
Site<F> site_from_csv(const F& field, const CsvTable& table) {
  std::vector<typename Site<F>::Node> nodes;
  nodes.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    typename Site<F>::Node node;
    for (const auto& cell : table.rows[r]) {
      try {
        node.push_back(field.parse(cell));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParseError, "site line " + std::to_string(table.line_numbers[r]) + ": " + e.what());
      }
    }
    nodes.push_back(std::move(node));
  }
  return Site<F>(field, std::move(nodes));
}

// One value per line aligned with the site, or (coordinates..., value) rows
// matched to site nodes by exact coordinates.
template <Field F>
std::vector<typename F::Element> values_from_csv(const Site<F>& s, const CsvTable& table) {
  const F& field = s.field();
  auto parse = [&](std::size_t r, const std::string& cell) {
    try {
      return field.parse(cell);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, "values line " + std::to_string(table.line_numbers[r]) + ": " + e.what());
    }
  };
  const std::size_t columns = table.rows.front().size();
  std::vector<typename F::Element> out;
  if (columns == 1) {
    if (table.rows.size() != s.size()) {
      throw Error(ErrorCode::kLengthMismatch, std::to_string(table.rows.size()) + " values for " +
                                                  std::to_string(s.size()) + " nodes");
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) out.push_back(parse(r, table.rows[r][0]));
    return out;
  }
  if (columns != s.dim() + 1) {
    throw Error(ErrorCode::kParseError, "values rows need 1 or " + std::to_string(s.dim() + 1) + " columns");
  }
  std::vector<std::optional<typename F::Element>> aligned(s.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    typename Site<F>::Node node;
    for (std::size_t k = 0; k < s.dim(); ++k) node.push_back(parse(r, table.rows[r][k]));
    auto idx = s.find(node);
    const std::string where = "values line " + std::to_string(table.line_numbers[r]);
    if (!idx) throw Error(ErrorCode::kParseError, where + ": node is not in the site");
    if (aligned[*idx]) throw Error(ErrorCode::kParseError, where + ": node " + s.describe(*idx) + " given twice");
    aligned[*idx] = parse(r, table.rows[r][s.dim()]);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!aligned[i]) throw Error(ErrorCode::kLengthMismatch, "no value for node " + s.describe(i));
    out.push_back(*aligned[i]);
  }
  return out;
}

// [{"exponents": [i, j, ...], "coefficient": "c"}, ...], terms in decreasing
// order.
template <Field F>
nlohmann::json polynomial_to_json(const Polynomial<F>& p, TermOrder o) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : p.sorted_terms(o)) {
    std::vector<std::uint32_t> e(t.monomial.dim());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = t.monomial[k];
    out.push_back({{"exponents", e}, {"coefficient", t.coefficient.to_string()}});
  }
  return out;
}

template <Field F>
Polynomial<F> polynomial_from_json(const F& field, std::size_t dim, const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "polynomial JSON must be an array of terms");
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("exponents") || !item.contains("coefficient") ||
        !item["exponents"].is_array()) {
      throw Error(ErrorCode::kParseError, "term needs 'exponents' and 'coefficient'");
    }
    const auto& e = item["exponents"];
    if (e.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "term with " + std::to_string(e.size()) + " exponents");
    Monomial m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!e[k].is_number_unsigned()) throw Error(ErrorCode::kParseError, "exponents must be non-negative integers");
      m[k] = e[k].get<std::uint32_t>();
    }
    const auto& c = item["coefficient"];
    const std::string text = c.is_string() ? c.get<std::string>() : c.dump();
    terms.push_back({m, field.parse(text)});
  }
  return Polynomial<F>::from_terms(field, dim, std::move(terms));
}

}  // namespace tower
