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

// Covering-line geometry of planar sites: rows and columns, the lower sets
// S_x / S_y, the coordinate chains H_j / V_i, and the lower / tower
// classifiers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tower/error.hpp"
#include "tower/monomial.hpp"
#include "tower/site.hpp"

namespace tower {

// Horizontal rows carry the x-flavor (S_x, H_j), vertical columns the y-flavor.
enum class Flavor { kX, kY };

constexpr std::string_view to_string(Flavor f) { return f == Flavor::kX ? "x" : "y"; }

// Finite downward-closed subset of N_0^2, stored by its row form
// L_x(m_0, ..., m_nu) with m_j = max{i : (i, j) in the set}.
class LowerSet {
 public:
  static LowerSet from_row_form(std::vector<std::uint32_t> m) {
    if (m.empty()) throw Error(ErrorCode::kPreconditionUnmet, "empty row form");
    for (std::size_t j = 1; j < m.size(); ++j) {
      if (m[j] > m[j - 1]) throw Error(ErrorCode::kPreconditionUnmet, "row form must be non-increasing");
    }
    LowerSet s;
    s.rows_ = std::move(m);
    return s;
  }

  static LowerSet from_column_form(const std::vector<std::uint32_t>& n) {
    if (n.empty()) throw Error(ErrorCode::kPreconditionUnmet, "empty column form");
    for (std::size_t i = 1; i < n.size(); ++i) {
      if (n[i] > n[i - 1]) throw Error(ErrorCode::kPreconditionUnmet, "column form must be non-increasing");
    }
    return from_row_form(transpose(n));
  }

  static LowerSet from_cells(const std::vector<IndexPair>& cells) {
    std::map<std::uint32_t, std::uint32_t> row_max;
    for (auto c : cells) {
      auto [it, fresh] = row_max.emplace(c.j, c.i);
      if (!fresh) it->second = std::max(it->second, c.i);
    }
    if (row_max.empty()) throw Error(ErrorCode::kPreconditionUnmet, "empty cell set");
    std::vector<std::uint32_t> m(row_max.rbegin()->first + 1, 0);
    for (std::uint32_t j = 0; j < m.size(); ++j) {
      auto it = row_max.find(j);
      if (it == row_max.end()) throw Error(ErrorCode::kPreconditionUnmet, "cell set is not downward closed");
      m[j] = it->second;
    }
    LowerSet s = from_row_form(m);
    if (s.size() != count_distinct(cells)) {
      throw Error(ErrorCode::kPreconditionUnmet, "cell set is not downward closed");
    }
    return s;
  }

  const std::vector<std::uint32_t>& row_form() const noexcept { return rows_; }
  std::vector<std::uint32_t> column_form() const { return transpose(rows_); }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto m : rows_) total += m + 1;
    return total;
  }

  bool contains(IndexPair c) const { return c.j < rows_.size() && c.i <= rows_[c.j]; }

  // Cells listed in increasing index order.
  std::vector<IndexPair> cells(IndexOrder o = IndexOrder::kInlex) const {
    std::vector<IndexPair> out;
    out.reserve(size());
    if (o == IndexOrder::kInlex) {
      for (std::uint32_t j = 0; j < rows_.size(); ++j) {
        for (std::uint32_t i = 0; i <= rows_[j]; ++i) out.push_back({i, j});
      }
    } else {
      auto cols = column_form();
      for (std::uint32_t i = 0; i < cols.size(); ++i) {
        for (std::uint32_t j = 0; j <= cols[i]; ++j) out.push_back({i, j});
      }
    }
    return out;
  }

  friend bool operator==(const LowerSet&, const LowerSet&) = default;

 private:
  // m_j = max{i : n_i >= j} and vice versa.
  static std::vector<std::uint32_t> transpose(const std::vector<std::uint32_t>& form) {
    std::vector<std::uint32_t> out(form.front() + 1, 0);
    for (std::uint32_t j = 0; j < out.size(); ++j) {
      std::uint32_t i = 0;
      while (i + 1 < form.size() && form[i + 1] >= j) ++i;
      out[j] = i;
    }
    return out;
  }

  static std::size_t count_distinct(std::vector<IndexPair> cells) {
    std::sort(cells.begin(), cells.end(), [](IndexPair a, IndexPair b) {
      return index_order_compare(a, b, IndexOrder::kInlex) < 0;
    });
    return static_cast<std::size_t>(std::unique(cells.begin(), cells.end()) - cells.begin());
  }

  std::vector<std::uint32_t> rows_;
};

inline std::string to_string(const std::vector<std::uint32_t>& form) {
  std::string out = "(";
  for (std::size_t k = 0; k < form.size(); ++k) out += (k ? "," : "") + std::to_string(form[k]);
  return out + ")";
}

// One covering line: the shared coordinate, the other coordinates of its
// nodes in ascending order, and the matching node indices.
template <Field F>
struct CoveringLine {
  typename F::Element coordinate;
  std::vector<typename F::Element> members;
  std::vector<std::size_t> node_indices;
  std::size_t size() const { return members.size(); }
};

// rows: lines y = const, so rows[j].members is H_j. columns: lines x = const,
// columns[i].members is V_i. Both sorted by descending size, ties broken by
// ascending coordinate.
template <Field F>
struct CoveringAnalysis {
  std::vector<CoveringLine<F>> rows;
  std::vector<CoveringLine<F>> columns;

  const std::vector<CoveringLine<F>>& lines(Flavor f) const { return f == Flavor::kX ? rows : columns; }
};

namespace detail {

template <Field F>
std::vector<CoveringLine<F>> group_lines(const Site<F>& s, std::size_t shared_axis) {
  using Element = typename F::Element;
  const std::size_t other_axis = 1 - shared_axis;
  std::map<Element, std::vector<std::pair<Element, std::size_t>>> groups;
  for (std::size_t k = 0; k < s.size(); ++k) groups[s[k][shared_axis]].push_back({s[k][other_axis], k});
  std::vector<CoveringLine<F>> lines;
  lines.reserve(groups.size());
  for (auto& [coordinate, members] : groups) {
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    CoveringLine<F> line{coordinate, {}, {}};
    for (auto& [value, index] : members) {
      line.members.push_back(value);
      line.node_indices.push_back(index);
    }
    lines.push_back(std::move(line));
  }
  // groups are already in ascending coordinate order, so a stable sort by
  // size keeps the tie-break.
  std::stable_sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return lines;
}

template <class Element>
bool is_subset(const std::vector<Element>& sub, const std::vector<Element>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

template <class Element>
std::string set_string(const std::vector<Element>& values) {
  std::string out = "{";
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? "," : "") + values[k].to_string();
  return out + "}";
}

}  // namespace detail

template <Field F>
CoveringAnalysis<F> analyze(const Site<F>& s) {
  s.require_planar();
  return {detail::group_lines(s, 1), detail::group_lines(s, 0)};
}

template <Field F>
LowerSet lower_set(const CoveringAnalysis<F>& a, Flavor f) {
  std::vector<std::uint32_t> form;
  for (const auto& line : a.lines(f)) form.push_back(static_cast<std::uint32_t>(line.size() - 1));
  return f == Flavor::kX ? LowerSet::from_row_form(form) : LowerSet::from_column_form(form);
}

template <Field F>
LowerSet lower_set_x(const Site<F>& s) {
  return lower_set(analyze(s), Flavor::kX);
}

template <Field F>
LowerSet lower_set_y(const Site<F>& s) {
  return lower_set(analyze(s), Flavor::kY);
}

struct ChainCheck {
  bool nested = false;
  bool strictly_nested = false;
  std::string witness;
};

// H_0 ⊇ H_1 ⊇ ... (x-flavor) or V_0 ⊇ V_1 ⊇ ... (y-flavor).
template <Field F>
ChainCheck check_chain(const CoveringAnalysis<F>& a, Flavor f) {
  const auto& lines = a.lines(f);
  const char* name = f == Flavor::kX ? "H" : "V";
  ChainCheck out{true, true, ""};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (!detail::is_subset(lines[k].members, lines[k - 1].members)) {
      out.nested = false;
      out.strictly_nested = false;
      out.witness = std::string(name) + "_" + std::to_string(k) + " " + detail::set_string(lines[k].members) +
                    " not contained in " + name + "_" + std::to_string(k - 1) + " " +
                    detail::set_string(lines[k - 1].members);
      return out;
    }
    if (lines[k].size() == lines[k - 1].size()) out.strictly_nested = false;
  }
  out.witness = std::string(name) + "-chain nested";
  return out;
}

struct LowerClassification {
  bool lower = false;
  LowerSet sx;
  LowerSet sy;
  ChainCheck h_chain;
  ChainCheck v_chain;
  std::string witness;
};

// S_x = S_y, cross-checked against the nested-chain criterion; the two must
// agree, otherwise InternalDisagreement is raised.
template <Field F>
LowerClassification is_lower(const Site<F>& s) {
  auto a = analyze(s);
  LowerClassification out{false, lower_set(a, Flavor::kX), lower_set(a, Flavor::kY),
                          check_chain(a, Flavor::kX), check_chain(a, Flavor::kY), ""};
  out.lower = out.sx == out.sy;
  const bool by_chains = out.h_chain.nested || out.v_chain.nested;
  if (out.lower != by_chains) {
    throw Error(ErrorCode::kInternalDisagreement,
                "S_x = S_y gives " + std::string(out.lower ? "true" : "false") + " but chain criterion gives " +
                    (by_chains ? "true" : "false"));
  }
  if (out.lower) {
    out.witness = out.h_chain.nested ? out.h_chain.witness : out.v_chain.witness;
  } else {
    out.witness = out.h_chain.witness + "; " + out.v_chain.witness + "; S_x = L_x" +
                  to_string(out.sx.row_form()) + " differs from S_y = L_y" + to_string(out.sy.column_form());
  }
  return out;
}

struct TowerClassification {
  bool tower = false;
  std::string witness;
};

// Line sizes strictly decrease and every line's coordinates lie in line 0's.
template <Field F>
TowerClassification is_tower(const CoveringAnalysis<F>& a, Flavor f) {
  const auto& lines = a.lines(f);
  const char* name = f == Flavor::kX ? "H" : "V";
  const char* what = f == Flavor::kX ? "row" : "column";
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].size() >= lines[k - 1].size()) {
      return {false, std::string(what) + " sizes not strictly decreasing: " + what + " " + std::to_string(k - 1) +
                         " has " + std::to_string(lines[k - 1].size()) + " nodes, " + what + " " +
                         std::to_string(k) + " has " + std::to_string(lines[k].size())};
    }
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    for (const auto& v : lines[k].members) {
      if (!std::binary_search(lines[0].members.begin(), lines[0].members.end(), v)) {
        return {false, "coordinate " + v.to_string() + " of " + name + "_" + std::to_string(k) + " not in " + name +
                           "_0 " + detail::set_string(lines[0].members)};
      }
    }
  }
  std::string sizes;
  for (std::size_t k = 0; k < lines.size(); ++k) sizes += (k ? ">" : "") + std::to_string(lines[k].size());
  return {true, std::string(what) + " sizes " + sizes + ", every " + name + "_k inside " + name + "_0"};
}

template <Field F>
TowerClassification is_x_tower(const Site<F>& s) {
  return is_tower(analyze(s), Flavor::kX);
}

template <Field F>
TowerClassification is_y_tower(const Site<F>& s) {
  return is_tower(analyze(s), Flavor::kY);
}

// Under a strictly nested H-chain (resp. V-chain) a site is lower exactly when
// it is an x-tower (resp. y-tower). Returns whether that equivalence holds.
template <Field F>
bool strict_chain_consistency(const Site<F>& s) {
  auto a = analyze(s);
  const bool strict_h = check_chain(a, Flavor::kX).strictly_nested;
  const bool strict_v = check_chain(a, Flavor::kY).strictly_nested;
  if (!strict_h && !strict_v) {
    throw Error(ErrorCode::kPreconditionUnmet, "neither the H-chain nor the V-chain is strictly nested");
  }
  const bool lower = is_lower(s).lower;
  bool ok = true;
  if (strict_h) ok = ok && (lower == is_tower(a, Flavor::kX).tower);
  if (strict_v) ok = ok && (lower == is_tower(a, Flavor::kY).tower);
  return ok;
}

// Node labels u_ij: x-flavor takes row j in covering order and ascending
// abscissa within the row, listed in increasing inlex order of (i, j);
// y-flavor is the transpose, listed in increasing lex order.
struct LabeledNode {
  IndexPair index;
  std::size_t node = 0;
};

template <Field F>
std::vector<LabeledNode> label_nodes(const CoveringAnalysis<F>& a, Flavor f) {
  std::vector<LabeledNode> out;
  const auto& lines = a.lines(f);
  for (std::uint32_t line = 0; line < lines.size(); ++line) {
    for (std::uint32_t pos = 0; pos < lines[line].size(); ++pos) {
      IndexPair idx = f == Flavor::kX ? IndexPair{pos, line} : IndexPair{line, pos};
      out.push_back({idx, lines[line].node_indices[pos]});
    }
  }
  return out;
}

}  // namespace tower
