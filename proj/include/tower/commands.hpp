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

// Subcommands of the towerbm tool, written against streams so they can be
// driven from tests.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tower/bases.hpp"
#include "tower/bench.hpp"
#include "tower/covering.hpp"
#include "tower/io.hpp"
#include "tower/moller.hpp"
#include "tower/solver.hpp"
#include "tower/verify.hpp"

namespace tower::cli {

struct Options {
  std::string input;
  std::optional<std::string> field;  // overrides the site file header
  TermOrder order = TermOrder::kTdlex;
  std::uint64_t seed = 1;
  bool json = false;
  std::string csv;  // bench: CSV output path
  std::string algo = "bm";
  bool any_site = false;
  bool verify = false;
  bool newton = false;
  std::string values;
  std::string method = "bm";
  std::vector<std::size_t> sizes{100, 300, 500};
  std::size_t trials = 5;
};

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kFailure = 2 };

namespace detail {

inline CsvTable read_file(const std::string& path, std::string_view what) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + std::string(what) + " '" + path + "'");
  return read_csv(in, what);
}

inline FieldSpec resolve_field(const Options& opt, const CsvTable& table) {
  if (opt.field) return parse_field_spec(*opt.field);
  if (table.field) return *table.field;
  return {};
}

// Calls fn(field) with the concrete field type.
template <class Fn>
int with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.prime) return fn(PrimeField(*spec.prime));
  return fn(RationalField());
}

inline std::string monomial_list(const std::vector<Monomial>& ms) {
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : ", ") + to_string(m);
  return out;
}

inline nlohmann::json monomials_json(const std::vector<Monomial>& ms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

inline int report_checks(const VerificationReport& r, std::ostream& out) {
  out << "verification:\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL");
    if (!c.passed && !c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  return r.all_passed() ? kOk : kVerificationFailed;
}

inline nlohmann::json checks_json(const VerificationReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r.checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

}  // namespace detail

inline int classify(const Options& opt, std::ostream& out) {
  const auto table = detail::read_file(opt.input, "site file");
  return detail::with_field(detail::resolve_field(opt, table), [&](const auto& field) -> int {
    const auto s = site_from_csv(field, table);
    const auto lower = is_lower(s);
    const auto a = analyze(s);
    const auto xt = is_tower(a, Flavor::kX);
    const auto yt = is_tower(a, Flavor::kY);
    if (opt.json) {
      nlohmann::json j{{"mu", s.size()},
                       {"field", field.name()},
                       {"is_lower", lower.lower},
                       {"is_x_tower", xt.tower},
                       {"is_y_tower", yt.tower},
                       {"Sx_rowForm", lower.sx.row_form()},
                       {"Sy_columnForm", lower.sy.column_form()},
                       {"witnesses", {{"lower", lower.witness}, {"x_tower", xt.witness}, {"y_tower", yt.witness}}}};
      out << j.dump(2) << '\n';
      return kOk;
    }
    auto yes = [](bool b) { return b ? "true" : "false"; };
    out << "mu: " << s.size() << '\n'
        << "field: " << field.name() << '\n'
        << "is_lower: " << yes(lower.lower) << '\n'
        << "is_x_tower: " << yes(xt.tower) << '\n'
        << "is_y_tower: " << yes(yt.tower) << '\n'
        << "Sx row form: " << to_string(lower.sx.row_form()) << '\n'
        << "Sy column form: " << to_string(lower.sy.column_form()) << '\n';
    out << "lower witness: " << lower.witness << '\n'
        << "x-tower witness: " << xt.witness << '\n'
        << "y-tower witness: " << yt.witness << '\n';
    return kOk;
  });
}

inline int bases(const Options& opt, std::ostream& out) {
  const auto table = detail::read_file(opt.input, "site file");
  return detail::with_field(detail::resolve_field(opt, table), [&](const auto& field) -> int {
    const auto s = site_from_csv(field, table);
    const auto a = analyze(s);
    const auto mono = drimb(a, opt.order);
    const auto newton = drinb(s, a, opt.order);
    if (opt.json) {
      nlohmann::json elems = nlohmann::json::array();
      for (const auto& e : newton.elements) {
        elems.push_back({{"index", {e.index.i, e.index.j}},
                         {"node", s.describe(e.node)},
                         {"polynomial", polynomial_to_json(e.polynomial, opt.order)}});
      }
      nlohmann::json j{{"order", to_string(opt.order)},
                       {"flavor", std::string(to_string(mono.flavor))},
                       {"monomials", detail::monomials_json(mono.monomials)},
                       {"newton", elems}};
      out << j.dump(2) << '\n';
      return kOk;
    }
    out << "order: " << to_string(opt.order) << '\n'
        << "flavor: " << to_string(mono.flavor) << '\n'
        << "monomial basis: " << detail::monomial_list(mono.monomials) << '\n'
        << "newton basis:\n";
    for (const auto& e : newton.elements) {
      out << "  phi[" << e.index.i << "," << e.index.j << "] at " << s.describe(e.node) << ": "
          << to_text(e.polynomial, opt.order) << '\n';
    }
    return kOk;
  });
}

inline int groebner(const Options& opt, std::ostream& out) {
  if (opt.algo != "bm" && opt.algo != "tbm") throw Error(ErrorCode::kParseError, "unknown algorithm '" + opt.algo + "'");
  const auto table = detail::read_file(opt.input, "site file");
  return detail::with_field(detail::resolve_field(opt, table), [&](const auto& field) -> int {
    using F = std::decay_t<decltype(field)>;
    const auto s = site_from_csv(field, table);
    const BasisTriple<F> t = opt.algo == "bm" ? bm(s, opt.order) : tbm(s, opt.order, {.any_site = opt.any_site});

    std::optional<std::vector<Polynomial<F>>> lagrange;
    if (!opt.newton) {
      lagrange = lagrange_form(s, t);
      if (!lagrange) throw Error(ErrorCode::kInternalDisagreement, "Newton basis is not a basis of span(N)");
    }
    std::optional<VerificationReport> report;
    if (opt.verify) report = verify_triple(s, opt.order, t);

    if (opt.json) {
      nlohmann::json g = nlohmann::json::array();
      for (const auto& p : t.groebner) g.push_back(polynomial_to_json(p, opt.order));
      nlohmann::json q = nlohmann::json::array();
      if (opt.newton) {
        for (const auto& e : t.newton) {
          q.push_back({{"node", s.describe(e.node)}, {"polynomial", polynomial_to_json(e.polynomial, opt.order)}});
        }
      } else {
        for (std::size_t i = 0; i < s.size(); ++i) {
          q.push_back({{"node", s.describe(i)}, {"polynomial", polynomial_to_json((*lagrange)[i], opt.order)}});
        }
      }
      nlohmann::json j{{"field", field.name()},
                       {"order", to_string(opt.order)},
                       {"mu", s.size()},
                       {"G", g},
                       {"N", detail::monomials_json(t.escalier)},
                       {opt.newton ? "Q_newton" : "Q_lagrange", q}};
      if (report) j["verification"] = {{"passed", report->all_passed()}, {"checks", detail::checks_json(*report)}};
      out << j.dump(2) << '\n';
      return report && !report->all_passed() ? kVerificationFailed : kOk;
    }
    out << "field: " << field.name() << '\n'
        << "order: " << to_string(opt.order) << '\n'
        << "mu: " << s.size() << '\n'
        << "G:\n";
    for (const auto& p : t.groebner) out << "  " << to_text(p, opt.order) << '\n';
    out << "N: " << detail::monomial_list(t.escalier) << '\n';
    if (opt.newton) {
      out << "Q (Newton, triangular order):\n";
      for (const auto& e : t.newton) out << "  " << s.describe(e.node) << ": " << to_text(e.polynomial, opt.order) << '\n';
    } else {
      out << "Q (Lagrange form):\n";
      for (std::size_t i = 0; i < s.size(); ++i) {
        out << "  " << s.describe(i) << ": " << to_text((*lagrange)[i], opt.order) << '\n';
      }
    }
    return report ? detail::report_checks(*report, out) : kOk;
  });
}

inline int interpolate(const Options& opt, std::ostream& out) {
  if (opt.values.empty()) throw Error(ErrorCode::kParseError, "--values is required");
  const Method method = parse_method(opt.method);
  const auto table = detail::read_file(opt.input, "site file");
  const auto values_table = detail::read_file(opt.values, "values file");
  return detail::with_field(detail::resolve_field(opt, table), [&](const auto& field) -> int {
    const auto s = site_from_csv(field, table);
    InterpolationProblem<std::decay_t<decltype(field)>> p{s, values_from_csv(s, values_table)};
    const auto poly = tower::interpolate(p, opt.order, method);
    bool residual_ok = true;
    for (std::size_t i = 0; i < s.size(); ++i) residual_ok = residual_ok && poly.eval(s[i]) == p.values[i];
    if (opt.json) {
      nlohmann::json j{{"field", field.name()},
                       {"order", to_string(opt.order)},
                       {"method", to_string(method)},
                       {"polynomial", polynomial_to_json(poly, opt.order)},
                       {"text", to_text(poly, opt.order)}};
      if (opt.verify) j["residual_ok"] = residual_ok;
      out << j.dump(2) << '\n';
    } else {
      out << to_text(poly, opt.order) << '\n';
      if (opt.verify) out << "residual: " << (residual_ok ? "pass" : "FAIL") << '\n';
    }
    return opt.verify && !residual_ok ? kVerificationFailed : kOk;
  });
}

// Sizes beyond q(q+1)/2 cannot form a tower over F_q; they are capped with a
// note on `err`.
inline int bench(const Options& opt, std::ostream& out, std::ostream& err) {
  const FieldSpec spec = parse_field_spec(opt.field.value_or("65521"));
  if (!spec.prime) throw Error(ErrorCode::kPreconditionUnmet, "bench needs a prime field");
  const std::uint64_t cap = max_tower_size(*spec.prime);
  std::vector<std::size_t> sizes;
  for (auto mu : opt.sizes) {
    if (mu > cap) {
      err << "note: F_" << *spec.prime << " holds at most " << cap << " tower nodes (q(q+1)/2); size " << mu
          << " capped to " << cap << '\n';
      mu = cap;
    }
    if (std::find(sizes.begin(), sizes.end(), mu) == sizes.end()) sizes.push_back(mu);
  }
  BenchmarkOptions bo{*spec.prime, opt.order, opt.trials, opt.seed};
  std::vector<BenchmarkRow> rows;
  for (auto mu : sizes) rows.push_back(benchmark_size(mu, bo));

  if (!opt.csv.empty()) {
    std::ofstream file(opt.csv);
    if (!file) throw Error(ErrorCode::kParseError, "cannot write '" + opt.csv + "'");
    file << kBenchmarkCsvHeader << '\n';
    for (const auto& r : rows) file << to_csv(r) << '\n';
  }
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"mu", r.mu}, {"q", r.q}, {"order", to_string(r.order)}, {"trials", r.trials},
                   {"bm_ms", r.bm_ms}, {"tbm_ms", r.tbm_ms}, {"speedup", r.speedup},
                   {"verified", r.verified}, {"seed", r.seed}});
    }
    out << j.dump(2) << '\n';
  } else {
    out << std::setw(6) << "mu" << std::setw(12) << "bm_ms" << std::setw(12) << "tbm_ms" << std::setw(10)
        << "speedup" << "  verified\n";
    out << std::fixed << std::setprecision(3);
    for (const auto& r : rows) {
      out << std::setw(6) << r.mu << std::setw(12) << r.bm_ms << std::setw(12) << r.tbm_ms << std::setw(10)
          << std::setprecision(2) << r.speedup << std::setprecision(3) << "  " << (r.verified ? "yes" : "no")
          << '\n';
    }
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const BenchmarkRow& r) { return r.verified; });
  return ok ? kOk : kVerificationFailed;
}

}  // namespace tower::cli
