// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "crosscap/cli/polytext.hpp"
#include "crosscap/cli/report.hpp"
#include "crosscap/cyclo.hpp"
#include "crosscap/factor.hpp"
#include "crosscap/obstruct.hpp"
#include "crosscap/pretzel.hpp"
#include "crosscap/seifert.hpp"
#include "crosscap/version.hpp"

namespace crosscap::cli {

namespace {

constexpr const char* kFooter = R"(Exit codes:
  0  not obstructed (no conclusion)     2  obstructed (gamma_c >= 2)
  3  invalid knot data                  1  usage or parse error

Environment:
  CROSSCAP_HALF_INDEX_BOUND  raise the largest odd p for which factors are
                             matched against Phi_{2p} (default |sigma| + 4)
  CROSSCAP_CYCLO_MAX_INDEX   largest cyclotomic index that may be built
                             (default 10000)

Polynomials are written as sums of terms like "t^2 - 3t + 1", or as an
ascending coefficient list "[1, -3, 1]" (constant term first).)";

int exit_code(Status s) {
  switch (s) {
    case Status::kObstructed: return kExitObstructed;
    case Status::kNotObstructed: return kExitNotObstructed;
    case Status::kInvalid: return kExitInvalid;
  }
  return kExitUsage;
}

std::string render_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != 0) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) os << ", ";
      os << m.at(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_factor_line(std::ostream& out, const ClassifiedFactor& f) {
  out << "  " << render_poly(f.poly) << "  exponent " << f.multiplicity << "  "
      << (f.symmetric ? "symmetric" : "asymmetric") << "  value(-1) = " << f.value_at_minus_one;
  if (f.cyclotomic_half_index) out << "  Phi_" << 2 * *f.cyclotomic_half_index;
  out << '\n';
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "q: " << v.q << '\n';
  out << "status: " << to_string(v.status) << '\n';
  out << "  " << v.describe() << '\n';
  if (!v.reasons.empty()) {
    out << "reasons:\n";
    for (const auto& r : v.reasons) out << "  - " << describe(r) << '\n';
  }
  if (!v.classified.empty()) {
    out << "factors:\n";
    for (const auto& f : v.classified) print_factor_line(out, f);
  }
}

// Parses "[[a, b], [c, d]]"; integers may be given as JSON numbers or strings.
IntMatrix parse_matrix(const std::string& text) {
  const Json doc = Json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("matrix must be a list of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : doc) {
    if (!r.is_array()) throw std::invalid_argument("matrix rows must be lists");
    std::vector<Integer> row;
    for (const auto& x : r) {
      if (x.is_number_integer()) {
        row.emplace_back(static_cast<long>(x.get<std::int64_t>()));
      } else if (x.is_string()) {
        row.emplace_back(x.get<std::string>());
      } else {
        throw std::invalid_argument("matrix entries must be integers");
      }
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix(rows);
}

struct CheckOptions {
  std::string alex;
  std::int64_t signature = 0;
  std::string name = "K";
  bool json = false;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const IntPoly alex = parse_poly(o.alex);
  const KnotInput k{o.name, alex, o.signature};
  const Verdict v = check_gamma_c_one(k);
  if (o.json) {
    out << verdict_to_json(v, o.name).dump(2) << '\n';
    return exit_code(v.status);
  }
  out << "name: " << o.name << '\n';
  out << "alexander: " << render_poly(alex) << '\n';
  out << "signature: " << o.signature << '\n';
  if (v.status != Status::kInvalid) out << "determinant: " << abs(eval(alex, Integer{-1})) << '\n';
  print_verdict(out, v);
  return exit_code(v.status);
}

struct BatchOptions {
  std::string input;
  std::string format;
  std::string output;
  unsigned jobs = 1;
};

int cmd_batch(const BatchOptions& o, std::ostream& out, std::ostream& err) {
  std::ifstream file(o.input);
  if (!file) {
    err << "error: cannot read " << o.input << '\n';
    return kExitUsage;
  }
  std::string format = o.format;
  if (format.empty()) {
    format = o.input.size() >= 5 && o.input.compare(o.input.size() - 5, 5, ".json") == 0 ? "json" : "csv";
  }
  std::vector<KnotTableRow> rows;
  try {
    rows = format == "json" ? read_json_table(file) : read_csv_table(file);
  } catch (const TableError& e) {
    err << "error: " << o.input << ": " << e.what() << '\n';
    return kExitUsage;
  }
  const BatchReport report = run_batch_rows(rows, o.jobs);
  const std::string text = to_json(report).dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream dest(o.output, std::ios::binary);
    if (!dest || !(dest << text)) {
      err << "error: cannot write " << o.output << '\n';
      return kExitUsage;
    }
  }
  return kExitNotObstructed;
}

int cmd_factor(const std::string& expr, const std::string& method, std::int64_t bound, bool json,
               std::ostream& out) {
  const IntPoly p = parse_poly_raw(expr);
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  const Factorization f = method == "kronecker" ? factor_kronecker(p) : factor_rational(p);
  const auto classified = classify_factors(f, bound);
  if (json) {
    Json factors = Json::array();
    for (const auto& cf : classified) factors.push_back(to_json(cf));
    out << Json{{"input", render_poly(p)}, {"content", to_json(f.content)}, {"factors", std::move(factors)}}.dump(2)
        << '\n';
    return 0;
  }
  out << "content: " << f.content << '\n';
  for (const auto& cf : classified) print_factor_line(out, cf);
  return 0;
}

int cmd_pretzel(const std::vector<std::int64_t>& pqr, bool json, std::ostream& out) {
  const PretzelParams params(pqr.at(0), pqr.at(1), pqr.at(2));
  const Integer d = pretzel_d(params);
  const PretzelAlexander alex = pretzel_alexander(params);
  const SeifertMatrix v = pretzel_seifert(params);
  const long sigma = pretzel_signature(params);
  const Verdict verdict = pretzel_corollary_check(params);
  if (json) {
    Json j{{"p", params.p()},
           {"q", params.q()},
           {"r", params.r()},
           {"d", to_json(d)},
           {"alexander", render_poly(alex.poly)},
           {"degenerate", alex.degenerate},
           {"signature", sigma},
           {"seifert", matrix_to_json(v.matrix())},
           {"verdict", verdict_to_json(verdict, "P(" + std::to_string(params.p()) + "," +
                                                    std::to_string(params.q()) + "," +
                                                    std::to_string(params.r()) + ")")}};
    out << j.dump(2) << '\n';
    return exit_code(verdict.status);
  }
  out << "D: " << d << '\n';
  out << "alexander: " << render_poly(alex.poly) << (alex.degenerate ? "  (degenerate)" : "") << '\n';
  out << "signature: " << sigma << '\n';
  out << "seifert: " << render_matrix(v.matrix()) << '\n';
  print_verdict(out, verdict);
  return exit_code(verdict.status);
}

int cmd_seifert(const std::string& text, bool json, std::ostream& out) {
  const SeifertMatrix v(parse_matrix(text));
  const Integer skew = v.skew_determinant();
  if (abs(skew) != 1) {
    if (json) {
      out << Json{{"size", v.size()}, {"knot_valid", false}, {"skew_determinant", to_json(skew)}}.dump(2) << '\n';
    } else {
      out << "size: " << v.size() << '\n';
      out << "knot_valid: no (det(V - V^T) = " << skew << ")\n";
    }
    return kExitInvalid;
  }
  const IntPoly alex = alexander_from_seifert(v);
  const long sigma = signature_from_seifert(v);
  const Integer det = determinant_from_seifert(v);
  const Verdict verdict = check_gamma_c_one(KnotInput{"seifert", alex, sigma});
  if (json) {
    out << Json{{"size", v.size()},
                {"knot_valid", true},
                {"alexander", render_poly(alex)},
                {"signature", sigma},
                {"determinant", to_json(det)},
                {"verdict", verdict_to_json(verdict, "seifert")}}
               .dump(2)
        << '\n';
    return exit_code(verdict.status);
  }
  out << "size: " << v.size() << '\n';
  out << "knot_valid: yes\n";
  out << "alexander: " << render_poly(alex) << '\n';
  out << "signature: " << sigma << '\n';
  out << "determinant: " << det << '\n';
  print_verdict(out, verdict);
  return exit_code(verdict.status);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"crosscap: Alexander polynomial obstructions to concordance crosscap number one"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Test one knot's Alexander polynomial and signature");
  check_cmd->add_option("--alex", check.alex, "Alexander polynomial")->required();
  check_cmd->add_option("--signature", check.signature, "Knot signature (even integer)")->required();
  check_cmd->add_option("--name", check.name, "Label used in the report");
  check_cmd->add_flag("--json", check.json, "Print the serialized verdict record");

  BatchOptions batch;
  auto* batch_cmd = app.add_subcommand("batch", "Evaluate every row of a knot table");
  batch_cmd->add_option("--input", batch.input, "CSV or JSON knot table")->required();
  batch_cmd->add_option("--format", batch.format, "Input format (default: from the file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  batch_cmd->add_option("--output", batch.output, "Write the JSON report here instead of stdout");
  batch_cmd->add_option("--jobs", batch.jobs, "Worker threads")->check(CLI::Range(1U, 256U));

  std::int64_t cyclo_n = 0;
  auto* cyclo_cmd = app.add_subcommand("cyclotomic", "Print the n-th cyclotomic polynomial");
  cyclo_cmd->add_option("n", cyclo_n, "Index")->required();

  std::int64_t torus_q = 0;
  bool torus_factors = false;
  auto* torus_cmd = app.add_subcommand("torus", "Print the (2,q) torus knot polynomial (t^q + 1)/(t + 1)");
  torus_cmd->add_option("q", torus_q, "Odd positive integer")->required();
  torus_cmd->add_flag("--factors", torus_factors, "Also list the Phi_{2p} factors");

  std::string factor_expr;
  std::string factor_method = "zassenhaus";
  std::int64_t factor_bound = 99;
  bool factor_json = false;
  auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial over the rationals");
  factor_cmd->add_option("expr", factor_expr, "Polynomial")->required();
  factor_cmd->add_option("--method", factor_method, "zassenhaus or kronecker (degree <= 10)")
      ->check(CLI::IsMember({"zassenhaus", "kronecker"}));
  factor_cmd->add_option("--bound", factor_bound, "Largest odd p tested for Phi_{2p}");
  factor_cmd->add_flag("--json", factor_json, "JSON output");

  std::vector<std::int64_t> pqr;
  bool pretzel_json = false;
  auto* pretzel_cmd = app.add_subcommand("pretzel", "Pretzel knot P(p,q,r) invariants and the pretzel D-sigma test");
  pretzel_cmd->add_option("params", pqr, "Three odd integers p q r")->required()->expected(3);
  pretzel_cmd->add_flag("--json", pretzel_json, "JSON output");

  std::string matrix_text;
  bool seifert_json = false;
  auto* seifert_cmd = app.add_subcommand("seifert", "Invariants and verdict from a Seifert matrix");
  seifert_cmd->add_option("--matrix", matrix_text, "Row-major integer lists, e.g. \"[[-1,1],[0,-1]]\"")
      ->required();
  seifert_cmd->add_flag("--json", seifert_json, "JSON output");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("crosscap");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check, out);
    if (*batch_cmd) return cmd_batch(batch, out, err);
    if (*cyclo_cmd) {
      out << render_poly(cyclotomic(cyclo_n)) << '\n';
      return 0;
    }
    if (*torus_cmd) {
      out << render_poly(torus_poly(torus_q)) << '\n';
      if (torus_factors) {
        for (const auto& f : torus_factorization(torus_q)) {
          out << "  Phi_" << 2 * f.p << " = " << render_poly(f.phi) << '\n';
        }
      }
      return 0;
    }
    if (*factor_cmd) return cmd_factor(factor_expr, factor_method, factor_bound, factor_json, out);
    if (*pretzel_cmd) return cmd_pretzel(pqr, pretzel_json, out);
    if (*seifert_cmd) return cmd_seifert(matrix_text, seifert_json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace crosscap::cli
