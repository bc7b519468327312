// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "crosscap/cli/polytext.hpp"
#include "crosscap/version.hpp"

namespace crosscap::cli {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Json to_json(const Reason& r) {
  return std::visit(
      Overloaded{
          [](const MissingCyclotomic& m) {
            return Json{{"kind", "missing_cyclotomic"}, {"p", m.p}, {"observed_exponent", m.observed_exponent}};
          },
          [](const BadSymmetricFactor& b) {
            return Json{{"kind", "bad_symmetric_factor"},
                        {"poly", render_poly(b.poly)},
                        {"multiplicity", b.multiplicity},
                        {"value_at_minus_one", to_json(b.value_at_minus_one)}};
          },
          [](const ValidationFailure& v) {
            return Json{{"kind", "validation"}, {"which", std::string(to_string(v.kind))}, {"detail", v.detail}};
          },
          [](const CorollaryViolation& c) {
            return Json{{"kind", "corollary_violation"}, {"d", to_json(c.d)}, {"signature", c.signature}};
          },
      },
      r);
}

Json to_json(const ClassifiedFactor& f) {
  Json j{{"poly", render_poly(f.poly)},
         {"multiplicity", f.multiplicity},
         {"symmetric", f.symmetric},
         {"value_at_minus_one", to_json(f.value_at_minus_one)}};
  j["cyclotomic_half_index"] = f.cyclotomic_half_index ? Json(*f.cyclotomic_half_index) : Json(nullptr);
  return j;
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& fp : f.factors) {
    factors.push_back(Json{{"poly", render_poly(fp.poly)}, {"multiplicity", fp.multiplicity}});
  }
  return Json{{"content", to_json(f.content)}, {"factors", std::move(factors)}};
}

Json verdict_to_json(const Verdict& v, const std::string& name) {
  Json reasons = Json::array();
  for (const auto& r : v.reasons) reasons.push_back(to_json(r));
  Json factors = Json::array();
  for (const auto& f : v.classified) factors.push_back(to_json(f));
  return Json{{"name", name},
              {"status", std::string(to_string(v.status))},
              {"q", v.q},
              {"description", v.describe()},
              {"reasons", std::move(reasons)},
              {"factors", std::move(factors)},
              {"engine_version", kEngineVersion}};
}

std::string describe(const Reason& r) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const MissingCyclotomic& m) {
                   os << "missing cyclotomic: Phi_" << 2 * m.p << " (p = " << m.p
                      << ") has even exponent " << m.observed_exponent;
                 },
                 [&](const BadSymmetricFactor& b) {
                   os << "bad symmetric factor: " << render_poly(b.poly) << " with exponent "
                      << b.multiplicity << " has value " << b.value_at_minus_one << " at t = -1";
                 },
                 [&](const ValidationFailure& v) { os << "validation: " << to_string(v.kind) << " (" << v.detail << ")"; },
                 [&](const CorollaryViolation& c) {
                   os << "corollary violation: D = " << c.d << ", signature = " << c.signature;
                 },
             },
             r);
  return os.str();
}

namespace {

BatchRow evaluate_row(const KnotTableRow& row) {
  BatchRow out;
  out.name = row.name;
  out.signature = row.signature;
  if (row.error) {
    out.status = "invalid";
    out.error = row.error;
    return out;
  }
  out.alexander = render_poly(row.alexander);
  if (row.slice == SliceStatus::kSlice) {
    out.status = "slice";
    return out;
  }
  Verdict v = check_gamma_c_one(KnotInput{row.name, row.alexander, row.signature});
  out.status = std::string(to_string(v.status));
  out.verdict = std::move(v);
  return out;
}

}  // namespace

BatchReport run_batch_rows(const std::vector<KnotTableRow>& rows, unsigned jobs) {
  BatchReport report;
  report.engine_version = kEngineVersion;
  report.rows.resize(rows.size());

  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) report.rows[i] = evaluate_row(rows[i]);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  auto& t = report.totals;
  t.input = report.rows.size();
  for (const auto& r : report.rows) {
    if (r.status == "invalid") ++t.invalid;
    else if (r.status == "slice") ++t.slice;
    else if (r.status == "obstructed") ++t.obstructed;
    else ++t.not_obstructed;
  }
  return report;
}

Json to_json(const BatchReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json j{{"name", r.name}, {"status", r.status}};
    j["alexander"] = r.alexander ? Json(*r.alexander) : Json(nullptr);
    j["signature"] = r.signature;
    if (r.verdict) {
      j["q"] = r.verdict->q;
      Json reasons = Json::array();
      for (const auto& reason : r.verdict->reasons) reasons.push_back(to_json(reason));
      j["reasons"] = std::move(reasons);
    } else {
      j["q"] = nullptr;
      j["reasons"] = Json::array();
    }
    if (r.error) j["error"] = *r.error;
    rows.push_back(std::move(j));
  }
  const auto& t = report.totals;
  return Json{{"engine_version", report.engine_version},
              {"totals",
               {{"input", t.input},
                {"invalid", t.invalid},
                {"slice", t.slice},
                {"obstructed", t.obstructed},
                {"not_obstructed", t.not_obstructed}}},
              {"rows", std::move(rows)}};
}

}  // namespace crosscap::cli
