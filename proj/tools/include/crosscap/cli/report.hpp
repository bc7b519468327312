// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_CLI_REPORT_HPP
#define CROSSCAP_CLI_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "crosscap/factor.hpp"
#include "crosscap/obstruct.hpp"

namespace crosscap::cli {

using Json = nlohmann::ordered_json;

/// Machine integer when it fits, decimal string otherwise.
Json to_json(const Integer& v);
Json to_json(const Reason& r);
Json to_json(const ClassifiedFactor& f);
Json to_json(const Factorization& f);

/// The serialized verdict record: name, status, q, description, reasons,
/// factors, engine_version.
Json verdict_to_json(const Verdict& v, const std::string& name);

/// Short human rendering of one reason.
std::string describe(const Reason& r);

enum class SliceStatus { kUnknown, kSlice };

/// One row of a knot table, after field parsing. `error` is set when the row
/// is malformed; such rows become invalid report rows.
struct KnotTableRow {
  std::string name;
  IntPoly alexander;
  std::int64_t signature = 0;
  SliceStatus slice = SliceStatus::kUnknown;
  std::optional<std::string> error;
};

/// Thrown when a table file cannot be read or is structurally unusable.
class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV with header `name,alexander,signature[,slice]`. The alexander field
/// accepts the expression grammar or an ascending coefficient list
/// (quote it when it contains commas).
std::vector<KnotTableRow> read_csv_table(std::istream& in);

/// JSON array of objects with `name`, exactly one of `alexander` (string) or
/// `coefficients` (ascending integer array), `signature`, and optional
/// `slice_status` ("slice" or "unknown").
std::vector<KnotTableRow> read_json_table(std::istream& in);

struct BatchTotals {
  std::size_t input = 0;
  std::size_t invalid = 0;
  std::size_t slice = 0;
  std::size_t obstructed = 0;
  std::size_t not_obstructed = 0;

  friend bool operator==(const BatchTotals&, const BatchTotals&) = default;
};

struct BatchRow {
  std::string name;
  std::string status;  // obstructed | not_obstructed | invalid | slice
  std::optional<std::string> alexander;
  std::int64_t signature = 0;
  std::optional<Verdict> verdict;
  std::optional<std::string> error;
};

struct BatchReport {
  BatchTotals totals;
  std::vector<BatchRow> rows;
  std::string engine_version;
};

/// Evaluates every row independently on up to `jobs` threads; row order in
/// the report matches input order.
BatchReport run_batch_rows(const std::vector<KnotTableRow>& rows, unsigned jobs);

Json to_json(const BatchReport& report);

}  // namespace crosscap::cli

#endif  // CROSSCAP_CLI_REPORT_HPP
