// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include <boost/tokenizer.hpp>

#include <algorithm>
#include <charconv>
#include <istream>

#include "crosscap/cli/polytext.hpp"
#include "crosscap/cli/report.hpp"

namespace crosscap::cli {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<std::int64_t> parse_int(const std::string& s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return v;
}

void set_error(KnotTableRow& row, std::string what) {
  if (!row.error) row.error = std::move(what);
}

void parse_slice(KnotTableRow& row, const std::string& raw) {
  const std::string s = lower(trim(raw));
  if (s.empty() || s == "unknown") {
    row.slice = SliceStatus::kUnknown;
  } else if (s == "slice") {
    row.slice = SliceStatus::kSlice;
  } else {
    set_error(row, "slice status must be 'slice' or 'unknown', got '" + s + "'");
  }
}

void parse_alexander(KnotTableRow& row, const std::string& text) {
  try {
    row.alexander = parse_poly(text);
  } catch (const ParseError& e) {
    set_error(row, std::string("alexander: ") + e.what());
  }
}

}  // namespace

std::vector<KnotTableRow> read_csv_table(std::istream& in) {
  using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
  const boost::escaped_list_separator<char> sep('\\', ',', '"');

  std::string line;
  std::vector<std::string> header;
  std::size_t line_no = 0;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    for (const auto& f : Tokenizer(line, sep)) header.push_back(lower(trim(f)));
  }
  if (header.empty()) return {};
  const bool has_slice = header.size() == 4 && header[3] == "slice";
  if (header.size() < 3 || header[0] != "name" || header[1] != "alexander" || header[2] != "signature" ||
      (header.size() == 4 && !has_slice) || header.size() > 4) {
    throw TableError("CSV header must be name,alexander,signature[,slice]");
  }

  std::vector<KnotTableRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    KnotTableRow row;
    std::vector<std::string> fields;
    try {
      for (const auto& f : Tokenizer(line, sep)) fields.push_back(f);
    } catch (const boost::escaped_list_error& e) {
      row.name = "line " + std::to_string(line_no);
      set_error(row, std::string("malformed CSV: ") + e.what());
      rows.push_back(std::move(row));
      continue;
    }
    row.name = fields.empty() ? "" : trim(fields[0]);
    if (row.name.empty()) row.name = "line " + std::to_string(line_no);
    const std::size_t expected = has_slice ? 4 : 3;
    if (fields.size() != expected && !(has_slice && fields.size() == 3)) {
      set_error(row, "expected " + std::to_string(expected) + " fields, got " + std::to_string(fields.size()));
      rows.push_back(std::move(row));
      continue;
    }
    parse_alexander(row, fields[1]);
    if (auto sig = parse_int(trim(fields[2]))) {
      row.signature = *sig;
    } else {
      set_error(row, "signature is not an integer: '" + trim(fields[2]) + "'");
    }
    if (fields.size() == 4) parse_slice(row, fields[3]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<KnotTableRow> read_json_table(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw TableError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw TableError("JSON table must be an array of rows");

  std::vector<KnotTableRow> rows;
  std::size_t index = 0;
  for (const auto& item : doc) {
    ++index;
    KnotTableRow row;
    row.name = "row " + std::to_string(index);
    if (!item.is_object()) {
      set_error(row, "row is not an object");
      rows.push_back(std::move(row));
      continue;
    }
    if (auto it = item.find("name"); it != item.end() && it->is_string()) row.name = it->get<std::string>();

    const bool has_expr = item.contains("alexander");
    const bool has_coeffs = item.contains("coefficients");
    if (has_expr == has_coeffs) {
      set_error(row, "exactly one of 'alexander' or 'coefficients' is required");
    } else if (has_expr) {
      if (item["alexander"].is_string()) {
        parse_alexander(row, item["alexander"].get<std::string>());
      } else {
        set_error(row, "'alexander' must be a string");
      }
    } else {
      const auto& arr = item["coefficients"];
      std::vector<Integer> coeffs;
      if (!arr.is_array()) set_error(row, "'coefficients' must be an array");
      for (const auto& c : arr.is_array() ? arr : Json::array()) {
        if (c.is_number_integer()) {
          coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
        } else if (c.is_string()) {
          try {
            coeffs.emplace_back(c.get<std::string>());
          } catch (const std::invalid_argument&) {
            set_error(row, "coefficient is not an integer");
          }
        } else {
          set_error(row, "coefficient is not an integer");
        }
      }
      IntPoly p(std::move(coeffs));
      row.alexander = p.is_zero() ? p : canonicalize(p);
    }

    if (auto it = item.find("signature"); it != item.end() && it->is_number_integer()) {
      row.signature = it->get<std::int64_t>();
    } else {
      set_error(row, "'signature' must be an integer");
    }
    if (auto it = item.find("slice_status"); it != item.end()) {
      if (it->is_string()) {
        parse_slice(row, it->get<std::string>());
      } else {
        set_error(row, "'slice_status' must be a string");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace crosscap::cli
