// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_CLI_POLYTEXT_HPP
#define CROSSCAP_CLI_POLYTEXT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "crosscap/poly.hpp"

namespace crosscap::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);

  /// 0-based offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses either a sum of terms `[sign] [integer] ['t' ['^' natural]]`
/// (whitespace-insensitive; every term after the first needs a sign) or an
/// ascending coefficient list `[c0, c1, ...]`. Exact; no canonicalization.
IntPoly parse_poly_raw(std::string_view text);

/// parse_poly_raw followed by canonicalize. "0" and "[]" parse to the zero
/// polynomial, which is returned as is.
IntPoly parse_poly(std::string_view text);

/// Descending powers with explicit signs, e.g. "t^2 - 3t + 1"; "0" for zero.
std::string render_poly(const IntPoly& p);

}  // namespace crosscap::cli

#endif  // CROSSCAP_CLI_POLYTEXT_HPP
