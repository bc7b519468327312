// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/cli/polytext.hpp"

#include <cctype>
#include <vector>

namespace crosscap::cli {

namespace {

constexpr unsigned long kMaxExponent = 100000;

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void advance() { ++pos_; }
  std::size_t pos() const { return pos_; }

  bool at_digit() const { return !done() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

IntPoly parse_list(Cursor& in) {
  in.advance();  // '['
  std::vector<Integer> coeffs;
  in.skip_space();
  if (in.peek() == ']') {
    in.advance();
  } else {
    while (true) {
      in.skip_space();
      bool negative = false;
      if (in.peek() == '-' || in.peek() == '+') {
        negative = in.peek() == '-';
        in.advance();
        in.skip_space();
      }
      if (!in.at_digit()) in.fail("expected an integer");
      Integer c(in.digits());
      coeffs.push_back(negative ? Integer(-c) : c);
      in.skip_space();
      if (in.peek() == ',') {
        in.advance();
        continue;
      }
      if (in.peek() == ']') {
        in.advance();
        break;
      }
      in.fail("expected ',' or ']'");
    }
  }
  in.skip_space();
  if (!in.done()) in.fail("unexpected trailing input");
  return IntPoly(std::move(coeffs));
}

IntPoly parse_terms(Cursor& in) {
  std::vector<Integer> coeffs;
  bool first = true;
  while (true) {
    in.skip_space();
    if (in.done()) {
      if (first) in.fail("empty polynomial");
      break;
    }
    bool negative = false;
    if (in.peek() == '+' || in.peek() == '-') {
      negative = in.peek() == '-';
      in.advance();
    } else if (!first) {
      in.fail("expected '+' or '-'");
    }
    in.skip_space();

    Integer coeff = 1;
    bool have_coeff = false;
    if (in.at_digit()) {
      coeff = Integer(in.digits());
      have_coeff = true;
      in.skip_space();
    }
    unsigned long power = 0;
    if (in.peek() == 't') {
      in.advance();
      power = 1;
      in.skip_space();
      if (in.peek() == '^') {
        in.advance();
        in.skip_space();
        if (!in.at_digit()) in.fail("expected an exponent");
        const std::size_t at = in.pos();
        const std::string e = in.digits();
        if (e.size() > 6 || std::stoul(e) > kMaxExponent) throw ParseError(at, "exponent too large");
        power = std::stoul(e);
      }
    } else if (!have_coeff) {
      in.fail("expected a coefficient or 't'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += negative ? Integer(-coeff) : coeff;
    first = false;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("syntax error at column " + std::to_string(position + 1) + ": " + what),
      position_(position) {}

IntPoly parse_poly_raw(std::string_view text) {
  Cursor in(text);
  in.skip_space();
  if (in.peek() == '[') return parse_list(in);
  return parse_terms(in);
}

IntPoly parse_poly(std::string_view text) {
  IntPoly p = parse_poly_raw(text);
  return p.is_zero() ? p : canonicalize(p);
}

std::string render_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coeff(static_cast<std::size_t>(k));
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const Integer mag = abs(c);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += 't';
    if (k >= 2) out += '^' + std::to_string(k);
    first = false;
  }
  return out;
}

}  // namespace crosscap::cli
