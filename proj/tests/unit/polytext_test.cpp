// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "crosscap/cli/polytext.hpp"
#include "generators.hpp"

using namespace crosscap;
using namespace crosscap::cli;

TEST_SUITE("polytext") {
  TEST_CASE("parse expressions") {
    CHECK(parse_poly_raw("t^2 - 3t + 1") == IntPoly{1, -3, 1});
    CHECK(parse_poly_raw("2t^2-5t+2") == IntPoly{2, -5, 2});
    CHECK(parse_poly_raw("-t") == IntPoly{0, -1});
    CHECK(parse_poly_raw("  t ^ 3 + 1 ") == IntPoly{1, 0, 0, 1});
    CHECK(parse_poly_raw("1 + t + t") == IntPoly{1, 2});
    CHECK(parse_poly_raw("t - t") == IntPoly{});
    CHECK(parse_poly_raw("0") == IntPoly{});
    CHECK(parse_poly_raw("123456789012345678901234567890").coeff(0) ==
          Integer("123456789012345678901234567890"));
  }

  TEST_CASE("parse coefficient lists in ascending order") {
    CHECK(parse_poly_raw("[1, -3, 1]") == IntPoly{1, -3, 1});
    CHECK(parse_poly_raw("[2,-5,2]") == IntPoly{2, -5, 2});
    CHECK(parse_poly_raw("[0, 0, 1]") == IntPoly{0, 0, 1});
    CHECK(parse_poly_raw("[]") == IntPoly{});
  }

  TEST_CASE("canonicalizing parse") {
    CHECK(parse_poly("-t^3 + 3t^2 - t") == IntPoly{1, -3, 1});
    CHECK(parse_poly("t - t").is_zero());
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      (void)parse_poly_raw("t^2 + - 1");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 6);
      CHECK(std::string(e.what()).find("column 7") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly_raw(""), ParseError);
    CHECK_THROWS_AS(parse_poly_raw("t^"), ParseError);
    CHECK_THROWS_AS(parse_poly_raw("t^2 t"), ParseError);
    CHECK_THROWS_AS(parse_poly_raw("x + 1"), ParseError);
    CHECK_THROWS_AS(parse_poly_raw("[1, 2"), ParseError);
    CHECK_THROWS_AS(parse_poly_raw("[1, a]"), ParseError);
    CHECK_THROWS_AS(parse_poly_raw("[1] 2"), ParseError);
    CHECK_THROWS_AS(parse_poly_raw("t^1000001"), ParseError);
  }

  TEST_CASE("render") {
    CHECK(render_poly(IntPoly{1, -3, 1}) == "t^2 - 3t + 1");
    CHECK(render_poly(IntPoly{0, -2}) == "-2t");
    CHECK(render_poly(IntPoly{}) == "0");
    CHECK(render_poly(IntPoly{-1}) == "-1");
    CHECK(render_poly(IntPoly{1, 1, 0, -1}) == "-t^3 + t + 1");
  }

  TEST_CASE("render and parse are inverse") {
    crosscap::testing::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
      const int d = static_cast<int>(crosscap::testing::uniform(rng, 0, 15));
      const IntPoly p = crosscap::testing::random_poly(rng, d, -1000, 1000);
      REQUIRE(parse_poly_raw(render_poly(p)) == p);
    }
  }
}
