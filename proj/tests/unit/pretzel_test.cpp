// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "crosscap/pretzel.hpp"

using namespace crosscap;

namespace {

Integer discriminant(const IntPoly& p) {
  return p.coeff(1) * p.coeff(1) - 4 * p.coeff(0) * p.coeff(2);
}

}  // namespace

TEST_SUITE("pretzel") {
  TEST_CASE("parameters must be odd") {
    CHECK_THROWS_AS(PretzelParams(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(PretzelParams(1, 0, 1), std::invalid_argument);
    CHECK_NOTHROW(PretzelParams(-1, 3, 5));
  }

  TEST_CASE("P(1,1,1) is the trefoil") {
    const PretzelParams k(1, 1, 1);
    CHECK(pretzel_d(k) == 3);
    CHECK(pretzel_alexander(k).poly == IntPoly{1, -1, 1});
    CHECK_FALSE(pretzel_alexander(k).degenerate);
    CHECK(pretzel_seifert(k).matrix() == IntMatrix{{1, 0}, {1, 1}});
    CHECK(pretzel_signature(k) == 2);
    const Verdict v = pretzel_corollary_check(k);
    CHECK(v.status == Status::kNotObstructed);
    CHECK(v.q == 3);
  }

  TEST_CASE("P(-1,3,5) is obstructed") {
    const PretzelParams k(-1, 3, 5);
    CHECK(pretzel_d(k) == 7);
    CHECK(pretzel_alexander(k).poly == IntPoly{2, -3, 2});
    const Verdict v = pretzel_corollary_check(k);
    CHECK(v.status == Status::kObstructed);
    REQUIRE(v.reasons.size() == 1);
    CHECK(v.reasons[0] == Reason{CorollaryViolation{Integer(7), pretzel_signature(k)}});
  }

  TEST_CASE("negative square D with zero signature is allowed") {
    const PretzelParams k(-3, 3, -3);
    CHECK(pretzel_d(k) == -9);
    CHECK(pretzel_alexander(k).poly == IntPoly{2, -5, 2});
    CHECK(pretzel_signature(k) == 0);
    CHECK(pretzel_corollary_check(k).status == Status::kNotObstructed);
  }

  TEST_CASE("D = -1 is degenerate") {
    const PretzelParams k(1, 1, -1);
    CHECK(pretzel_d(k) == -1);
    CHECK(pretzel_alexander(k).degenerate);
    CHECK(pretzel_alexander(k).poly == IntPoly{1});
    const Verdict v = pretzel_corollary_check(k);
    CHECK(v.status == Status::kInvalid);
    REQUIRE(v.reasons.size() == 1);
    CHECK(std::get<ValidationFailure>(v.reasons[0]).kind == ValidationKind::kDegeneratePretzel);
  }

  TEST_CASE("exhaustive small sweep agrees with the general engine") {
    int checked = 0;
    for (std::int64_t p = -9; p <= 9; p += 2) {
      for (std::int64_t q = -9; q <= 9; q += 2) {
        for (std::int64_t r = -9; r <= 9; r += 2) {
          const PretzelParams k(p, q, r);
          const Integer d = pretzel_d(k);
          if (d == -1) continue;
          const SeifertMatrix v = pretzel_seifert(k);
          const IntPoly delta = alexander_from_seifert(v);
          REQUIRE(delta == pretzel_alexander(k).poly);
          REQUIRE(discriminant(delta) == -d);
          REQUIRE(determinant(v.matrix() + v.matrix().transpose()) == d);
          const long sigma = pretzel_signature(k);
          REQUIRE(sigma == signature_from_seifert(v));
          const Verdict general = check_gamma_c_one(KnotInput{"P", delta, sigma});
          REQUIRE(pretzel_corollary_check(k).status == general.status);
          ++checked;
        }
      }
    }
    CHECK(checked > 900);
  }
}
