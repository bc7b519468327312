// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "crosscap/cyclo.hpp"
#include "crosscap/factor.hpp"
#include "generators.hpp"

using namespace crosscap;
namespace gen = crosscap::testing;

namespace {

Factorization fz(long content, std::vector<FactorPower> factors) {
  Factorization f;
  f.content = content;
  f.factors = std::move(factors);
  return f;
}

}  // namespace

TEST_SUITE("factor") {
  TEST_CASE("squarefree decomposition") {
    // (t-1)^2 (t+1)^3 (t^2+1)
    const IntPoly p = pow(IntPoly{-1, 1}, 2) * pow(IntPoly{1, 1}, 3) * IntPoly{1, 0, 1};
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == FactorPower{IntPoly{1, 0, 1}, 1});
    CHECK(parts[1] == FactorPower{IntPoly{-1, 1}, 2});
    CHECK(parts[2] == FactorPower{IntPoly{1, 1}, 3});
  }

  TEST_CASE("known factorizations") {
    CHECK(factor_rational(IntPoly{1, 0, -10, 0, 1}) == fz(1, {{IntPoly{1, 0, -10, 0, 1}, 1}}));
    CHECK(factor_rational(IntPoly{-6, 7, -1, -7, 6}) == fz(1, {{IntPoly{-6, 7, -1, -7, 6}, 1}}));
    CHECK(factor_rational(IntPoly{6, 0, 3}) == fz(3, {{IntPoly{2, 0, 1}, 1}}));
    // t^2 factor is a unit in the Laurent ring and is dropped.
    CHECK(factor_rational(IntPoly{0, 0, 4, 0, -8, 0, 4}) ==
          fz(4, {{IntPoly{-1, 1}, 2}, {IntPoly{1, 1}, 2}}));
    const IntPoly mixed =
        pow(IntPoly{1, -1, 1}, 3) * IntPoly{1, -3, 1} * IntPoly{-1, 2} * IntPoly{-2, 1};
    CHECK(factor_rational(mixed) == fz(1, {{IntPoly{-2, 1}, 1},
                                           {IntPoly{-1, 2}, 1},
                                           {IntPoly{1, -3, 1}, 1},
                                           {IntPoly{1, -1, 1}, 3}}));
    const IntPoly t12m1 = IntPoly::monomial(Integer(1), 12) - IntPoly{1};
    CHECK(factor_rational(t12m1) == fz(1, {{IntPoly{-1, 1}, 1},
                                           {IntPoly{1, 1}, 1},
                                           {IntPoly{1, -1, 1}, 1},
                                           {IntPoly{1, 0, 1}, 1},
                                           {IntPoly{1, 1, 1}, 1},
                                           {IntPoly{1, 0, -1, 0, 1}, 1}}));
    CHECK(factor_rational(cyclotomic(30)).factors.size() == 1);
  }

  TEST_CASE("negative leading coefficient is normalized") {
    const Factorization f = factor_rational(IntPoly{1, 0, -1});
    CHECK(f.content == 1);
    CHECK(f.expand() == IntPoly{-1, 0, 1});
  }

  TEST_CASE("t^n - 1 splits into cyclotomic factors") {
    for (std::int64_t n = 1; n <= 60; ++n) {
      const IntPoly p = IntPoly::monomial(Integer(1), static_cast<std::size_t>(n)) - IntPoly{1};
      const Factorization f = factor_rational(p);
      REQUIRE(f.factors.size() == divisors(n).size());
      for (std::int64_t d : divisors(n)) REQUIRE(f.multiplicity_of(cyclotomic(d)) == 1);
    }
  }

  TEST_CASE("large degree with a large coefficient") {
    const IntPoly a = IntPoly{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1} +
                      IntPoly{123456789};
    const IntPoly b = cyclotomic(105);
    const Factorization f = factor_rational(a * b * b);
    CHECK(f.expand() == canonicalize(a * b * b));
    CHECK(f.multiplicity_of(b) == 2);
  }

  TEST_CASE("high-degree torus polynomial splits into its Phi_{2p} factors") {
    // Many modular factors for a poor prime; exercises prime selection and
    // degree-pattern pruning.
    const Factorization f = factor_rational(torus_poly(105));
    REQUIRE(f.factors.size() == 7);
    for (const auto& tf : torus_factorization(105)) CHECK(f.multiplicity_of(tf.phi) == 1);
  }

  TEST_CASE("oracle rejects degrees above its bound") {
    const IntPoly p = IntPoly::monomial(Integer(1), kKroneckerMaxDegree + 1) + IntPoly{1};
    CHECK_THROWS_AS(factor_kronecker(p), std::invalid_argument);
    CHECK_THROWS_AS(factor_rational(IntPoly{}), std::invalid_argument);
  }

  TEST_CASE("Zassenhaus agrees with the Kronecker oracle") {
    gen::Rng rng(20260101);
    for (int i = 0; i < 120; ++i) {
      IntPoly p;
      if (i % 2 == 0) {
        p = gen::random_poly(rng, static_cast<int>(gen::uniform(rng, 1, 8)), -9, 9);
      } else {
        p = gen::random_product(rng, 3, 3, 8, 4).poly;
      }
      REQUIRE_MESSAGE(factor_rational(p) == factor_kronecker(p), to_coeff_string(p));
    }
  }

  TEST_CASE("round trip on composed products") {
    gen::Rng rng(424242);
    for (int i = 0; i < 100; ++i) {
      const gen::Composed c = gen::random_product(rng, 4, 4, 16, 6);
      const Factorization f = factor_rational(c.poly);
      REQUIRE(f.expand() == canonicalize(c.poly));
      for (const auto& part : c.parts) REQUIRE(f.multiplicity_of(part.poly) >= part.multiplicity);
    }
  }

  TEST_CASE("reciprocal pairs factor together") {
    gen::Rng rng(99);
    for (int i = 0; i < 60; ++i) {
      const IntPoly g = gen::random_irreducible(rng, 4, 5);
      const Factorization f = factor_rational(g * reverse_coeffs(g));
      REQUIRE(f.multiplicity_of(g) >= 1);
      REQUIRE(f.multiplicity_of(reciprocal(g)) >= 1);
    }
  }

  TEST_CASE("classification of factors") {
    const Factorization f = factor_rational(cyclotomic(6) * cyclotomic(18) * cyclotomic(30) * IntPoly{1, -3, 1});
    const auto cls = classify_factors(f, 15);
    REQUIRE(cls.size() == 4);
    CHECK_FALSE(cls[0].cyclotomic_half_index.has_value());  // t^2 - 3t + 1
    CHECK(cls[0].value_at_minus_one == 5);
    CHECK(cls[1].cyclotomic_half_index == 3);
    CHECK(cls[1].value_at_minus_one == 3);
    CHECK(cls[2].cyclotomic_half_index == 9);
    CHECK(cls[3].cyclotomic_half_index == 15);
    for (const auto& c : cls) CHECK(c.symmetric);
    // Bound below the index: not identified.
    CHECK_FALSE(classify_factors(f, 13)[3].cyclotomic_half_index.has_value());
    // Phi_4 = t^2 + 1 has an even half index and is never labelled.
    CHECK_FALSE(classify_factors(factor_rational(IntPoly{1, 0, 1}), 99)[0].cyclotomic_half_index.has_value());
  }
}
