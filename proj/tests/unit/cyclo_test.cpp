// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "crosscap/cyclo.hpp"

using namespace crosscap;

TEST_SUITE("cyclo") {
  TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(10) == IntPoly{1, -1, 1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic(30) == IntPoly{1, 1, 0, -1, -1, -1, 0, 1, 1});
  }

  TEST_CASE("first index with a coefficient outside {-1,0,1}") {
    const IntPoly p = cyclotomic(105);
    CHECK(p.degree() == 48);
    CHECK(p.coeff(7) == -2);
    CHECK(p.coeff(41) == -2);
    for (std::int64_t n = 1; n < 105; ++n) {
      const IntPoly phi = cyclotomic(n);
      for (const auto& c : phi.coeffs()) REQUIRE(abs(c) <= 1);
    }
  }

  TEST_CASE("division and Mobius constructions agree, degree is the totient") {
    for (std::int64_t n = 1; n <= 300; ++n) {
      const IntPoly p = cyclotomic(n);
      REQUIRE(p == cyclotomic_mobius(n));
      REQUIRE(p.degree() == euler_totient(n));
      REQUIRE(p.lead() == 1);
    }
  }

  TEST_CASE("product over divisors is t^n - 1") {
    for (std::int64_t n = 1; n <= 120; ++n) {
      IntPoly prod{1};
      for (std::int64_t d : divisors(n)) prod = prod * cyclotomic(d);
      IntPoly expect = IntPoly::monomial(Integer(1), static_cast<std::size_t>(n)) - IntPoly{1};
      REQUIRE(prod == expect);
    }
  }

  TEST_CASE("cyclotomic polynomials for n >= 2 are symmetric") {
    for (std::int64_t n = 2; n <= 200; ++n) REQUIRE(is_symmetric(cyclotomic(n)));
  }

  TEST_CASE("Phi_{2p}(-1) is the base prime for odd prime powers, a unit otherwise") {
    CHECK(phi_2p_at_minus_one(3) == 3);
    CHECK(phi_2p_at_minus_one(9) == 3);
    CHECK(phi_2p_at_minus_one(25) == 5);
    CHECK(phi_2p_at_minus_one(15) == 1);
    CHECK(phi_2p_at_minus_one(45) == 1);
    CHECK_THROWS_AS(phi_2p_at_minus_one(1), std::invalid_argument);
    CHECK_THROWS_AS(phi_2p_at_minus_one(4), std::invalid_argument);
  }

  TEST_CASE("torus polynomial") {
    CHECK(torus_poly(1) == IntPoly{1});
    CHECK(torus_poly(3) == IntPoly{1, -1, 1});
    CHECK(torus_poly(5) == IntPoly{1, -1, 1, -1, 1});
    CHECK_THROWS_AS(torus_poly(4), std::invalid_argument);
    CHECK_THROWS_AS(torus_poly(-3), std::invalid_argument);
    const auto f = torus_factorization(15);
    REQUIRE(f.size() == 3);
    CHECK(f[0].p == 3);
    CHECK(f[1].p == 5);
    CHECK(f[2].p == 15);
    CHECK(f[2].phi == cyclotomic(30));
    for (std::int64_t q = 1; q <= 99; q += 2) {
      IntPoly prod{1};
      for (const auto& tf : torus_factorization(q)) prod = prod * tf.phi;
      REQUIRE(prod == torus_poly(q));
      REQUIRE(eval(torus_poly(q), Integer(-1)) == q);
    }
  }

  TEST_CASE("integer helpers") {
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(euler_totient(1) == 1);
    CHECK(euler_totient(36) == 12);
    CHECK(mobius(1) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(prime_power_base(27) == 3);
    CHECK(prime_power_base(15) == 0);
    CHECK(prime_power_base(1) == 0);
    CHECK(odd_prime_power_divisors(45) == std::vector<std::int64_t>{3, 5, 9});
    CHECK(odd_prime_power_divisors(1).empty());
    const auto f = factor_integer(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::int64_t, int>{2, 3});
    CHECK(f[2] == std::pair<std::int64_t, int>{5, 1});
  }

  TEST_CASE("index validation") {
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic(-5), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic(kDefaultCycloMaxIndex + 1), std::invalid_argument);
  }

  TEST_CASE("concurrent first use yields identical results") {
    std::vector<IntPoly> results(8);
    {
      std::vector<std::jthread> pool;
      for (std::size_t i = 0; i < results.size(); ++i) {
        pool.emplace_back([&results, i] { results[i] = cyclotomic(2310); });
      }
    }
    for (const auto& r : results) CHECK(r == cyclotomic_mobius(2310));
  }
}
