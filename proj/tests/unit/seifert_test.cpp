// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <optional>
#include <stdexcept>

#include "crosscap/seifert.hpp"
#include "generators.hpp"

using namespace crosscap;
namespace gen = crosscap::testing;

namespace {

IntMatrix leading_block(const IntMatrix& m, std::size_t k) {
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.at(i, j) = m.at(i, j);
  }
  return out;
}

// Jacobi's rule: with all leading principal minors nonzero, the number of
// negative eigenvalues equals the number of sign changes in 1, d1, ..., dn.
std::optional<long> signature_by_minors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  long changes = 0;
  int prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const int s = sgn(determinant(leading_block(m, k)));
    if (s == 0) return std::nullopt;
    if (s != prev) ++changes;
    prev = s;
  }
  return static_cast<long>(n) - 2 * changes;
}

IntMatrix scaled_by(const IntMatrix& v, long x) {
  IntMatrix out = v;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < v.cols(); ++j) out.at(i, j) = v.at(i, j) - x * v.at(j, i);
  }
  return out;
}

}  // namespace

TEST_SUITE("seifert") {
  TEST_CASE("matrix basics") {
    const IntMatrix a{{1, 2}, {3, 4}};
    CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(a * a == IntMatrix{{7, 10}, {15, 22}});
    CHECK(a + a.transpose() == IntMatrix{{2, 5}, {5, 8}});
    CHECK(determinant(a) == -2);
    CHECK(determinant(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == -2);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS(IntMatrix{{1, 2}, {3}});
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{1, 2, 3}}), std::invalid_argument);
  }

  TEST_CASE("named knots") {
    const SeifertMatrix trefoil(IntMatrix{{-1, 1}, {0, -1}});
    CHECK(trefoil.knot_valid());
    CHECK(alexander_from_seifert(trefoil) == IntPoly{1, -1, 1});
    CHECK(signature_from_seifert(trefoil) == -2);
    CHECK(determinant_from_seifert(trefoil) == 3);

    const SeifertMatrix fig8(IntMatrix{{-1, 1}, {0, 1}});
    CHECK(alexander_from_seifert(fig8) == IntPoly{1, -3, 1});
    CHECK(signature_from_seifert(fig8) == 0);
    CHECK(determinant_from_seifert(fig8) == 5);

    const SeifertMatrix five2(IntMatrix{{1, 1}, {2, 4}});
    CHECK(alexander_from_seifert(five2) == IntPoly{2, -3, 2});
    CHECK(signature_from_seifert(five2) == 2);
    CHECK(determinant_from_seifert(five2) == 7);

    const SeifertMatrix six1(IntMatrix{{-1, 1}, {0, 2}});
    CHECK(alexander_from_seifert(six1) == IntPoly{2, -5, 2});
    CHECK(signature_from_seifert(six1) == 0);
    CHECK(determinant_from_seifert(six1) == 9);
  }

  TEST_CASE("connected sum of two trefoils") {
    const SeifertMatrix v(IntMatrix{{-1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
    CHECK(alexander_from_seifert(v) == pow(IntPoly{1, -1, 1}, 2));
    CHECK(signature_from_seifert(v) == -4);
  }

  TEST_CASE("invalid Seifert matrices are rejected") {
    const SeifertMatrix v(IntMatrix{{1, 0}, {0, 1}});
    CHECK_FALSE(v.knot_valid());
    CHECK(v.skew_determinant() == 0);
    CHECK_THROWS_AS(alexander_from_seifert(v), InvalidSeifertMatrix);
    CHECK_THROWS_AS(signature_from_seifert(v), InvalidSeifertMatrix);
  }

  TEST_CASE("exact symmetric signature") {
    CHECK(exact_symmetric_signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(exact_symmetric_signature(IntMatrix{{0, 2}, {2, 0}}) == 0);
    CHECK(exact_symmetric_signature(IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}) == 0);
    CHECK(exact_symmetric_signature(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}) == 2);
    CHECK(exact_symmetric_signature(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}) == 1);
    CHECK(exact_symmetric_signature(IntMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(exact_symmetric_signature(IntMatrix{{2, 3}, {3, 8}}) == 2);
    CHECK(exact_symmetric_signature(IntMatrix{{-2, 1}, {1, -2}}) == -2);
    CHECK_THROWS_AS(exact_symmetric_signature(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
  }

  TEST_CASE("random knot-valid Seifert matrices") {
    gen::Rng rng(31337);
    for (int i = 0; i < 150; ++i) {
      const SeifertMatrix v = gen::random_seifert(rng, 3, 3);
      REQUIRE(v.knot_valid());
      const IntPoly delta = alexander_from_seifert(v);
      REQUIRE(is_symmetric(delta));
      REQUIRE(abs(eval(delta, Integer(1))) == 1);
      REQUIRE(mpz_odd_p(eval(delta, Integer(-1)).get_mpz_t()));

      const IntMatrix sym = v.matrix() + v.matrix().transpose();
      REQUIRE(determinant_from_seifert(v) == abs(determinant(sym)));

      const long sigma = signature_from_seifert(v);
      REQUIRE(sigma % 2 == 0);
      if (auto oracle = signature_by_minors(sym)) REQUIRE(sigma == *oracle);

      // Delta(x) matches det(V - x V^T) up to a unit +-x^k.
      const std::size_t n = v.size();
      const auto shift = static_cast<unsigned long>((static_cast<int>(n) - delta.degree()) / 2);
      int sign = 0;
      for (long x = 2; x <= 6; ++x) {
        const Integer direct = determinant(scaled_by(v.matrix(), x));
        Integer xk;
        mpz_ui_pow_ui(xk.get_mpz_t(), static_cast<unsigned long>(x), shift);
        const Integer via_poly = xk * eval(delta, Integer(x));
        if (sign == 0 && sgn(via_poly) != 0) sign = direct == via_poly ? 1 : -1;
        REQUIRE(direct == sign * via_poly);
      }

      // Unimodular congruence leaves both invariants unchanged.
      const IntMatrix p = gen::random_unimodular(rng, n, 5);
      const SeifertMatrix w(p * v.matrix() * p.transpose());
      REQUIRE(alexander_from_seifert(w) == delta);
      REQUIRE(signature_from_seifert(w) == sigma);
    }
  }

  TEST_CASE("signature of random symmetric matrices against leading minors") {
    gen::Rng rng(5);
    int compared = 0;
    for (int i = 0; i < 300; ++i) {
      const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
      IntMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
          m.at(r, c) = gen::uniform(rng, -4, 4);
          m.at(c, r) = m.at(r, c);
        }
      }
      const long s = exact_symmetric_signature(m);
      const IntMatrix p = gen::random_unimodular(rng, n, 6);
      REQUIRE(exact_symmetric_signature(p * m * p.transpose()) == s);
      if (auto oracle = signature_by_minors(m)) {
        REQUIRE(s == *oracle);
        ++compared;
      }
    }
    CHECK(compared > 100);
  }
}
