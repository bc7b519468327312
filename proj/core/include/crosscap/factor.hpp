// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_FACTOR_HPP
#define CROSSCAP_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "crosscap/poly.hpp"

namespace crosscap {

struct FactorPower {
  IntPoly poly;
  unsigned multiplicity = 0;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// content * prod poly^multiplicity equals the input up to a unit +-t^k.
///
/// Every poly is primitive, canonical (positive leading coefficient, no
/// factor of t) and irreducible over Q. Entries are distinct and sorted by
/// degree_lex_less. The sign of the input is absorbed as a unit, so content
/// is always positive.
struct Factorization {
  Integer content{1};
  std::vector<FactorPower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;

  /// Multiplicity of poly among the factors; 0 when absent.
  unsigned multiplicity_of(const IntPoly& poly) const;

  /// content * prod poly^multiplicity.
  IntPoly expand() const;
};

/// Yun's squarefree decomposition of canonicalize(p) with content removed.
/// Returns pairwise coprime squarefree canonical parts in increasing order of
/// multiplicity. Throws std::invalid_argument on zero.
std::vector<FactorPower> squarefree_decomposition(const IntPoly& p);

/// Irreducible factorization over Q by Zassenhaus: squarefree split, Berlekamp
/// modulo a small prime, Hensel lifting, then subset recombination.
/// Throws std::invalid_argument on zero.
Factorization factor_rational(const IntPoly& p);

/// Degree bound accepted by factor_kronecker.
inline constexpr int kKroneckerMaxDegree = 10;

/// Brute-force factorization by Kronecker's interpolation method. Shares
/// nothing with factor_rational beyond the ring arithmetic; serves as its
/// oracle. Throws std::invalid_argument on zero input or when
/// deg p > kKroneckerMaxDegree.
Factorization factor_kronecker(const IntPoly& p);

struct ClassifiedFactor {
  IntPoly poly;
  unsigned multiplicity = 0;
  bool symmetric = false;
  Integer value_at_minus_one;
  /// p when poly == cyclotomic(2p) for an odd p <= the bound given to
  /// classify_factors.
  std::optional<std::int64_t> cyclotomic_half_index;

  friend bool operator==(const ClassifiedFactor&, const ClassifiedFactor&) = default;
};

std::vector<ClassifiedFactor> classify_factors(const Factorization& f,
                                               std::int64_t half_index_bound);

}  // namespace crosscap

#endif  // CROSSCAP_FACTOR_HPP
