// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_OBSTRUCT_HPP
#define CROSSCAP_OBSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crosscap/factor.hpp"
#include "crosscap/poly.hpp"

namespace crosscap {

/// Classical invariants of a knot K: its Alexander polynomial and signature.
struct KnotInput {
  std::string name;
  IntPoly alexander;
  std::int64_t signature = 0;
};

enum class ValidationKind {
  kZeroPolynomial,
  kOddSignature,
  kAsymmetric,
  kValueAtOneNotUnit,      // Delta(1) != +-1
  kValueAtMinusOneEven,    // Delta(-1) even
  kDegeneratePretzel,      // D(p,q,r) = -1
};

std::string_view to_string(ValidationKind kind);

struct ValidationFailure {
  ValidationKind kind;
  std::string detail;

  friend bool operator==(const ValidationFailure&, const ValidationFailure&) = default;
};

/// Phi_{2p} has even exponent (possibly zero) although p is an odd prime
/// power dividing q.
struct MissingCyclotomic {
  std::int64_t p = 0;
  unsigned observed_exponent = 0;

  friend bool operator==(const MissingCyclotomic&, const MissingCyclotomic&) = default;
};

/// A symmetric irreducible factor of odd exponent with |delta(-1)| != 1 that
/// is not one of the required Phi_{2p}.
struct BadSymmetricFactor {
  IntPoly poly;
  unsigned multiplicity = 0;
  Integer value_at_minus_one;

  friend bool operator==(const BadSymmetricFactor&, const BadSymmetricFactor&) = default;
};

/// A pretzel knot fails the specialized genus-1 condition on (D, sigma).
struct CorollaryViolation {
  Integer d;
  std::int64_t signature = 0;

  friend bool operator==(const CorollaryViolation&, const CorollaryViolation&) = default;
};

using Reason = std::variant<MissingCyclotomic, BadSymmetricFactor, ValidationFailure, CorollaryViolation>;

enum class Status { kObstructed, kNotObstructed, kInvalid };

std::string_view to_string(Status status);

/// Outcome of the gamma_c = 1 test.
///
/// kObstructed certifies that the concordance crosscap number is at least 2.
/// kNotObstructed certifies nothing: the criterion is necessary, not
/// sufficient. kInvalid means the inputs are not the invariants of a knot.
struct Verdict {
  Status status = Status::kNotObstructed;
  std::int64_t q = 1;
  std::vector<Reason> reasons;
  std::vector<ClassifiedFactor> classified;

  /// One-line human reading of the status.
  std::string describe() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Default Phi_{2p} identification bound for a signature: |sigma| + 4, i.e.
/// q + 3, which covers every divisor of q. CROSSCAP_HALF_INDEX_BOUND
/// overrides it when set to a larger value.
std::int64_t default_half_index_bound(std::int64_t signature);

/// All violated KnotInput invariants; empty when valid.
std::vector<ValidationFailure> validate(const KnotInput& k);

Verdict check_gamma_c_one(const KnotInput& k);

enum class DegreeTwoClass { kPossibleReducibleSigmaZero, kPossibleTrefoilPolynomial, kExcluded };

std::string_view to_string(DegreeTwoClass c);

/// Direct classification for quadratic Alexander polynomials. Throws
/// std::invalid_argument when the input is invalid or not of degree 2.
DegreeTwoClass classify_degree_two(const KnotInput& k);

/// Invariants of the (2, q) cable of a knot J: Alexander polynomial
/// Delta_{2,q}(t) Delta_J(t^2) and signature -(q - 1). Throws
/// std::invalid_argument unless delta_j is a valid Alexander polynomial and q
/// is odd and positive.
KnotInput cable_alexander(const IntPoly& delta_j, std::int64_t q);

/// Invariants of the Fox-Milnor form g(t) g(1/t), signature 0. Throws
/// std::invalid_argument unless g(1) = +-1.
KnotInput slice_product(const IntPoly& g);

}  // namespace crosscap

#endif  // CROSSCAP_OBSTRUCT_HPP
