// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_PRETZEL_HPP
#define CROSSCAP_PRETZEL_HPP

#include <cstdint>

#include "crosscap/obstruct.hpp"
#include "crosscap/poly.hpp"
#include "crosscap/seifert.hpp"

namespace crosscap {

/// Parameters of the three-strand pretzel knot P(p, q, r); all odd.
class PretzelParams {
 public:
  /// Throws std::invalid_argument unless p, q and r are all odd.
  PretzelParams(std::int64_t p, std::int64_t q, std::int64_t r);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t r() const noexcept { return r_; }

 private:
  std::int64_t p_, q_, r_;
};

/// pq + qr + rp. Always 3 mod 4 for odd parameters.
Integer pretzel_d(const PretzelParams& params);

struct PretzelAlexander {
  IntPoly poly;
  /// D = -1: the quadratic collapses to a multiple of t.
  bool degenerate = false;
};

/// Canonical form of ((D+1)/4) t^2 - ((D-1)/2) t + (D+1)/4.
PretzelAlexander pretzel_alexander(const PretzelParams& params);

/// The genus-one Seifert matrix (1/2) [[p+q, q-1], [q+1, q+r]]. Its Alexander
/// polynomial is checked against pretzel_alexander before returning; a
/// mismatch throws std::logic_error.
SeifertMatrix pretzel_seifert(const PretzelParams& params);

/// Signature of [[p+q, q], [q, q+r]]; one of -2, 0, 2.
long pretzel_signature(const PretzelParams& params);

/// Pretzel specialization: gamma_c = 1 forces either sigma = 0 and D = -l^2,
/// or |sigma| = 2 and D = 3. Degenerate parameters (D = -1) give kInvalid.
Verdict pretzel_corollary_check(const PretzelParams& params);

}  // namespace crosscap

#endif  // CROSSCAP_PRETZEL_HPP
