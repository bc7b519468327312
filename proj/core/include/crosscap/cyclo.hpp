// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_CYCLO_HPP
#define CROSSCAP_CYCLO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "crosscap/poly.hpp"

namespace crosscap {

/// Largest index cyclotomic() will build unless overridden through the
/// CROSSCAP_CYCLO_MAX_INDEX environment variable.
inline constexpr std::int64_t kDefaultCycloMaxIndex = 10000;

/// The n-th cyclotomic polynomial, n >= 1.
///
/// Built by exact division, Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d,
/// and memoized in a process-wide cache. The cache is guarded by a
/// reader/writer lock, so concurrent calls from any number of threads are
/// safe. Throws std::invalid_argument for n < 1 or n above the index cap.
IntPoly cyclotomic(std::int64_t n);

/// Independent construction through the Moebius product
/// prod_{d | n} (t^{n/d} - 1)^{mu(d)}. Uncached; used to cross-check
/// cyclotomic().
IntPoly cyclotomic_mobius(std::int64_t n);

/// (t^q + 1) / (t + 1), the Alexander polynomial of the (2, q) torus knot.
/// q must be odd and positive.
IntPoly torus_poly(std::int64_t q);

struct TorusFactor {
  std::int64_t p;  // divisor of q, p > 1
  IntPoly phi;     // cyclotomic(2p)
};

/// One Phi_{2p} per divisor p > 1 of q, ascending in p. The product of the
/// entries is torus_poly(q).
std::vector<TorusFactor> torus_factorization(std::int64_t q);

/// Ascending divisors of q of the form s^n for a single odd prime s, n >= 1.
std::vector<std::int64_t> odd_prime_power_divisors(std::int64_t q);

/// Phi_{2p}(-1) for odd p >= 3, by evaluation.
Integer phi_2p_at_minus_one(std::int64_t p);

/// Helpers shared with the engine and tests.
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n);
std::int64_t euler_totient(std::int64_t n);
int mobius(std::int64_t n);

/// If n = s^k for a prime s and k >= 1, returns s; otherwise 0.
std::int64_t prime_power_base(std::int64_t n);

}  // namespace crosscap

#endif  // CROSSCAP_CYCLO_HPP
