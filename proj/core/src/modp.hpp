// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

// Polynomials over F_p for a word-sized prime p. Internal to the factorizer.

#ifndef CROSSCAP_SRC_MODP_HPP
#define CROSSCAP_SRC_MODP_HPP

#include <cstdint>
#include <vector>

#include "crosscap/poly.hpp"

namespace crosscap::detail {

/// Ascending coefficients in [0, p), trimmed.
using ZpPoly = std::vector<std::uint64_t>;

class Zp {
 public:
  explicit Zp(std::uint64_t p) : p_(p) {}

  std::uint64_t prime() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t inv(std::uint64_t a) const;

  ZpPoly reduce(const IntPoly& f) const;
  static void trim(ZpPoly& a);

  ZpPoly add(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly scale(const ZpPoly& a, std::uint64_t c) const;
  ZpPoly monic(const ZpPoly& a) const;
  ZpPoly derivative(const ZpPoly& a) const;

  /// a = q*b + r with deg r < deg b. b must be nonzero.
  void divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) const;
  ZpPoly rem(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly quot(const ZpPoly& a, const ZpPoly& b) const;

  /// Monic gcd; gcd(0, 0) = 0.
  ZpPoly gcd(ZpPoly a, ZpPoly b) const;

  /// s*a + t*b = 1 for coprime a, b, with deg s < deg b and deg t < deg a.
  void bezout(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) const;

  /// Irreducible monic factors of a monic squarefree f (Berlekamp), in a
  /// deterministic order.
  std::vector<ZpPoly> berlekamp(const ZpPoly& f) const;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace crosscap::detail

#endif  // CROSSCAP_SRC_MODP_HPP
