// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_POLY_HPP
#define CROSSCAP_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosscap {

using Integer = mpz_class;

/// Divisor was the zero polynomial.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Division over the integers left a nonzero remainder.
class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order: coeffs()[i] is the
/// coefficient of t^i. The representation is always trimmed, so the last
/// stored coefficient is nonzero; the zero polynomial has no coefficients.
/// Values are immutable once built and may be shared across threads.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Leading coefficient. Zero for the zero polynomial.
  const Integer& lead() const noexcept;

  /// Coefficient of t^i; zero beyond the degree.
  const Integer& coeff(std::size_t i) const noexcept;

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Integer& c, const IntPoly& a);

inline IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly pow(const IntPoly& p, unsigned k);

/// Exact quotient a / b over the integers.
/// Throws DivisionByZero when b is zero and NonExactDivision when b does not
/// divide a in Z[t].
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

/// Divides every coefficient by c; throws NonExactDivision if any is not a
/// multiple of c.
IntPoly div_exact(const IntPoly& a, const Integer& c);

/// True when b divides a in Z[t]. b must be nonzero.
bool divides(const IntPoly& b, const IntPoly& a);

Integer eval(const IntPoly& p, const Integer& x);

/// p(t) -> p(t^k), k >= 1.
IntPoly compose_power(const IntPoly& p, unsigned k);

/// Representative of p up to units +-t^k: no factor of t and positive leading
/// coefficient. Throws std::invalid_argument on the zero polynomial.
IntPoly canonicalize(const IntPoly& p);

/// Coefficient reversal t^deg p(1/t) without any normalization.
IntPoly reverse_coeffs(const IntPoly& p);

/// Canonicalized coefficient reversal.
IntPoly reciprocal(const IntPoly& p);

/// Self-reciprocal up to units.
bool is_symmetric(const IntPoly& p);

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
Integer content(const IntPoly& p);

/// p / content(p), with the sign of p kept.
IntPoly primitive_part(const IntPoly& p);

IntPoly derivative(const IntPoly& p);

/// lead(b)^(deg a - deg b + 1) * a reduced modulo b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
/// gcd(0, 0) is zero.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Orders by degree, then lexicographically on ascending coefficients.
bool degree_lex_less(const IntPoly& a, const IntPoly& b);

/// Debug rendering of the coefficient list, e.g. "[1, -1, 1]".
std::string to_coeff_string(const IntPoly& p);

}  // namespace crosscap

#endif  // CROSSCAP_POLY_HPP
