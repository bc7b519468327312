// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_SEIFERT_HPP
#define CROSSCAP_SEIFERT_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "crosscap/poly.hpp"

namespace crosscap {

/// A matrix failed the knot-validity check det(V - V^T) = +-1.
class InvalidSeifertMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged rows.
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
Integer determinant(const IntMatrix& m);

/// Square integer matrix V. Knot-validity, det(V - V^T) = +-1, is checked by
/// the derivations below rather than at construction, so malformed inputs
/// can still be loaded and reported on.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  /// Throws std::invalid_argument when m is not square.
  explicit SeifertMatrix(IntMatrix m);

  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }

  /// det(V - V^T).
  Integer skew_determinant() const;
  bool knot_valid() const;

 private:
  IntMatrix m_;
};

/// canonicalize(det(V - t V^T)). Throws InvalidSeifertMatrix unless V is
/// knot-valid.
IntPoly alexander_from_seifert(const SeifertMatrix& v);

/// Signature of V + V^T. Throws InvalidSeifertMatrix unless V is knot-valid.
long signature_from_seifert(const SeifertMatrix& v);

/// |Delta(-1)|. Throws InvalidSeifertMatrix unless V is knot-valid.
Integer determinant_from_seifert(const SeifertMatrix& v);

/// (#positive - #negative) eigenvalues of a symmetric integer matrix, by exact
/// rational congruence diagonalization. Throws std::invalid_argument when m is
/// not symmetric.
long exact_symmetric_signature(const IntMatrix& m);

}  // namespace crosscap

#endif  // CROSSCAP_SEIFERT_HPP
