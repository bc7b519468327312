// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/seifert.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

namespace crosscap {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : r) data_.emplace_back(x);
  }
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("IntMatrix +: shape");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("IntMatrix -: shape");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix *: shape");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a.at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a.at(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = std::move(v);
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

SeifertMatrix::SeifertMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw std::invalid_argument("SeifertMatrix: matrix is not square");
}

Integer SeifertMatrix::skew_determinant() const { return determinant(m_ - m_.transpose()); }

bool SeifertMatrix::knot_valid() const { return abs(skew_determinant()) == 1; }

namespace {

void require_knot_valid(const SeifertMatrix& v, const char* who) {
  const Integer d = v.skew_determinant();
  if (abs(d) != 1) {
    throw InvalidSeifertMatrix(std::string(who) + ": det(V - V^T) = " + d.get_str() +
                               ", expected +-1");
  }
}

constexpr std::size_t kMaxExpansionSize = 16;

// Laplace expansion along successive rows, memoized on the set of columns
// already used (the row index is implied by its popcount). O(n 2^n)
// polynomial products; adequate at desk scale. A fraction-free Bareiss
// elimination over Z[t] is the upgrade path for larger genus.
class PolyDeterminant {
 public:
  explicit PolyDeterminant(std::vector<IntPoly> entries, std::size_t n)
      : entries_(std::move(entries)), n_(n) {}

  IntPoly run() { return minor(0, 0); }

 private:
  IntPoly minor(std::size_t row, std::uint32_t used) {
    if (row == n_) return IntPoly{1};
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    IntPoly acc;
    int parity = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (used & (1U << j)) continue;
      const IntPoly& e = entries_[row * n_ + j];
      if (!e.is_zero()) {
        IntPoly term = e * minor(row + 1, used | (1U << j));
        acc = parity ? acc - term : acc + term;
      }
      parity ^= 1;
    }
    memo_.emplace(used, acc);
    return acc;
  }

  std::vector<IntPoly> entries_;
  std::size_t n_;
  std::unordered_map<std::uint32_t, IntPoly> memo_;
};

}  // namespace

IntPoly alexander_from_seifert(const SeifertMatrix& v) {
  require_knot_valid(v, "alexander_from_seifert");
  const std::size_t n = v.size();
  if (n > kMaxExpansionSize) {
    throw std::invalid_argument("alexander_from_seifert: matrices above " +
                                std::to_string(kMaxExpansionSize) + "x" +
                                std::to_string(kMaxExpansionSize) + " are not supported");
  }
  const IntMatrix& m = v.matrix();
  std::vector<IntPoly> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // V - t V^T
      entries.emplace_back(std::vector<Integer>{m.at(i, j), -m.at(j, i)});
    }
  }
  return canonicalize(PolyDeterminant(std::move(entries), n).run());
}

long signature_from_seifert(const SeifertMatrix& v) {
  require_knot_valid(v, "signature_from_seifert");
  return exact_symmetric_signature(v.matrix() + v.matrix().transpose());
}

Integer determinant_from_seifert(const SeifertMatrix& v) {
  return abs(eval(alexander_from_seifert(v), Integer{-1}));
}

long exact_symmetric_signature(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("exact_symmetric_signature: matrix is not symmetric");
  const std::size_t n = m.rows();
  std::vector<mpq_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * n + j]; };
  // Symmetric permutation P A P^T exchanging indices i and j.
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
  };

  long signature = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(at(piv, piv)) == 0) ++piv;
    if (piv == n) {
      // Zero diagonal: fold an off-diagonal entry onto the diagonal by the
      // congruence e_i -> e_i + e_j, which puts 2 a_ij at (i, i).
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sgn(at(i, j)) != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) at(bi, c) += at(bj, c);
      for (std::size_t r = 0; r < n; ++r) at(r, bi) += at(r, bj);
      piv = bi;
    }
    swap_index(k, piv);
    const mpq_class pivot = at(k, k);
    signature += sgn(pivot);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(at(r, k)) == 0) continue;
      const mpq_class f = at(r, k) / pivot;
      for (std::size_t c = k + 1; c < n; ++c) at(r, c) -= f * at(k, c);
      at(r, k) = 0;
    }
    for (std::size_t c = k + 1; c < n; ++c) at(k, c) = 0;
  }
  return signature;
}

}  // namespace crosscap
