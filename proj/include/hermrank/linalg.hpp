// Copyright 2026 The hermrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense exact matrices over the Gaussian rationals, congruence
// diagonalization of Hermitian matrices and inertia counting.

#pragma once

#include <cstddef>
#include <vector>

#include "hermrank/exact.hpp"

namespace hermrank {

/// Row-major dense matrix of GaussianRational.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Conjugate transpose.
  Matrix adjoint() const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// A square matrix with entries(j,i) == conj(entries(i,j)); checked on construction.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Throws NotHermitian if the symmetry fails.
  explicit HermitianMatrix(Matrix m);

  std::size_t dim() const noexcept { return m_.rows(); }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

  /// S^dagger * this * S; the result is Hermitian by construction.
  HermitianMatrix congruent(const Matrix& s) const;

 private:
  Matrix m_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t rank() const noexcept { return positive + negative; }
  std::size_t dim() const noexcept { return positive + negative + zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// P^dagger * C * P = diag(diagonal). `inverse_transform` is P^{-1}, tracked
/// alongside P so callers never have to invert.
struct CongruenceDiagonalization {
  Matrix transform;
  Matrix inverse_transform;
  std::vector<Rational> diagonal;

  Signature signature() const;
};

/// Symmetric elimination. Nonzero diagonal pivots of smallest bit size are
/// used first; when only off-diagonal mass remains at (i, j), e_i is replaced
/// by e_i + lambda e_j with lambda = 1 if Re c != 0 else i, which creates the
/// real pivot 2 Re(lambda c). Everything stays in the Gaussian rationals.
CongruenceDiagonalization congruence_diagonalize(const HermitianMatrix& c);

/// Inertia of c. Small matrices use signature_by_elimination, larger ones
/// signature_multimodular; both are exact.
Signature signature(const HermitianMatrix& c);

/// Same elimination as congruence_diagonalize without the transform
/// bookkeeping.
Signature signature_by_elimination(const HermitianMatrix& c);

/// Inertia from the signs of leading principal minors along a pivot order
/// found modulo a prime, with the minors recovered exactly by Chinese
/// remaindering and the rank certified by a Hadamard bound.
Signature signature_multimodular(const HermitianMatrix& c);

/// Exact rank by fraction-preserving Gaussian elimination.
std::size_t matrix_rank(const Matrix& m);

/// Basis of { x : m x = 0 }, one vector per column of the result.
/// Returns a cols x 0 matrix when the kernel is trivial.
Matrix nullspace(const Matrix& m);

}  // namespace hermrank
