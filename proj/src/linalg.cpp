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

#include "hermrank/linalg.hpp"

#include <limits>
#include <string>
#include <utility>

namespace hermrank {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = GaussianRational(d[i]);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product " + std::to_string(a.rows_) + "x" +
                                                  std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                                                  "x" + std::to_string(b.cols_));
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const auto& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b(l, j);
        if (!y.is_zero()) out(i, j).add_mul(x, y);
      }
    }
  }
  return out;
}

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorKind::DimensionMismatch, "Hermitian matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i; j < m_.cols(); ++j) {
      if (m_(j, i) != m_(i, j).conj()) {
        throw Error(ErrorKind::NotHermitian,
                    "entry (" + std::to_string(j) + "," + std::to_string(i) + ") is not the conjugate of (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

HermitianMatrix HermitianMatrix::congruent(const Matrix& s) const { return HermitianMatrix(s.adjoint() * m_ * s); }

Signature CongruenceDiagonalization::signature() const {
  Signature sig;
  for (const auto& d : diagonal) {
    const int sg = d.sign();
    if (sg > 0) {
      ++sig.positive;
    } else if (sg < 0) {
      ++sig.negative;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

namespace {

// Works on a full (both triangles) copy of the matrix. With Track set, P and
// its inverse Q are updated by the same elementary operations so that
// P^dagger C P = diag(D) and Q = P^{-1} hold after every step.
template <bool Track>
class SymmetricEliminator {
 public:
  explicit SymmetricEliminator(const HermitianMatrix& c) : a_(c.matrix()), n_(c.dim()) {
    if constexpr (Track) {
      p_ = Matrix::identity(n_);
      q_ = Matrix::identity(n_);
    }
    diag_.reserve(n_);
  }

  void run() {
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t pivot = find_diagonal_pivot(k);
      if (pivot == npos) {
        const auto [i, j] = find_off_diagonal(k);
        if (i == npos) {
          diag_.resize(n_);
          return;
        }
        repair(i, j);
        pivot = i;
      }
      swap_indices(k, pivot);
      eliminate(k);
    }
  }

  std::vector<Rational>& diagonal() { return diag_; }
  Matrix& transform() { return p_; }
  Matrix& inverse_transform() { return q_; }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::size_t find_diagonal_pivot(std::size_t k) const {
    std::size_t best = npos;
    std::size_t best_bits = npos;
    for (std::size_t i = k; i < n_; ++i) {
      const auto& d = a_(i, i).re();
      if (d.is_zero()) continue;
      const std::size_t bits = d.bit_size();
      if (bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    return best;
  }

  std::pair<std::size_t, std::size_t> find_off_diagonal(std::size_t k) const {
    for (std::size_t i = k; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!a_(i, j).is_zero()) return {i, j};
    return {npos, npos};
  }

  // e_i <- e_i + lambda e_j.
  void repair(std::size_t i, std::size_t j) {
    const GaussianRational lambda = a_(i, j).re().is_zero() ? GaussianRational::i() : GaussianRational(1);
    const GaussianRational lambda_bar = lambda.conj();
    for (std::size_t r = 0; r < n_; ++r) a_(r, i).add_mul(lambda, a_(r, j));
    for (std::size_t c = 0; c < n_; ++c) a_(i, c).add_mul(lambda_bar, a_(j, c));
    if constexpr (Track) {
      for (std::size_t r = 0; r < n_; ++r) p_(r, i).add_mul(lambda, p_(r, j));
      for (std::size_t c = 0; c < n_; ++c) q_(j, c).sub_mul(lambda, q_(i, c));
    }
  }

  void swap_indices(std::size_t k, std::size_t pivot) {
    if (k == pivot) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap(a_(k, c), a_(pivot, c));
    for (std::size_t r = 0; r < n_; ++r) std::swap(a_(r, k), a_(r, pivot));
    if constexpr (Track) {
      for (std::size_t r = 0; r < n_; ++r) std::swap(p_(r, k), p_(r, pivot));
      for (std::size_t c = 0; c < n_; ++c) std::swap(q_(k, c), q_(pivot, c));
    }
  }

  void eliminate(std::size_t k) {
    const Rational pivot = a_(k, k).re();
    const Rational pivot_inv = pivot.inverse();
    std::vector<std::size_t> cols;
    std::vector<GaussianRational> mu;
    for (std::size_t j = k + 1; j < n_; ++j) {
      if (a_(k, j).is_zero()) continue;
      cols.push_back(j);
      mu.push_back(a_(k, j) * GaussianRational(pivot_inv));
    }
    // Schur complement on the upper triangle, mirrored below.
    for (std::size_t x = 0; x < cols.size(); ++x) {
      const std::size_t i = cols[x];
      const GaussianRational a_ik = a_(i, k);
      for (std::size_t y = x; y < cols.size(); ++y) {
        const std::size_t j = cols[y];
        a_(i, j).sub_mul(a_ik, mu[y]);
        if (j != i) a_(j, i) = a_(i, j).conj();
      }
    }
    if constexpr (Track) {
      for (std::size_t y = 0; y < cols.size(); ++y) {
        const std::size_t j = cols[y];
        for (std::size_t r = 0; r < n_; ++r) {
          if (!p_(r, k).is_zero()) p_(r, j).sub_mul(mu[y], p_(r, k));
        }
        for (std::size_t c = 0; c < n_; ++c) {
          if (!q_(j, c).is_zero()) q_(k, c).add_mul(mu[y], q_(j, c));
        }
      }
    }
    for (const std::size_t j : cols) {
      a_(k, j) = GaussianRational();
      a_(j, k) = GaussianRational();
    }
    diag_.push_back(pivot);
  }

  Matrix a_;
  std::size_t n_;
  Matrix p_;
  Matrix q_;
  std::vector<Rational> diag_;
};

}  // namespace

CongruenceDiagonalization congruence_diagonalize(const HermitianMatrix& c) {
  SymmetricEliminator<true> elim(c);
  elim.run();
  return {std::move(elim.transform()), std::move(elim.inverse_transform()), std::move(elim.diagonal())};
}

Signature signature(const HermitianMatrix& c) {
  constexpr std::size_t kMultimodularFrom = 24;
  return c.dim() >= kMultimodularFrom ? signature_multimodular(c) : signature_by_elimination(c);
}

Signature signature_by_elimination(const HermitianMatrix& c) {
  SymmetricEliminator<false> elim(c);
  elim.run();
  Signature sig;
  for (const auto& d : elim.diagonal()) {
    const int sg = d.sign();
    if (sg > 0) {
      ++sig.positive;
    } else if (sg < 0) {
      ++sig.negative;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

namespace {

// Reduces m in place to row echelon form (reduced when `reduced` is set) and
// returns the pivot column of each nonzero row.
std::vector<std::size_t> echelon(Matrix& m, bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const std::size_t bits = m(r, col).bit_size();
      if (bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));

    const GaussianRational inv = m(row, col).inverse();
    if (reduced) {
      for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t c = col + 1; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) support.push_back(c);

    const std::size_t first = reduced ? 0 : row + 1;
    for (std::size_t r = first; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational f = reduced ? m(r, col) : m(r, col) * inv;
      for (const std::size_t c : support) m(r, c).sub_mul(f, m(row, c));
      m(r, col) = GaussianRational();
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(const Matrix& m) {
  Matrix work = m;
  return echelon(work, false).size();
}

Matrix nullspace(const Matrix& m) {
  Matrix work = m;
  const auto pivots = echelon(work, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = GaussianRational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], f) = -work(r, free_cols[f]);
  }
  return basis;
}

}  // namespace hermrank
