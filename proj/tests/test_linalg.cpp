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

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "hermrank/linalg.hpp"
#include "test_support.hpp"

using namespace hermrank;
using namespace hermrank::testing;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

const GaussianRational I = GaussianRational::i();

// Independent floating-point oracle: eigenvalue signs of a well-conditioned
// Hermitian matrix with exactly known rank.
Signature eigen_signature(const HermitianMatrix& c) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = {c(i, j).re().to_double(), c(i, j).im().to_double()};
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues();
  const double tol = 1e-8 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  Signature s;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (ev(k) > tol) {
      ++s.positive;
    } else if (ev(k) < -tol) {
      ++s.negative;
    } else {
      ++s.zero;
    }
  }
  return s;
}

// C = V diag(eps) V^dagger with V of full column rank: rank exactly p + q.
HermitianMatrix low_rank(Rng& rng, std::size_t dim, std::size_t p, std::size_t q) {
  for (;;) {
    Matrix v(dim, p + q);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < p + q; ++j) v(i, j) = random_gaussian(rng, 3);
    if (matrix_rank(v) != p + q) continue;
    std::vector<Rational> d(p + q, Rational(1));
    for (std::size_t k = p; k < p + q; ++k) d[k] = Rational(-1);
    return HermitianMatrix(v * Matrix::diagonal(d) * v.adjoint());
  }
}

void check_diagonalization(const HermitianMatrix& c) {
  const CongruenceDiagonalization cd = congruence_diagonalize(c);
  const Matrix& p = cd.transform;
  const Matrix& q = cd.inverse_transform;
  REQUIRE(p * q == Matrix::identity(c.dim()));
  REQUIRE(p.adjoint() * c.matrix() * p == Matrix::diagonal(cd.diagonal));
  // (P^dagger)^{-1} D P^{-1} = C.
  REQUIRE(q.adjoint() * Matrix::diagonal(cd.diagonal) * q == c.matrix());
  REQUIRE(cd.signature() == signature(c));
  REQUIRE(cd.signature().rank() == matrix_rank(c.matrix()));
}

}  // namespace

TEST_CASE("diagonal input is already diagonal") {
  const HermitianMatrix c(Matrix::diagonal({2, -3, 0}));
  const auto cd = congruence_diagonalize(c);
  CHECK(cd.diagonal == std::vector<Rational>{2, -3, 0});
  CHECK(cd.transform == Matrix::identity(3));
  CHECK(signature(c) == Signature{1, 1, 1});
}

TEST_CASE("zero diagonal needs the off-diagonal repair") {
  const HermitianMatrix swap(from_rows({{0, 1}, {1, 0}}));
  CHECK(signature(swap) == Signature{1, 1, 0});
  check_diagonalization(swap);
  const HermitianMatrix imag(from_rows({{0, I}, {-I, 0}}));
  CHECK(signature(imag) == Signature{1, 1, 0});
  check_diagonalization(imag);
}

TEST_CASE("identity and rank examples") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(signature(HermitianMatrix(Matrix::identity(n))) == Signature{n, 0, 0});
    CHECK(matrix_rank(Matrix::identity(n)) == n);
  }
  CHECK(matrix_rank(Matrix(3, 4)) == 0);
  CHECK(matrix_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(matrix_rank(Matrix(0, 0)) == 0);
}

TEST_CASE("non-Hermitian input is rejected") {
  CHECK_THROWS_AS(HermitianMatrix(from_rows({{0, 1}, {2, 0}})), Error);
  CHECK_THROWS_AS(HermitianMatrix(from_rows({{I, 0}, {0, 1}})), Error);
  CHECK_THROWS_AS(HermitianMatrix(Matrix(2, 3)), Error);
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), Error);
}

TEST_CASE("nullspace spans the kernel") {
  const Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, I, 0}});
  const Matrix k = nullspace(m);
  CHECK(k.cols() == 3 - matrix_rank(m));
  CHECK((m * k).is_zero());
  CHECK(matrix_rank(k) == k.cols());
  CHECK(nullspace(Matrix::identity(3)).cols() == 0);
  CHECK(nullspace(Matrix(2, 4)).cols() == 4);
}

TEST_CASE("signature agrees with a floating-point eigenvalue oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 9));
    const auto p = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(dim)));
    const auto q = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(dim - p)));
    const HermitianMatrix c = low_rank(rng, dim, p, q);
    CAPTURE(trial);
    CHECK(signature(c) == Signature{p, q, dim - p - q});
    CHECK(eigen_signature(c) == signature(c));
    check_diagonalization(c);
  }
}

TEST_CASE("Sylvester invariance under random congruences") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 8));
    const HermitianMatrix c = random_hermitian_matrix(rng, dim, 5, static_cast<int>(uniform_int(rng, 0, 90)));
    const Signature s = signature(c);
    check_diagonalization(c);
    for (int k = 0; k < 3; ++k) {
      const HermitianMatrix moved = c.congruent(random_invertible(rng, dim, 2));
      REQUIRE(signature(moved) == s);
      check_diagonalization(moved);
    }
  }
}

TEST_CASE("multimodular inertia matches elimination") {
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 40));
    const auto p = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(dim)));
    const auto q = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(dim - p)));
    const HermitianMatrix c = low_rank(rng, dim, p, q);
    CAPTURE(trial);
    CHECK(signature_multimodular(c) == Signature{p, q, dim - p - q});
    CHECK(eigen_signature(c) == Signature{p, q, dim - p - q});
  }
  for (int trial = 0; trial < 40; ++trial) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 30));
    HermitianMatrix c = random_hermitian_matrix(rng, dim, 4, static_cast<int>(uniform_int(rng, 0, 95)));
    if (trial % 3 == 0) c = c.congruent(Matrix::diagonal(std::vector<Rational>(dim, Rational(2, 7))));
    CAPTURE(trial);
    CHECK(signature_multimodular(c) == signature_by_elimination(c));
  }
}

TEST_CASE("multimodular inertia on zero diagonals and zero matrices") {
  // [[0, B], [B^dagger, 0]] has signature (k, k) with k = rank B.
  Rng rng(23);
  for (std::size_t k : {1u, 5u, 20u}) {
    Matrix b(20, 20);
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = 0; j < k; ++j) b(i, j) = random_gaussian(rng, 3);
    const std::size_t rank = matrix_rank(b);
    Matrix m(40, 40);
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = 0; j < 20; ++j) {
        m(i, 20 + j) = b(i, j);
        m(20 + j, i) = b(i, j).conj();
      }
    const HermitianMatrix c(m);
    CHECK(signature_multimodular(c) == Signature{rank, rank, 40 - 2 * rank});
    CHECK(signature_by_elimination(c) == signature_multimodular(c));
  }
  CHECK(signature_multimodular(HermitianMatrix(Matrix(30, 30))) == Signature{0, 0, 30});
  CHECK(signature_multimodular(HermitianMatrix(from_rows({{0, I}, {-I, 0}}))) == Signature{1, 1, 0});
}
