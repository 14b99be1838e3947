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

// Random generators shared by the unit and acceptance suites.

#pragma once

#include <vector>

#include "hermrank/linalg.hpp"
#include "hermrank/poly.hpp"
#include "hermrank/random.hpp"

namespace hermrank::testing {

inline Rational random_rational(Rng& rng, long range, long max_den = 1) {
  return Rational(BigInt(uniform_int(rng, -range, range)), BigInt(uniform_int(rng, 1, max_den)));
}

inline GaussianRational random_gaussian(Rng& rng, long range, long max_den = 1) {
  return {random_rational(rng, range, max_den), random_rational(rng, range, max_den)};
}

/// Dense random Hermitian matrix; `zero_percent` of the upper entries are zero.
inline HermitianMatrix random_hermitian_matrix(Rng& rng, std::size_t dim, long range, int zero_percent = 0) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      if (uniform_int(rng, 0, 99) < zero_percent) continue;
      if (i == j) {
        m(i, i) = GaussianRational(random_rational(rng, range));
      } else {
        m(i, j) = random_gaussian(rng, range);
        m(j, i) = m(i, j).conj();
      }
    }
  }
  return HermitianMatrix(std::move(m));
}

/// Random invertible square matrix with small Gaussian-integer entries.
inline Matrix random_invertible(Rng& rng, std::size_t dim, long range) {
  for (;;) {
    Matrix s(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) s(i, j) = random_gaussian(rng, range);
    if (matrix_rank(s) == dim) return s;
  }
}

/// Random bihomogeneous Hermitian polynomial of bidegree (d, d).
inline HermitianPoly random_bihomogeneous(Rng& rng, std::size_t n, int d, long range, int zero_percent = 0) {
  const MonomialBasis basis(n, d);
  const HermitianMatrix c = random_hermitian_matrix(rng, basis.size(), range, zero_percent);
  TermMap terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) terms.emplace(TermKey{basis[i], basis[j]}, c(i, j));
  return HermitianPoly::from_terms(n, std::move(terms));
}

/// Random Hermitian polynomial with max(|a|, |b|) <= d.
inline HermitianPoly random_general(Rng& rng, std::size_t n, int d, long range, int zero_percent = 0) {
  std::vector<MultiIndex> monomials;
  for (int e = 0; e <= d; ++e) {
    const MonomialBasis basis(n, e);
    monomials.insert(monomials.end(), basis.monomials().begin(), basis.monomials().end());
  }
  TermMap terms;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t j = i; j < monomials.size(); ++j) {
      if (uniform_int(rng, 0, 99) < zero_percent) continue;
      const GaussianRational c = i == j ? GaussianRational(random_rational(rng, range)) : random_gaussian(rng, range);
      terms.emplace(TermKey{monomials[i], monomials[j]}, c);
      if (i != j) terms.emplace(TermKey{monomials[j], monomials[i]}, c.conj());
    }
  }
  return HermitianPoly::from_terms(n, std::move(terms));
}

inline Point random_point(Rng& rng, std::size_t n, long range) {
  Point p(n);
  for (auto& x : p) x = random_gaussian(rng, range, 3);
  return p;
}

}  // namespace hermrank::testing
