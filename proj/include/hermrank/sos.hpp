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

// Rank, signature and weighted sums-of-squares decompositions of
// A(z, conj z) * <z, z>_form.
//
// The product is written as sum_k d_k |g_k|^2 with rational weights d_k and
// linearly independent homogeneous g_k. Normalizing to unit weights would need
// sqrt(d_k), so the exact output keeps the weights; (p, q) and the rank
// R = p + q do not depend on that choice.

#pragma once

#include <cstddef>
#include <vector>

#include "hermrank/poly.hpp"

namespace hermrank {

struct RankResult {
  std::size_t rank = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  /// The product was not bihomogeneous and went through homogenize().
  bool homogenized = false;
  friend bool operator==(const RankResult&, const RankResult&) = default;
};

struct WeightedSOSDecomposition {
  /// Variables of the g_k: A's n, or n + 1 after homogenization.
  std::size_t n = 0;
  int degree = 0;
  bool homogenized = false;
  /// Positive weights first, then negative ones.
  std::vector<Rational> weights;
  std::vector<HoloPoly> polys;

  std::size_t p() const;
  std::size_t q() const;
  std::size_t rank() const noexcept { return weights.size(); }
};

/// The map z -> (g_1(z), ..., g_R(z)) with the diagonal target weights; it
/// is orthogonal for (form, weights) in the polarized sense:
/// B(z, conj w) <z, w> = sum_k d_k g_k(z) conj(g_k(w)).
struct InducedMap {
  std::size_t n = 0;
  int degree = 0;
  std::vector<HoloPoly> components;
  std::vector<Rational> weights;

  std::size_t size() const noexcept { return components.size(); }
  /// sum_k d_k g_k(z) conj(g_k(w)).
  GaussianRational weighted_pairing(const Point& z, const Point& w) const;
};

/// A * <z,z>_form, the polynomial whose rank is studied. Throws
/// ZeroPolynomial, ZeroProduct or DimensionMismatch.
HermitianPoly sos_product(const HermitianPoly& a, const SignatureForm& form);

/// The bihomogeneous polynomial whose coefficient matrix carries the rank:
/// f itself when bihomogeneous, homogenize(f) otherwise.
HermitianPoly bihomogeneous_model(const HermitianPoly& f);

/// Inertia of the coefficient matrix of a nonzero Hermitian polynomial,
/// homogenizing first when needed.
RankResult hermitian_rank(const HermitianPoly& f);

/// Rank and signature counts of A * <z,z>_form.
RankResult sos_rank(const HermitianPoly& a, const SignatureForm& form);

/// Exact weighted decomposition of a nonzero Hermitian polynomial f.
WeightedSOSDecomposition decompose_polynomial(const HermitianPoly& f);

/// Exact weighted decomposition of A * <z,z>_form.
WeightedSOSDecomposition decompose(const HermitianPoly& a, const SignatureForm& form);

/// Expands sum_k d_k g_k(z) conj(g_k(w)) and compares coefficient maps with
/// f (with homogenize(f) when the decomposition was homogenized).
bool verify_decomposition(const HermitianPoly& f, const WeightedSOSDecomposition& dec);

/// Throws InvalidInput when the decomposition is empty.
InducedMap induced_map(const WeightedSOSDecomposition& dec);

}  // namespace hermrank
