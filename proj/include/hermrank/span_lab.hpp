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

// Span-dimension experiments on induced maps F: P^n -> P^{R-1}.
//
// All dimensions here are projective: a linear subspace spanned by m+1
// vectors has dimension m, and span_dim reports rank - 1 (so -1 for a map
// that vanishes on the subspace).
//
// The induced maps are orthogonal for the diagonal target form with weights
// d_k rather than for <.,.>_{p,q}. Rescaling target coordinates by the
// nonzero factors sqrt|d_k| turns one into the other and does not change any
// linear span, so every span bound below applies verbatim.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermrank/linalg.hpp"
#include "hermrank/macaulay.hpp"
#include "hermrank/poly.hpp"
#include "hermrank/random.hpp"
#include "hermrank/sos.hpp"

namespace hermrank {

/// Random sample coordinates are drawn from [-kSampleBound, kSampleBound].
inline constexpr long kSampleBound = 1'000'000;
/// Extra samples allowed for a failing lower-bound check before it counts.
inline constexpr int kGenericityRetries = 3;

class LinearSubspace {
 public:
  /// Columns of `basis` span the subspace. Throws RankDeficientParametrization
  /// unless they are linearly independent.
  explicit LinearSubspace(Matrix basis);

  std::size_t ambient() const noexcept { return basis_.rows(); }
  /// m, for a subspace spanned by m+1 vectors; -1 for the zero subspace.
  long projective_dim() const noexcept { return static_cast<long>(basis_.cols()) - 1; }
  const Matrix& basis() const noexcept { return basis_; }
  Point vector(std::size_t j) const;

 private:
  Matrix basis_;
};

/// Uniform random subspace spanned by m+1 integer vectors.
LinearSubspace random_subspace(std::size_t ambient, long m, Rng& rng);

/// Projective dimension of span F(M). Throws DimensionMismatch.
long span_dim(const InducedMap& f, const LinearSubspace& m);
/// Projective dimension of span F(P^n), i.e. of the span of the components.
long span_dim(const InducedMap& f);

/// { w : <v, w>_form = 0 for all v in M }.
LinearSubspace orthogonal_complement(const LinearSubspace& m, const SignatureForm& form);

/// True when the Gram matrix of the form restricted to M is invertible.
bool is_nondegenerate(const LinearSubspace& m, const SignatureForm& form);

/// Mutually orthogonal nondegenerate subspaces of projective dimensions m1
/// and m2. Deterministic in seed. Throws HypothesisViolated unless
/// m1 + m2 <= r + s - 2.
std::pair<LinearSubspace, LinearSubspace> random_orthogonal_pair(long m1, long m2, const SignatureForm& form,
                                                                 std::uint64_t seed);

struct SpanReport {
  std::string check;  // "hyperplane", "orthopair" or "dimprop"
  /// Projective dimensions of the sampled subspaces.
  std::vector<long> subspace_dims;
  /// span_dim of F on each sampled subspace.
  std::vector<long> measured;
  long bound = 0;
  /// ">=" or "<=": how the summed measurement compares to bound.
  std::string direction;
  bool applicable = true;
  bool pass = true;
  int retries = 0;
  std::uint64_t seed = 0;
  std::string note;

  long total() const;
  friend bool operator==(const SpanReport&, const SpanReport&) = default;
};

/// For seeded random hyperplanes Pi of P^n: span_dim(F, Pi) >= N^{-<n>},
/// N = span_dim(F). A failing sample is retried up to kGenericityRetries
/// times. Returns no reports when N < 1 or n < 1.
std::vector<SpanReport> check_hyperplane_restriction(const InducedMap& f, const SignatureForm& form, int trials,
                                                     std::uint64_t seed);

/// For seeded orthogonal pairs (M1, M2): span_dim(F, M1) + span_dim(F, M2)
/// <= R - 2. No retries. Throws HypothesisViolated unless m1 + m2 <= r + s - 2.
std::vector<SpanReport> check_orthogonal_span_bound(const InducedMap& f, const SignatureForm& form, long m1, long m2,
                                                    int trials, std::uint64_t seed);

/// (a, b) with N = N(n; a, b), 0 <= b <= n - a - 1, if any.
std::optional<std::pair<long, long>> find_n_ab(long n, long big_n);

/// Lower bound on D_m for a map whose span is exactly P^{N(n;a,b)}:
/// N(m; a, b) for a+b+1 <= m <= n-1, N(m; a, m-a-1) for a+1 <= m <= a+b.
/// Throws HypothesisViolated for other m.
BigInt dim_prop_bound(long n, long a, long b, long m);

/// Checks D_m >= dim_prop_bound on seeded random m-planes, with the same
/// retry policy as the hyperplane check. Throws HypothesisViolated when
/// span_dim(F) != N(n; a, b) or m is out of range.
std::vector<SpanReport> check_dim_prop(const InducedMap& f, long a, long b, long m, int trials, std::uint64_t seed);

/// Finds (a, b) for span_dim(F) and runs check_dim_prop for every admissible
/// m. A map whose span is not of the form N(n; a, b), or whose (a, b) leaves
/// no admissible m, yields a single non-applicable report.
std::vector<SpanReport> check_dim_prop_all(const InducedMap& f, int trials, std::uint64_t seed);

}  // namespace hermrank
