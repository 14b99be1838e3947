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

#include "hermrank/io.hpp"
#include "hermrank/sos.hpp"
#include "test_support.hpp"

using namespace hermrank;
using namespace hermrank::testing;

namespace {

HermitianPoly hp(const char* text, std::size_t n) { return parse_poly(text, n); }
HoloPoly holo(const char* text, std::size_t n) { return parse_holo(text, n); }

SignatureForm random_form(Rng& rng, std::size_t n) {
  const auto r = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n)));
  const auto s = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n - r)));
  return {r, s, n - r - s};
}

// Rank of the coefficient matrix with the monomial basis reversed.
Signature reversed_basis_signature(const HermitianPoly& f) {
  const HermitianPoly model = bihomogeneous_model(f);
  const int d = *is_bihomogeneous(model);
  const HermitianMatrix c = coefficient_matrix(model, d);
  const std::size_t m = c.dim();
  Matrix perm(m, m);
  for (std::size_t i = 0; i < m; ++i) perm(i, m - 1 - i) = 1;
  return signature(c.congruent(perm));
}

}  // namespace

TEST_CASE("rank examples") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const RankResult r = sos_rank(HermitianPoly::constant(n, 1), SignatureForm::euclidean(n));
    CHECK(r.rank == n);
    CHECK(r.positive == n);
    CHECK(r.negative == 0);
  }
  CHECK(sos_rank(hp("z1*~z1 - z2*~z2", 2), SignatureForm::euclidean(2)) == RankResult{2, 1, 1, false});
  CHECK(sos_rank(hp("z1*~z1", 2), SignatureForm::euclidean(2)) == RankResult{2, 2, 0, false});
  CHECK_THROWS_AS(sos_rank(HermitianPoly(2), SignatureForm::euclidean(2)), Error);
  CHECK_THROWS_AS(sos_rank(HermitianPoly::constant(2, 1), SignatureForm::euclidean(3)), Error);
}

TEST_CASE("decomposition examples") {
  const auto one = decompose(HermitianPoly::constant(2, 1), SignatureForm::euclidean(2));
  CHECK(one.weights == std::vector<Rational>{1, 1});
  CHECK(one.polys == std::vector<HoloPoly>{holo("z1", 2), holo("z2", 2)});

  const auto sq = decompose(hp("z1*~z1", 2), SignatureForm::euclidean(2));
  CHECK(sq.weights == std::vector<Rational>{1, 1});
  CHECK(sq.polys == std::vector<HoloPoly>{holo("z1^2", 2), holo("z1*z2", 2)});

  const HermitianPoly swap = hp("z1*~z2 + z2*~z1", 2);
  const auto mixed = decompose_polynomial(swap);
  CHECK(mixed.p() == 1);
  CHECK(mixed.q() == 1);
  CHECK(verify_decomposition(swap, mixed));
  const InducedMap f = induced_map(mixed);
  CHECK(f.size() == 2);
  CHECK(f.weights[0].sign() > 0);
  CHECK(f.weights[1].sign() < 0);
}

TEST_CASE("verification catches mutations") {
  const HermitianPoly a = hp("z1*~z1 + (1+i)*z1*~z2 + (1-i)*z2*~z1 - 2*z2*~z2", 2);
  const SignatureForm form(1, 1, 0);
  const HermitianPoly f = sos_product(a, form);
  const auto d = decompose(a, form);
  REQUIRE(verify_decomposition(f, d));
  auto bumped = d;
  bumped.weights[0] += 1;
  CHECK_FALSE(verify_decomposition(f, bumped));
  auto dropped = d;
  dropped.weights.pop_back();
  dropped.polys.pop_back();
  CHECK_FALSE(verify_decomposition(f, dropped));
}

TEST_CASE("induced maps") {
  const auto m = induced_map(decompose(hp("z1*~z1", 2), SignatureForm::euclidean(2)));
  CHECK(m.components == std::vector<HoloPoly>{holo("z1^2", 2), holo("z1*z2", 2)});
  CHECK(m.weights == std::vector<Rational>{1, 1});
  CHECK_THROWS_AS(induced_map(WeightedSOSDecomposition{}), Error);
}

TEST_CASE("non-bihomogeneous products go through homogenization") {
  const HermitianPoly a = hp("1 + z1*~z1", 1);
  const RankResult r = sos_rank(a, SignatureForm::euclidean(1));
  CHECK(r.homogenized);
  CHECK(r.rank == 2);
  const auto d = decompose(a, SignatureForm::euclidean(1));
  CHECK(d.homogenized);
  CHECK(d.n == 2);
  CHECK(verify_decomposition(sos_product(a, SignatureForm::euclidean(1)), d));
}

TEST_CASE("random products decompose exactly") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const SignatureForm form = random_form(rng, n);
    const bool bihom = uniform_int(rng, 0, 1) == 1;
    HermitianPoly a = bihom ? random_bihomogeneous(rng, n, static_cast<int>(uniform_int(rng, 0, 2)), 3, 70)
                            : random_general(rng, n, 2, 3, 80);
    if (a.is_zero()) continue;
    CAPTURE(format_poly(a));
    const HermitianPoly f = sos_product(a, form);
    const auto d = decompose(a, form);
    REQUIRE(verify_decomposition(f, d));
    const RankResult r = sos_rank(a, form);
    CHECK(r.rank == d.rank());
    CHECK(r.positive == d.p());
    const HermitianPoly model = bihomogeneous_model(f);
    CHECK(matrix_rank(coefficient_matrix(model, *is_bihomogeneous(model)).matrix()) == r.rank);
    const Signature rev = reversed_basis_signature(f);
    CHECK(rev.positive == r.positive);
    CHECK(rev.negative == r.negative);
    if (is_bihomogeneous(a)) {
      CHECK(r.rank >= form.r() + form.s());
      const RankResult h = sos_rank(homogenize(a), form.with_null_variable());
      CHECK(h.rank == r.rank);
      CHECK(h.positive == r.positive);
    }
  }
}

TEST_CASE("polarized identity and orthogonality") {
  Rng rng(5);
  int orthogonal_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    const SignatureForm form = random_form(rng, n);
    const HermitianPoly b = random_bihomogeneous(rng, n, 1, 3, 40);
    if (b.is_zero()) continue;
    const InducedMap f = induced_map(decompose(b, form));
    const Point z = random_point(rng, n, 4);
    Point w = random_point(rng, n, 4);
    CHECK(f.weighted_pairing(z, w) == evaluate_polarized(b, z, w) * form.pair(z, w));
    // Solve for w_0 so that <z, w> = 0 (coordinate 0 always has eps = +1).
    if (z[0].is_zero()) continue;
    w[0] = GaussianRational();
    const GaussianRational rest = form.pair(z, w);
    w[0] = (-rest / z[0]).conj();
    REQUIRE(form.pair(z, w).is_zero());
    CHECK(f.weighted_pairing(z, w).is_zero());
    ++orthogonal_checked;
  }
  CHECK(orthogonal_checked > 50);
}
