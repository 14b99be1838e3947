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

#include "hermrank/span_lab.hpp"

#include <map>
#include <numeric>
#include <set>

namespace hermrank {

namespace {

constexpr int kMaxSamplingAttempts = 200;

long rank_of_polys(const std::vector<HoloPoly>& polys) {
  std::set<MultiIndex> support;
  for (const auto& p : polys)
    for (const auto& [a, c] : p.terms()) support.insert(a);
  std::map<MultiIndex, std::size_t> column;
  for (const auto& a : support) column.emplace(a, column.size());
  Matrix m(polys.size(), support.size());
  for (std::size_t k = 0; k < polys.size(); ++k)
    for (const auto& [a, c] : polys[k].terms()) m(k, column.at(a)) = c;
  return static_cast<long>(matrix_rank(m));
}

// Scales column j by the lcm of its denominators so the entries become
// Gaussian integers; the spanned subspace is unchanged.
void make_integral(Matrix& m, std::size_t j) {
  BigInt l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re().denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).im().denominator().get_mpz_t());
  }
  const GaussianRational scale{Rational(l)};
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) *= scale;
}

void require_form_matches(const InducedMap& f, const SignatureForm& form) {
  if (form.n() != f.n) {
    throw Error(ErrorKind::DimensionMismatch,
                "form " + form.to_string() + " acts on " + std::to_string(form.n()) + " variables, map has " +
                    std::to_string(f.n));
  }
}

// Seeded lower-bound check with the genericity retry policy: resample up to
// kGenericityRetries times while the measurement stays below bound.
SpanReport lower_bound_trial(const InducedMap& f, const char* check, long m, long bound, std::uint64_t seed) {
  Rng rng(seed);
  SpanReport r;
  r.check = check;
  r.direction = ">=";
  r.bound = bound;
  r.seed = seed;
  r.subspace_dims = {m};
  long measured = span_dim(f, random_subspace(f.n, m, rng));
  while (measured < bound && r.retries < kGenericityRetries) {
    ++r.retries;
    measured = span_dim(f, random_subspace(f.n, m, rng));
  }
  r.measured = {measured};
  r.pass = measured >= bound;
  if (r.retries > 0) r.note = "non-generic sample retried " + std::to_string(r.retries) + " time(s)";
  return r;
}

}  // namespace

LinearSubspace::LinearSubspace(Matrix basis) : basis_(std::move(basis)) {
  if (matrix_rank(basis_) != basis_.cols()) {
    throw Error(ErrorKind::RankDeficientParametrization, "subspace basis vectors are linearly dependent");
  }
}

Point LinearSubspace::vector(std::size_t j) const {
  Point v(ambient());
  for (std::size_t i = 0; i < ambient(); ++i) v[i] = basis_(i, j);
  return v;
}

LinearSubspace random_subspace(std::size_t ambient, long m, Rng& rng) {
  if (m < 0 || static_cast<std::size_t>(m) + 1 > ambient) {
    throw Error(ErrorKind::InvalidInput, "no " + std::to_string(m) + "-plane in P^" + std::to_string(ambient - 1));
  }
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    Matrix b(ambient, static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = GaussianRational(uniform_int(rng, -kSampleBound, kSampleBound));
    if (matrix_rank(b) == b.cols()) return LinearSubspace(std::move(b));
  }
  throw Error(ErrorKind::InvalidInput, "could not sample a full-rank subspace");
}

long span_dim(const InducedMap& f, const LinearSubspace& m) {
  if (m.ambient() != f.n) {
    throw Error(ErrorKind::DimensionMismatch, "subspace of C^" + std::to_string(m.ambient()) + " for a map on C^" +
                                                  std::to_string(f.n));
  }
  if (m.basis().cols() == 0) return -1;
  return rank_of_polys(restrict_to_subspace(f.components, m.basis())) - 1;
}

long span_dim(const InducedMap& f) { return rank_of_polys(f.components) - 1; }

LinearSubspace orthogonal_complement(const LinearSubspace& m, const SignatureForm& form) {
  if (form.n() != m.ambient()) throw Error(ErrorKind::DimensionMismatch, "form and subspace dimensions differ");
  // <v, w> = sum eps_j v_j conj(w_j) = 0  <=>  sum eps_j conj(v_j) w_j = 0.
  Matrix pairing(m.basis().cols(), m.ambient());
  for (std::size_t i = 0; i < pairing.rows(); ++i) {
    for (std::size_t j = 0; j < pairing.cols(); ++j) {
      const int eps = form.eigenvalue(j);
      if (eps != 0) pairing(i, j) = eps > 0 ? m.basis()(j, i).conj() : -m.basis()(j, i).conj();
    }
  }
  Matrix kernel = nullspace(pairing);
  for (std::size_t j = 0; j < kernel.cols(); ++j) make_integral(kernel, j);
  return LinearSubspace(std::move(kernel));
}

bool is_nondegenerate(const LinearSubspace& m, const SignatureForm& form) {
  const std::size_t k = m.basis().cols();
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = form.pair(m.vector(i), m.vector(j));
  return matrix_rank(gram) == k;
}

std::pair<LinearSubspace, LinearSubspace> random_orthogonal_pair(long m1, long m2, const SignatureForm& form,
                                                                 std::uint64_t seed) {
  const long nondegenerate_rank = static_cast<long>(form.r() + form.s());
  if (m1 < 0 || m2 < 0 || m1 + m2 > nondegenerate_rank - 2) {
    throw Error(ErrorKind::HypothesisViolated, "orthogonal pair needs m1 + m2 <= r + s - 2 (m1=" + std::to_string(m1) +
                                                   ", m2=" + std::to_string(m2) + ", form " + form.to_string() + ")");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    LinearSubspace first = random_subspace(form.n(), m1, rng);
    if (!is_nondegenerate(first, form)) continue;
    const LinearSubspace complement = orthogonal_complement(first, form);
    const std::size_t k = complement.basis().cols();
    if (k < static_cast<std::size_t>(m2) + 1) continue;
    for (int inner = 0; inner < kMaxSamplingAttempts; ++inner) {
      Matrix coeffs(k, static_cast<std::size_t>(m2) + 1);
      for (std::size_t i = 0; i < coeffs.rows(); ++i)
        for (std::size_t j = 0; j < coeffs.cols(); ++j)
          coeffs(i, j) = GaussianRational(uniform_int(rng, -kSampleBound, kSampleBound));
      Matrix basis = complement.basis() * coeffs;
      if (matrix_rank(basis) != basis.cols()) continue;
      LinearSubspace second(std::move(basis));
      if (is_nondegenerate(second, form)) return {std::move(first), std::move(second)};
    }
  }
  throw Error(ErrorKind::InvalidInput, "could not sample a nondegenerate orthogonal pair");
}

long SpanReport::total() const { return std::accumulate(measured.begin(), measured.end(), 0L); }

std::vector<SpanReport> check_hyperplane_restriction(const InducedMap& f, const SignatureForm& form, int trials,
                                                     std::uint64_t seed) {
  require_form_matches(f, form);
  const long n = static_cast<long>(f.n) - 1;
  const long big_n = span_dim(f);
  std::vector<SpanReport> out;
  if (big_n < 1 || n < 1) return out;
  const long bound = lower_op(BigInt(big_n), n).get_si();
  for (int t = 0; t < trials; ++t) {
    SpanReport r = lower_bound_trial(f, "hyperplane", n - 1, bound, derive_seed(seed, static_cast<std::uint64_t>(t)));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SpanReport> check_orthogonal_span_bound(const InducedMap& f, const SignatureForm& form, long m1, long m2,
                                                    int trials, std::uint64_t seed) {
  require_form_matches(f, form);
  const long r_total = static_cast<long>(f.size());
  std::vector<SpanReport> out;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    const auto [first, second] = random_orthogonal_pair(m1, m2, form, trial_seed);
    SpanReport r;
    r.check = "orthopair";
    r.direction = "<=";
    r.seed = trial_seed;
    r.subspace_dims = {m1, m2};
    r.measured = {span_dim(f, first), span_dim(f, second)};
    r.bound = r_total - 2;
    r.pass = r.total() <= r.bound;
    for (std::size_t i = 0; i < first.basis().cols(); ++i) {
      for (std::size_t j = 0; j < second.basis().cols(); ++j) {
        if (!f.weighted_pairing(first.vector(i), second.vector(j)).is_zero()) {
          r.pass = false;
          r.note = "weighted pairing does not vanish on the orthogonal pair";
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::pair<long, long>> find_n_ab(long n, long big_n) {
  if (n < 1) return std::nullopt;
  for (long a = 0; a <= n - 1; ++a) {
    const long base = n_ab(n, a, 0).get_si();
    if (big_n < base) break;
    if (big_n - base <= n - a - 1) return std::make_pair(a, big_n - base);
  }
  return std::nullopt;
}

BigInt dim_prop_bound(long n, long a, long b, long m) {
  if (a + b + 1 <= m && m <= n - 1) return n_ab(m, a, b);
  if (a + 1 <= m && m <= a + b) return n_ab(m, a, m - a - 1);
  throw Error(ErrorKind::HypothesisViolated, "m = " + std::to_string(m) + " outside both ranges for (n,a,b) = (" +
                                                 std::to_string(n) + "," + std::to_string(a) + "," +
                                                 std::to_string(b) + ")");
}

std::vector<SpanReport> check_dim_prop(const InducedMap& f, long a, long b, long m, int trials, std::uint64_t seed) {
  const long n = static_cast<long>(f.n) - 1;
  const long big_n = span_dim(f);
  BigInt target;
  try {
    target = n_ab(n, a, b);
  } catch (const Error& e) {
    throw Error(ErrorKind::HypothesisViolated, e.what());
  }
  if (target != big_n) {
    throw Error(ErrorKind::HypothesisViolated, "map spans P^" + std::to_string(big_n) + ", not P^N(" +
                                                   std::to_string(n) + ";" + std::to_string(a) + "," +
                                                   std::to_string(b) + ") = P^" + target.get_str());
  }
  const long bound = dim_prop_bound(n, a, b, m).get_si();
  std::vector<SpanReport> out;
  for (int t = 0; t < trials; ++t) {
    SpanReport r = lower_bound_trial(f, "dimprop", m, bound, derive_seed(seed, static_cast<std::uint64_t>(t)));
    r.note = "N(" + std::to_string(n) + ";" + std::to_string(a) + "," + std::to_string(b) + ")" +
             (r.note.empty() ? "" : "; " + r.note);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SpanReport> check_dim_prop_all(const InducedMap& f, int trials, std::uint64_t seed) {
  const long n = static_cast<long>(f.n) - 1;
  const long big_n = span_dim(f);
  const auto ab = find_n_ab(n, big_n);
  if (!ab) {
    SpanReport r;
    r.check = "dimprop";
    r.direction = ">=";
    r.applicable = false;
    r.seed = seed;
    r.measured = {big_n};
    r.note = "span dimension " + std::to_string(big_n) + " is not of the form N(" + std::to_string(n) + ";a,b)";
    return {r};
  }
  const auto [a, b] = *ab;
  std::vector<SpanReport> out;
  for (long m = a + 1; m <= n - 1; ++m) {
    auto reports = check_dim_prop(f, a, b, m, trials, derive_seed(seed, static_cast<std::uint64_t>(m)));
    out.insert(out.end(), reports.begin(), reports.end());
  }
  if (out.empty()) {
    SpanReport r;
    r.check = "dimprop";
    r.direction = ">=";
    r.applicable = false;
    r.seed = seed;
    r.measured = {big_n};
    r.note = "N(" + std::to_string(n) + ";" + std::to_string(a) + "," + std::to_string(b) +
             ") leaves no admissible m in [a+1, n-1]";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hermrank
