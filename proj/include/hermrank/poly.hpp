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

// Polynomials in z and conj(z) with exact Gaussian-rational coefficients.
//
// A HermitianPoly stores sum c_{ab} z^a conj(z)^b as a sparse map keyed by the
// pair of multi-indices (a, b), and always satisfies c_{ba} = conj(c_{ab}).
// A HoloPoly is an ordinary polynomial in z; it is what the components of a
// sums-of-squares decomposition are made of.

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hermrank/exact.hpp"
#include "hermrank/linalg.hpp"

namespace hermrank {

using Point = std::vector<GaussianRational>;

/// Exponent vector of a monomial. Ordered graded first (total degree
/// ascending) and then lexicographically with larger leading exponents
/// first, so in two variables: 1, z1, z2, z1^2, z1 z2, z2^2, ...
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t j) const { return exps_[j]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  MultiIndex operator+(const MultiIndex& o) const;
  /// Appends one trailing exponent.
  MultiIndex extended(int last) const;
  /// Drops the trailing exponent.
  MultiIndex truncated() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// All monomials of degree d in n variables, indexed in MultiIndex order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, int degree);

  std::size_t n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<MultiIndex>& monomials() const noexcept { return monomials_; }
  /// Throws InvalidInput when m is not in the basis.
  std::size_t index(const MultiIndex& m) const;

 private:
  std::size_t n_;
  int degree_;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t> index_;
};

/// The diagonal form <z,w> = z1 w1* + ... + zr wr* - z(r+1) w(r+1)* - ... with
/// t trailing null directions.
class SignatureForm {
 public:
  /// Throws InvalidInput when (r, s) == (0, 0).
  SignatureForm(std::size_t r, std::size_t s, std::size_t t);

  static SignatureForm euclidean(std::size_t n) { return {n, 0, 0}; }
  /// Parses "r,s,t".
  static SignatureForm parse(const std::string& text);

  std::size_t r() const noexcept { return r_; }
  std::size_t s() const noexcept { return s_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t n() const noexcept { return r_ + s_ + t_; }
  /// +1, -1 or 0.
  int eigenvalue(std::size_t j) const;

  /// Same form on one more variable that is a null direction.
  SignatureForm with_null_variable() const { return {r_, s_, t_ + 1}; }

  /// <z, w> = sum eps_j z_j conj(w_j).
  GaussianRational pair(const Point& z, const Point& w) const;

  std::string to_string() const;
  friend bool operator==(const SignatureForm&, const SignatureForm&) = default;

 private:
  std::size_t r_, s_, t_;
};

using TermKey = std::pair<MultiIndex, MultiIndex>;
using TermMap = std::map<TermKey, GaussianRational>;

class HermitianPoly {
 public:
  explicit HermitianPoly(std::size_t n = 0) : n_(n) {}

  /// Drops zero coefficients, then checks sizes and Hermitian symmetry.
  /// Throws DimensionMismatch or NotHermitian naming the offending pair.
  static HermitianPoly from_terms(std::size_t n, TermMap terms);
  /// The constant polynomial c (c must be real).
  static HermitianPoly constant(std::size_t n, const Rational& c);

  std::size_t n() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  GaussianRational coefficient(const MultiIndex& a, const MultiIndex& b) const;
  /// max(|a|, |b|) over stored terms; 0 for the zero polynomial.
  int max_degree() const;

  friend HermitianPoly operator+(const HermitianPoly& a, const HermitianPoly& b);
  friend HermitianPoly operator-(const HermitianPoly& a, const HermitianPoly& b);
  friend HermitianPoly operator*(const HermitianPoly& a, const HermitianPoly& b);
  friend HermitianPoly operator*(const Rational& c, const HermitianPoly& a);
  friend bool operator==(const HermitianPoly&, const HermitianPoly&) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// f(z, conj(w)) = sum c_ab z^a conj(w)^b. Throws DimensionMismatch.
GaussianRational evaluate_polarized(const HermitianPoly& f, const Point& z, const Point& w);

/// B(z, conj z) * <z, z>_form. Throws DimensionMismatch.
HermitianPoly multiply_by_form(const HermitianPoly& b, const SignatureForm& form);

/// d when every term has |a| == |b| == d; empty otherwise (and for zero).
std::optional<int> is_bihomogeneous(const HermitianPoly& f);

/// Substitutes z_j = w_j / w_{n+1} and clears |w_{n+1}|^{2d} with the
/// smallest d that keeps every exponent non-negative, d = max(|a|, |b|).
/// Throws ZeroPolynomial.
HermitianPoly homogenize(const HermitianPoly& a);

/// Sets the last variable to 1; left inverse of homogenize.
HermitianPoly dehomogenize(const HermitianPoly& f);

/// C with C[index a][index b] = c_ab over MonomialBasis(n, e). Throws
/// NotBihomogeneous unless f has bidegree (e, e) (the zero polynomial is
/// accepted for any e).
HermitianMatrix coefficient_matrix(const HermitianPoly& f, int e);

/// Holomorphic polynomial sum c_a z^a.
class HoloPoly {
 public:
  using Terms = std::map<MultiIndex, GaussianRational>;

  explicit HoloPoly(std::size_t n = 0) : n_(n) {}
  /// Drops zero coefficients. Throws DimensionMismatch on a wrong-size index.
  HoloPoly(std::size_t n, Terms terms);

  static HoloPoly variable(std::size_t n, std::size_t j);
  static HoloPoly constant(std::size_t n, const GaussianRational& c);

  std::size_t n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  GaussianRational coefficient(const MultiIndex& a) const;
  /// Common degree of all terms; empty when mixed or zero.
  std::optional<int> homogeneous_degree() const;

  void add_term(const MultiIndex& a, const GaussianRational& c);
  GaussianRational evaluate(const Point& z) const;

  friend HoloPoly operator+(const HoloPoly& a, const HoloPoly& b);
  friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
  friend HoloPoly operator*(const GaussianRational& c, const HoloPoly& a);
  friend bool operator==(const HoloPoly&, const HoloPoly&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Composes every polynomial with z = L u, where L is n x (m+1) with full
/// column rank. The results live in m+1 variables and keep their degrees.
/// Throws DimensionMismatch or RankDeficientParametrization.
std::vector<HoloPoly> restrict_to_subspace(std::span<const HoloPoly> polys, const Matrix& l);

}  // namespace hermrank
