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

#include "hermrank/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hermrank {

namespace {

std::string describe(const MultiIndex& m) {
  std::string out = "(";
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(m[j]);
  }
  return out + ")";
}

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": expected " + std::to_string(expected) + " variables, got " + std::to_string(got));
  }
}

GaussianRational power(const GaussianRational& x, int e) {
  GaussianRational out(1);
  for (int k = 0; k < e; ++k) out *= x;
  return out;
}

GaussianRational monomial_value(const MultiIndex& a, const Point& z) {
  GaussianRational out(1);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j]) out *= power(z[j], a[j]);
  return out;
}

void accumulate(TermMap& terms, const TermKey& key, const GaussianRational& c) {
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (const int e : exps_) {
    if (e < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
    degree_ += e;
  }
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  std::vector<int> e(n, 0);
  e.at(j) = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  require_dim(size(), o.size(), "multi-index sum");
  std::vector<int> e(exps_);
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += o.exps_[j];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::extended(int last) const {
  std::vector<int> e(exps_);
  e.push_back(last);
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::truncated() const {
  std::vector<int> e(exps_.begin(), exps_.end() - 1);
  return MultiIndex(std::move(e));
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::min(a.exps_.size(), b.exps_.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (a.exps_[j] != b.exps_[j]) return b.exps_[j] <=> a.exps_[j];
  }
  return a.exps_.size() <=> b.exps_.size();
}

namespace {

void enumerate_monomials(std::size_t n, int remaining, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    prefix.push_back(e);
    enumerate_monomials(n, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, int degree) : n_(n), degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidInput, "negative degree");
  if (n == 0) {
    if (degree == 0) monomials_.emplace_back();
  } else {
    std::vector<int> prefix;
    enumerate_monomials(n, degree, prefix, monomials_);
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index(const MultiIndex& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) throw Error(ErrorKind::InvalidInput, "monomial " + describe(m) + " not in basis");
  return it->second;
}

SignatureForm::SignatureForm(std::size_t r, std::size_t s, std::size_t t) : r_(r), s_(s), t_(t) {
  if (r == 0 && s == 0) throw Error(ErrorKind::InvalidInput, "signature form needs (r,s) != (0,0)");
}

SignatureForm SignatureForm::parse(const std::string& text) {
  std::vector<long> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "malformed form '" + text + "', expected r,s,t");
    }
  }
  if (parts.size() != 3) throw Error(ErrorKind::InvalidInput, "malformed form '" + text + "', expected r,s,t");
  return {static_cast<std::size_t>(parts[0]), static_cast<std::size_t>(parts[1]), static_cast<std::size_t>(parts[2])};
}

int SignatureForm::eigenvalue(std::size_t j) const {
  if (j < r_) return 1;
  if (j < r_ + s_) return -1;
  return 0;
}

GaussianRational SignatureForm::pair(const Point& z, const Point& w) const {
  require_dim(n(), z.size(), "form pairing");
  require_dim(n(), w.size(), "form pairing");
  GaussianRational out;
  for (std::size_t j = 0; j < r_ + s_; ++j) {
    const GaussianRational term = z[j] * w[j].conj();
    if (eigenvalue(j) > 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

std::string SignatureForm::to_string() const {
  return std::to_string(r_) + "," + std::to_string(s_) + "," + std::to_string(t_);
}

HermitianPoly HermitianPoly::from_terms(std::size_t n, TermMap terms) {
  HermitianPoly out(n);
  for (auto& [key, c] : terms) {
    require_dim(n, key.first.size(), "Hermitian polynomial term");
    require_dim(n, key.second.size(), "Hermitian polynomial term");
    if (!c.is_zero()) out.terms_.emplace(key, std::move(c));
  }
  for (const auto& [key, c] : out.terms_) {
    if (key.first > key.second) continue;
    const auto mirror = out.terms_.find({key.second, key.first});
    const GaussianRational expected = c.conj();
    if (mirror == out.terms_.end() || mirror->second != expected) {
      const std::string got = mirror == out.terms_.end() ? std::string("0") : mirror->second.to_string();
      throw Error(ErrorKind::NotHermitian, "coefficient of " + describe(key.first) + "x" + describe(key.second) +
                                               " is " + c.to_string() + " but its conjugate pair " +
                                               describe(key.second) + "x" + describe(key.first) + " has " + got +
                                               ", expected " + expected.to_string());
    }
  }
  return out;
}

HermitianPoly HermitianPoly::constant(std::size_t n, const Rational& c) {
  TermMap t;
  t.emplace(TermKey{MultiIndex::zero(n), MultiIndex::zero(n)}, GaussianRational(c));
  return from_terms(n, std::move(t));
}

GaussianRational HermitianPoly::coefficient(const MultiIndex& a, const MultiIndex& b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? GaussianRational() : it->second;
}

int HermitianPoly::max_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max({d, key.first.degree(), key.second.degree()});
  return d;
}

HermitianPoly operator+(const HermitianPoly& a, const HermitianPoly& b) {
  require_dim(a.n_, b.n_, "polynomial sum");
  HermitianPoly out = a;
  for (const auto& [key, c] : b.terms_) accumulate(out.terms_, key, c);
  return out;
}

HermitianPoly operator-(const HermitianPoly& a, const HermitianPoly& b) {
  return a + Rational(-1) * b;
}

HermitianPoly operator*(const HermitianPoly& a, const HermitianPoly& b) {
  require_dim(a.n_, b.n_, "polynomial product");
  HermitianPoly out(a.n_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      accumulate(out.terms_, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

HermitianPoly operator*(const Rational& c, const HermitianPoly& a) {
  HermitianPoly out(a.n_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : a.terms_) out.terms_.emplace(key, v * GaussianRational(c));
  return out;
}

GaussianRational evaluate_polarized(const HermitianPoly& f, const Point& z, const Point& w) {
  require_dim(f.n(), z.size(), "polarized evaluation");
  require_dim(f.n(), w.size(), "polarized evaluation");
  Point w_bar(w.size());
  std::transform(w.begin(), w.end(), w_bar.begin(), [](const GaussianRational& x) { return x.conj(); });
  GaussianRational out;
  for (const auto& [key, c] : f.terms()) out += c * monomial_value(key.first, z) * monomial_value(key.second, w_bar);
  return out;
}

HermitianPoly multiply_by_form(const HermitianPoly& b, const SignatureForm& form) {
  require_dim(form.n(), b.n(), "multiply_by_form");
  const std::size_t n = b.n();
  std::vector<MultiIndex> units;
  for (std::size_t j = 0; j < n; ++j) units.push_back(MultiIndex::unit(n, j));
  TermMap out;
  for (const auto& [key, c] : b.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      const int eps = form.eigenvalue(j);
      if (eps == 0) continue;
      accumulate(out, {key.first + units[j], key.second + units[j]}, eps > 0 ? c : -c);
    }
  }
  return HermitianPoly::from_terms(n, std::move(out));
}

std::optional<int> is_bihomogeneous(const HermitianPoly& f) {
  if (f.is_zero()) return std::nullopt;
  const int d = f.terms().begin()->first.first.degree();
  for (const auto& [key, c] : f.terms()) {
    if (key.first.degree() != d || key.second.degree() != d) return std::nullopt;
  }
  return d;
}

HermitianPoly homogenize(const HermitianPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot homogenize the zero polynomial");
  const int d = a.max_degree();
  TermMap out;
  for (const auto& [key, c] : a.terms()) {
    out.emplace(TermKey{key.first.extended(d - key.first.degree()), key.second.extended(d - key.second.degree())}, c);
  }
  return HermitianPoly::from_terms(a.n() + 1, std::move(out));
}

HermitianPoly dehomogenize(const HermitianPoly& f) {
  if (f.n() == 0) throw Error(ErrorKind::DimensionMismatch, "cannot dehomogenize a polynomial in zero variables");
  TermMap out;
  for (const auto& [key, c] : f.terms()) accumulate(out, {key.first.truncated(), key.second.truncated()}, c);
  return HermitianPoly::from_terms(f.n() - 1, std::move(out));
}

HermitianMatrix coefficient_matrix(const HermitianPoly& f, int e) {
  const MonomialBasis basis(f.n(), e);
  Matrix c(basis.size(), basis.size());
  for (const auto& [key, v] : f.terms()) {
    if (key.first.degree() != e || key.second.degree() != e) {
      throw Error(ErrorKind::NotBihomogeneous, "term " + describe(key.first) + "x" + describe(key.second) +
                                                   " is not of bidegree (" + std::to_string(e) + "," +
                                                   std::to_string(e) + ")");
    }
    c(basis.index(key.first), basis.index(key.second)) = v;
  }
  return HermitianMatrix(std::move(c));
}

HoloPoly::HoloPoly(std::size_t n, Terms terms) : n_(n) {
  for (auto& [a, c] : terms) {
    require_dim(n, a.size(), "holomorphic polynomial term");
    if (!c.is_zero()) terms_.emplace(a, std::move(c));
  }
}

HoloPoly HoloPoly::variable(std::size_t n, std::size_t j) {
  HoloPoly p(n);
  p.terms_.emplace(MultiIndex::unit(n, j), GaussianRational(1));
  return p;
}

HoloPoly HoloPoly::constant(std::size_t n, const GaussianRational& c) {
  HoloPoly p(n);
  if (!c.is_zero()) p.terms_.emplace(MultiIndex::zero(n), c);
  return p;
}

GaussianRational HoloPoly::coefficient(const MultiIndex& a) const {
  const auto it = terms_.find(a);
  return it == terms_.end() ? GaussianRational() : it->second;
}

std::optional<int> HoloPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [a, c] : terms_)
    if (a.degree() != d) return std::nullopt;
  return d;
}

void HoloPoly::add_term(const MultiIndex& a, const GaussianRational& c) {
  require_dim(n_, a.size(), "holomorphic polynomial term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational HoloPoly::evaluate(const Point& z) const {
  require_dim(n_, z.size(), "holomorphic evaluation");
  GaussianRational out;
  for (const auto& [a, c] : terms_) out += c * monomial_value(a, z);
  return out;
}

HoloPoly operator+(const HoloPoly& a, const HoloPoly& b) {
  require_dim(a.n_, b.n_, "holomorphic sum");
  HoloPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
  require_dim(a.n_, b.n_, "holomorphic product");
  HoloPoly out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

HoloPoly operator*(const GaussianRational& c, const HoloPoly& a) {
  HoloPoly out(a.n_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : a.terms_) out.terms_.emplace(m, c * v);
  return out;
}

std::vector<HoloPoly> restrict_to_subspace(std::span<const HoloPoly> polys, const Matrix& l) {
  const std::size_t n = l.rows();
  const std::size_t params = l.cols();
  for (const auto& p : polys) require_dim(n, p.n(), "restrict_to_subspace");
  if (matrix_rank(l) != params) {
    throw Error(ErrorKind::RankDeficientParametrization,
                "parametrization of rank " + std::to_string(matrix_rank(l)) + " < " + std::to_string(params));
  }
  std::vector<HoloPoly> linear;
  for (std::size_t i = 0; i < n; ++i) {
    HoloPoly form(params);
    for (std::size_t j = 0; j < params; ++j) form.add_term(MultiIndex::unit(params, j), l(i, j));
    linear.push_back(std::move(form));
  }
  // z^a maps to prod_i linear[i]^{a_i}; images are shared across all inputs.
  std::map<MultiIndex, HoloPoly> images;
  images.emplace(MultiIndex::zero(n), HoloPoly::constant(params, GaussianRational(1)));
  const auto image = [&](const auto& self, const MultiIndex& a) -> const HoloPoly& {
    if (const auto it = images.find(a); it != images.end()) return it->second;
    std::size_t j = 0;
    while (a[j] == 0) ++j;
    std::vector<int> lower = a.exponents();
    --lower[j];
    HoloPoly value = self(self, MultiIndex(std::move(lower))) * linear[j];
    return images.emplace(a, std::move(value)).first->second;
  };

  std::vector<HoloPoly> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    HoloPoly r(params);
    for (const auto& [a, c] : p.terms()) {
      for (const auto& [m, v] : image(image, a).terms()) r.add_term(m, c * v);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hermrank
