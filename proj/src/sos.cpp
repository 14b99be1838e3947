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

#include "hermrank/sos.hpp"

#include <algorithm>
#include <set>

namespace hermrank {

namespace {

// Coefficient matrix restricted to the monomials that actually occur. Rows
// and columns of the full matrix outside the support are zero, so the rank
// and (p, q) are unchanged.
struct SupportMatrix {
  std::vector<MultiIndex> monomials;
  HermitianMatrix matrix;
};

SupportMatrix support_matrix(const HermitianPoly& f) {
  std::set<MultiIndex> support;
  for (const auto& [key, c] : f.terms()) support.insert(key.first);
  SupportMatrix out;
  out.monomials.assign(support.begin(), support.end());
  std::map<MultiIndex, std::size_t> index;
  for (std::size_t i = 0; i < out.monomials.size(); ++i) index.emplace(out.monomials[i], i);
  Matrix c(out.monomials.size(), out.monomials.size());
  for (const auto& [key, v] : f.terms()) c(index.at(key.first), index.at(key.second)) = v;
  out.matrix = HermitianMatrix(std::move(c));
  return out;
}

}  // namespace

std::size_t WeightedSOSDecomposition::p() const {
  return static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](const Rational& d) { return d.sign() > 0; }));
}

std::size_t WeightedSOSDecomposition::q() const {
  return static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](const Rational& d) { return d.sign() < 0; }));
}

GaussianRational InducedMap::weighted_pairing(const Point& z, const Point& w) const {
  GaussianRational out;
  for (std::size_t k = 0; k < components.size(); ++k) {
    out += GaussianRational(weights[k]) * components[k].evaluate(z) * components[k].evaluate(w).conj();
  }
  return out;
}

HermitianPoly sos_product(const HermitianPoly& a, const SignatureForm& form) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "A must be non-zero");
  HermitianPoly f = multiply_by_form(a, form);
  if (f.is_zero()) throw Error(ErrorKind::ZeroProduct, "A * <z,z>_" + form.to_string() + " vanishes identically");
  return f;
}

HermitianPoly bihomogeneous_model(const HermitianPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rank of the zero polynomial");
  return is_bihomogeneous(f) ? f : homogenize(f);
}

RankResult hermitian_rank(const HermitianPoly& f) {
  const bool homogenized = !is_bihomogeneous(f).has_value();
  const HermitianPoly model = bihomogeneous_model(f);
  const Signature sig = signature(support_matrix(model).matrix);
  return {sig.rank(), sig.positive, sig.negative, homogenized};
}

RankResult sos_rank(const HermitianPoly& a, const SignatureForm& form) { return hermitian_rank(sos_product(a, form)); }

WeightedSOSDecomposition decompose_polynomial(const HermitianPoly& f) {
  const bool homogenized = !is_bihomogeneous(f).has_value();
  const HermitianPoly model = bihomogeneous_model(f);
  const SupportMatrix sm = support_matrix(model);
  const CongruenceDiagonalization diag = congruence_diagonalize(sm.matrix);

  // With C = Q^dagger D Q (Q = P^{-1}) and v the monomial vector,
  // f = v^T C conj(v) = sum_k d_k |(conj(Q) v)_k|^2.
  WeightedSOSDecomposition dec;
  dec.n = model.n();
  dec.degree = sm.monomials.front().degree();
  dec.homogenized = homogenized;
  for (const int wanted : {1, -1}) {
    for (std::size_t k = 0; k < diag.diagonal.size(); ++k) {
      if (diag.diagonal[k].sign() != wanted) continue;
      HoloPoly g(model.n());
      for (std::size_t i = 0; i < sm.monomials.size(); ++i) g.add_term(sm.monomials[i], diag.inverse_transform(k, i).conj());
      dec.weights.push_back(diag.diagonal[k]);
      dec.polys.push_back(std::move(g));
    }
  }
  return dec;
}

WeightedSOSDecomposition decompose(const HermitianPoly& a, const SignatureForm& form) {
  return decompose_polynomial(sos_product(a, form));
}

bool verify_decomposition(const HermitianPoly& f, const WeightedSOSDecomposition& dec) {
  if (dec.weights.size() != dec.polys.size()) return false;
  if (f.is_zero()) return dec.weights.empty();
  const HermitianPoly target = dec.homogenized ? homogenize(f) : f;
  if (target.n() != dec.n) return false;

  TermMap expanded;
  for (std::size_t k = 0; k < dec.polys.size(); ++k) {
    if (dec.weights[k].is_zero() || dec.polys[k].n() != dec.n) return false;
    const GaussianRational d(dec.weights[k]);
    for (const auto& [a, ca] : dec.polys[k].terms()) {
      const GaussianRational da = d * ca;
      for (const auto& [b, cb] : dec.polys[k].terms()) {
        auto [it, inserted] = expanded.try_emplace({a, b});
        it->second.add_mul(da, cb.conj());
      }
    }
  }
  std::erase_if(expanded, [](const auto& kv) { return kv.second.is_zero(); });
  return expanded == target.terms();
}

InducedMap induced_map(const WeightedSOSDecomposition& dec) {
  if (dec.polys.empty()) throw Error(ErrorKind::InvalidInput, "induced map needs at least one component");
  InducedMap map;
  map.n = dec.n;
  map.degree = dec.degree;
  map.components = dec.polys;
  map.weights = dec.weights;
  for (const auto& g : map.components) {
    if (g.is_zero()) throw Error(ErrorKind::InvalidInput, "induced map component vanishes identically");
  }
  return map;
}

}  // namespace hermrank
