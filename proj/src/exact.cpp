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

#include "hermrank/exact.hpp"

#include <cctype>

namespace hermrank {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroProduct: return "ZeroProduct";
    case ErrorKind::NotBihomogeneous: return "NotBihomogeneous";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::RankDeficientParametrization: return "RankDeficientParametrization";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::TrivialSignature: return "TrivialSignature";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::SpecError: return "SpecError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  if (negative) n = -n;
  return Rational(n, BigInt(std::string(den), 10));
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_real()) return GaussianRational(re_.inverse());
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

namespace {

// Work on the raw mpq values: the elimination loops spend most of their time here.
thread_local mpq_class scratch;

void sub_prod(mpq_class& acc, const mpq_class& a, const mpq_class& b) {
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
}

void add_prod(mpq_class& acc, const mpq_class& a, const mpq_class& b) {
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
  auto& re = re_.raw();
  auto& im = im_.raw();
  const auto& ar = a.re_.value();
  const auto& ai = a.im_.value();
  const auto& br = b.re_.value();
  const auto& bi = b.im_.value();
  const bool a_im = sgn(ai) != 0;
  const bool b_im = sgn(bi) != 0;
  if (sgn(ar) != 0 && sgn(br) != 0) sub_prod(re, ar, br);
  if (a_im && b_im) add_prod(re, ai, bi);
  if (sgn(ar) != 0 && b_im) sub_prod(im, ar, bi);
  if (a_im && sgn(br) != 0) sub_prod(im, ai, br);
}

void GaussianRational::add_mul(const GaussianRational& a, const GaussianRational& b) {
  auto& re = re_.raw();
  auto& im = im_.raw();
  const auto& ar = a.re_.value();
  const auto& ai = a.im_.value();
  const auto& br = b.re_.value();
  const auto& bi = b.im_.value();
  const bool a_im = sgn(ai) != 0;
  const bool b_im = sgn(bi) != 0;
  if (sgn(ar) != 0 && sgn(br) != 0) add_prod(re, ar, br);
  if (a_im && b_im) sub_prod(re, ai, bi);
  if (sgn(ar) != 0 && b_im) add_prod(im, ar, bi);
  if (a_im && sgn(br) != 0) add_prod(im, ai, br);
}

std::string GaussianRational::to_string() const {
  std::string out = re_.to_string();
  out += im_.sign() < 0 ? '-' : '+';
  out += im_.abs().to_string();
  out += 'i';
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  const auto fail = [&]() {
    return Error(ErrorKind::InvalidInput, "malformed Gaussian rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  if (text.back() != 'i') return GaussianRational(Rational::parse(text));

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading; everything after it is the imaginary part.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  Rational re(0);
  std::string_view im_text = body;
  if (split != std::string_view::npos) {
    re = Rational::parse(body.substr(0, split));
    im_text = body.substr(split);
  }
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = Rational(1);
  } else if (im_text == "-") {
    im = Rational(-1);
  } else {
    try {
      im = Rational::parse(im_text);
    } catch (const Error&) {
      throw fail();
    }
  }
  return {re, im};
}

}  // namespace hermrank
