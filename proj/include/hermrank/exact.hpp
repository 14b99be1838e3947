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

// Exact rational and Gaussian-rational field arithmetic.
//
// Rational is a thin value wrapper over GMP's mpq_t that keeps every value in
// canonical form (positive denominator, reduced). GaussianRational is the pair
// re + im*i over it. Nothing here ever goes through floating point except the
// explicitly lossy to_double() used for display.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "hermrank/error.hpp"

namespace hermrank {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const BigInt& value) : value_(value) {}
  /// Throws DivisionByZero when den == 0.
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class value);

  /// Accepts "a" or "a/b" with an optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// Bits in numerator plus bits in denominator; the pivot heuristic key.
  std::size_t bit_size() const;

  /// "a" when integral, "a/b" otherwise.
  std::string to_string() const;
  /// Lossy. Display only.
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  friend class GaussianRational;
  mpq_class& raw() noexcept { return value_; }

  mpq_class value_;
};

/// -1, 0 or +1.
inline int sign(const Rational& x) noexcept { return x.sign(); }

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}  // NOLINT
  GaussianRational(int re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "a", "a/b", "bi", "a+bi", "a/b-c/di", "i", "-i" and similar.
  static GaussianRational parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }
  std::size_t bit_size() const { return re_.bit_size() + im_.bit_size(); }

  /// |x|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  /// Always "<re><sign><|im|>i", e.g. "1/2+3/4i", "-2-1i", "0+0i".
  std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  /// this -= a * b without temporaries for the common elimination update.
  void sub_mul(const GaussianRational& a, const GaussianRational& b);
  /// this += a * b.
  void add_mul(const GaussianRational& a, const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }

}  // namespace hermrank
