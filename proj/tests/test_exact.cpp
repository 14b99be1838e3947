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

#include "hermrank/exact.hpp"
#include "test_support.hpp"

using namespace hermrank;
using hermrank::testing::random_gaussian;

namespace {

GaussianRational gq(const char* text) { return GaussianRational::parse(text); }

bool canonical(const Rational& x) {
  mpq_class copy = x.value();
  copy.canonicalize();
  return copy.get_num() == x.value().get_num() && copy.get_den() == x.value().get_den() && x.value().get_den() > 0;
}

}  // namespace

TEST_CASE("gaussian product with its conjugate is the squared modulus") {
  CHECK(gq("1/2+1i") * gq("1/2-1i") == GaussianRational(Rational(5, 4)));
}

TEST_CASE("adding zero is the identity") {
  const GaussianRational x = gq("3/7-2i");
  CHECK(x + GaussianRational() == x);
}

TEST_CASE("values are kept in lowest terms") {
  const GaussianRational x(Rational(BigInt(2), BigInt(4)), Rational(0));
  CHECK(x == GaussianRational(Rational(1, 2)));
  CHECK(x.re().numerator() == 1);
  CHECK(x.re().denominator() == 2);
  CHECK(Rational(BigInt(3), BigInt(-6)).to_string() == "-1/2");
}

TEST_CASE("conjugation") {
  CHECK(conj(gq("1+2i")) == gq("1-2i"));
  CHECK(conj(GaussianRational(Rational(4, 9))) == GaussianRational(Rational(4, 9)));
  CHECK(conj(conj(gq("3/7-i"))) == gq("3/7-i"));
}

TEST_CASE("sign") {
  CHECK(sign(Rational(-3, 5)) == -1);
  CHECK(sign(Rational(0)) == 0);
  CHECK(sign(Rational(7)) == 1);
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  try {
    (void)GaussianRational().inverse();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("text forms") {
  CHECK(Rational::parse("-12/8").to_string() == "-3/2");
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK(gq("i") == GaussianRational::i());
  CHECK(gq("-i") == -GaussianRational::i());
  CHECK(gq("1/2-3/4i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
  CHECK(gq("2i") == GaussianRational(Rational(0), Rational(2)));
  CHECK(gq("1/2+3/4i").to_string() == "1/2+3/4i");
  CHECK(GaussianRational().to_string() == "0+0i");
  CHECK(gq("-2-i").to_string() == "-2-1i");
  for (const char* s : {"0+0i", "1/2+3/4i", "-2-1i", "7/3+0i", "0-5/2i"}) CHECK(gq(s).to_string() == s);
}

TEST_CASE("bit size counts numerator and denominator bits") {
  CHECK(Rational(0).bit_size() <= 2);
  CHECK(Rational(255, 1).bit_size() > Rational(1, 1).bit_size());
  CHECK(Rational(1, 1024).bit_size() > Rational(1, 2).bit_size());
}

TEST_CASE("field axioms on random triples") {
  Rng rng(20260101);
  for (int trial = 0; trial < 10000; ++trial) {
    const GaussianRational a = random_gaussian(rng, 50, 20);
    const GaussianRational b = random_gaussian(rng, 50, 20);
    const GaussianRational c = random_gaussian(rng, 50, 20);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(conj(a * b) == conj(a) * conj(b));
    if (!a.is_zero()) REQUIRE(a * a.inverse() == GaussianRational(1));
    REQUIRE(a - a == GaussianRational());
    GaussianRational acc = c;
    acc.sub_mul(a, b);
    REQUIRE(acc == c - a * b);
    acc.add_mul(a, b);
    REQUIRE(acc == c);
    const GaussianRational prod = a * b;
    REQUIRE(canonical(prod.re()));
    REQUIRE(canonical(prod.im()));
    REQUIRE((a * conj(a)).is_real());
    REQUIRE((a * conj(a)).re() == a.norm());
  }
}
