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
#include "test_support.hpp"

using namespace hermrank;
using namespace hermrank::testing;

namespace {

std::string golden(const std::string& name) { return read_file(std::string(HERMRANK_GOLDEN_DIR) + "/" + name); }

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

template <typename F>
std::size_t offset_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error raised");
  return 0;
}

template <typename F>
std::string pointer_of(F&& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  FAIL("no schema error raised");
  return {};
}

}  // namespace

TEST_CASE("parsing examples") {
  const HermitianPoly id = parse_poly("z1*~z1 + z2*~z2", 2);
  CHECK(coefficient_matrix(id, 1).matrix() == Matrix::identity(2));
  const HermitianPoly off = parse_poly("z1*~z2 + z2*~z1", 2);
  CHECK(off.size() == 2);
  CHECK(off.coefficient(MultiIndex({1, 0}), MultiIndex({0, 1})) == GaussianRational(1));
  CHECK(kind_of([] { parse_poly("z1*~z2", 2); }) == ErrorKind::NotHermitian);
}

TEST_CASE("grammar coverage") {
  CHECK(parse_poly("conj(z1)*z1", 1) == parse_poly("z1*~z1", 1));
  CHECK(parse_poly("(z1 + z2)*(~z1 + ~z2)", 2) == parse_poly("z1*~z1 + z1*~z2 + z2*~z1 + z2*~z2", 2));
  CHECK(parse_poly("(z1*~z1)^2", 1) == parse_poly("z1^2*~z1^2", 1));
  CHECK(parse_poly("-2*z1*~z1 + 3", 1) == parse_poly("3 - 2*z1*~z1", 1));
  CHECK(parse_poly("(1/2+3/4i)*z1*~z2 + (1/2-3/4i)*z2*~z1", 2).coefficient(MultiIndex({1, 0}), MultiIndex({0, 1})) ==
        GaussianRational(Rational(1, 2), Rational(3, 4)));
  CHECK(parse_poly("2i*z1*~z2 - 2i*z2*~z1", 2).size() == 2);
  CHECK(parse_poly("i*z1 - i*~z1", 1).size() == 2);
  CHECK(parse_poly("z1*~z1 - z1*~z1", 1).is_zero());
  CHECK(parse_poly("0", 3).is_zero());
  CHECK(parse_poly("  4/6 ", 1) == HermitianPoly::constant(1, Rational(2, 3)));
  CHECK(parse_poly("z1^0", 1) == HermitianPoly::constant(1, 1));
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK(kind_of([] { parse_poly("z1 + * z2", 2); }) == ErrorKind::SyntaxError);
  CHECK(offset_of([] { parse_poly("z1 + * z2", 2); }) == 5);
  CHECK(offset_of([] { parse_poly("z1*~z1 +", 1); }) == 8);
  CHECK(offset_of([] { parse_poly("(z1*~z1", 1); }) == 7);
  CHECK(offset_of([] { parse_poly("z1*~z1)", 1); }) == 6);
  CHECK(offset_of([] { parse_poly("z1^x", 1); }) == 3);
  CHECK(offset_of([] { parse_poly("1/0", 1); }) == 2);
  CHECK(offset_of([] { parse_poly("", 1); }) == 0);
  CHECK(offset_of([] { parse_poly("sin(z1)", 1); }) == 0);
  CHECK(kind_of([] { parse_poly("z3*~z3", 2); }) == ErrorKind::UnknownVariable);
  CHECK(offset_of([] { parse_poly("z1*~z1 + z3*~z3", 2); }) == 10);
  CHECK(kind_of([] { parse_poly("z0*~z0", 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_holo("z1*~z1", 1); }) == ErrorKind::SyntaxError);
}

TEST_CASE("formatting") {
  CHECK(format_poly(multiply_by_form(HermitianPoly::constant(2, 1), SignatureForm::euclidean(2))) ==
        "z1*~z1 + z2*~z2");
  CHECK(format_poly(HermitianPoly(3)) == "0");
  CHECK(format_poly(parse_poly("3 - 2*z1*~z1", 1)) == "3 - 2*z1*~z1");
  CHECK(format_poly(parse_poly("-z1*~z1", 1)) == "-z1*~z1");
  CHECK(format_poly(parse_poly("2i*z1*~z2 - 2i*z2*~z1", 2)) == "2i*z1*~z2 - 2i*z2*~z1");
  CHECK(format_poly(parse_poly("(1/2+3/4i)*z1*~z2 + (1/2-3/4i)*z2*~z1", 2)) ==
        "(1/2+3/4i)*z1*~z2 + (1/2-3/4i)*z2*~z1");
  CHECK(format_holo(parse_holo("z1^2 - i*z1*z2 + 1/3", 2)) == "1/3 + z1^2 - i*z1*z2");
  CHECK(format_holo(HoloPoly(2)) == "0");
}

TEST_CASE("text and JSON round trips on random polynomials") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    HermitianPoly f = trial % 2 ? random_general(rng, n, 2, 9, 70) : random_bihomogeneous(rng, n, 2, 9, 60);
    f = Rational(1, static_cast<long>(uniform_int(rng, 1, 7))) * f;
    const std::string text = format_poly(f);
    CAPTURE(text);
    REQUIRE(parse_poly(text, n) == f);
    const std::string json = canonical_dump(to_json(f));
    const HermitianPoly back = poly_from_json(parse_json(json));
    REQUIRE(back == f);
    REQUIRE(canonical_dump(to_json(back)) == json);
  }
}

TEST_CASE("canonical JSON is pinned by golden files") {
  const HermitianPoly id = parse_poly("z1*~z1 + z2*~z2", 2);
  CHECK(canonical_dump(to_json(id)) == golden("identity2.json"));
  CHECK(canonical_dump(to_json(poly_from_json(parse_json(golden("identity2.json"))))) == golden("identity2.json"));
  CHECK(canonical_dump(to_json(gap_profile(20, 0, TheoremVariant::GeneralThm))) == golden("profile_general_20.json"));
  const auto dec = decompose(parse_poly("z1*~z2 + z2*~z1", 2), SignatureForm(1, 1, 0));
  CHECK(canonical_dump(to_json(dec)) == golden("decomposition_swap.json"));
}

TEST_CASE("schema errors name the offending node") {
  const std::string bad_rational =
      R"({"n":1,"terms":[{"alpha":[1],"beta":[1],"re":"1/0","im":"0"}]})";
  CHECK(pointer_of([&] { poly_from_json(parse_json(bad_rational)); }) == "/terms/0/re");
  CHECK(pointer_of([] { poly_from_json(parse_json(R"({"terms":[]})")); }) == "/n");
  CHECK(pointer_of([] { poly_from_json(parse_json(R"({"n":2,"terms":[{"alpha":[1],"beta":[1,0],"re":"1","im":"0"}]})")); }) ==
        "/terms/0/alpha");
  CHECK(pointer_of([] { poly_from_json(parse_json(R"({"n":1,"terms":[{"alpha":[1],"beta":[1],"re":1,"im":"0"}]})")); }) ==
        "/terms/0/re");
  CHECK(pointer_of([] {
          poly_from_json(parse_json(R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,1],"re":"1","im":"0"}]})"));
        }) == "/terms");
  const std::string dup = R"({"n":1,"terms":[{"alpha":[1],"beta":[1],"re":"1","im":"0"},
                                              {"alpha":[1],"beta":[1],"re":"1","im":"0"}]})";
  CHECK(pointer_of([&] { poly_from_json(parse_json(dup)); }) == "/terms/1");
  CHECK(kind_of([] { parse_json("{"); }) == ErrorKind::SchemaError);
}

TEST_CASE("decomposition JSON re-verifies") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const HermitianPoly a = trial % 2 ? random_general(rng, n, 1, 3, 40) : random_bihomogeneous(rng, n, 1, 3, 40);
    if (a.is_zero()) continue;
    const SignatureForm form = SignatureForm::euclidean(n);
    const auto dec = decompose(a, form);
    const auto back = decomposition_from_json(parse_json(canonical_dump(to_json(dec))));
    CHECK(verify_decomposition(sos_product(a, form), back));
    CHECK(back.weights == dec.weights);
    CHECK(back.polys == dec.polys);
  }
  Json tampered = to_json(decompose(HermitianPoly::constant(2, 1), SignatureForm::euclidean(2)));
  tampered["rank"] = 3;
  CHECK(pointer_of([&] { decomposition_from_json(tampered); }) == "/rank");
  tampered = to_json(decompose(HermitianPoly::constant(2, 1), SignatureForm::euclidean(2)));
  tampered["polys"][1] = "z1*z2";
  CHECK(pointer_of([&] { decomposition_from_json(tampered); }) == "/polys/1");
}

TEST_CASE("profile and span report round trips") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    const GapProfile p = gap_profile(n, 0, TheoremVariant::HomoThm);
    CHECK(profile_from_json(parse_json(canonical_dump(to_json(p)))) == p);
  }
  SpanReport r;
  r.check = "orthopair";
  r.subspace_dims = {1, 2};
  r.measured = {3, 4};
  r.bound = 9;
  r.direction = "<=";
  r.seed = 18446744073709551557ULL;
  r.note = "x";
  CHECK(span_report_from_json(to_json(r)) == r);
  Json j = to_json(r);
  j["direction"] = "=";
  CHECK(pointer_of([&] { span_report_from_json(j); }) == "/direction");
}
