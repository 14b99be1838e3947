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

// Text and JSON formats. docs/formats.md has the grammar and the schemas.
//
// Polynomial text:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+'|'-') factor | atom ('^' nat)*
//   atom   := literal | 'z'k | '~z'k | 'conj(z'k')' | '(' expr ')'
//   literal:= digits ['/' digits] ['i'] | 'i'
//
// JSON is emitted with sorted keys, two-space indentation and every rational
// as a string, so equal values serialize to equal bytes.

#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "hermrank/gaps.hpp"
#include "hermrank/harness.hpp"
#include "hermrank/poly.hpp"
#include "hermrank/sos.hpp"
#include "hermrank/span_lab.hpp"

namespace hermrank {

using Json = nlohmann::json;

/// Throws ParseError (SyntaxError, UnknownVariable) or Error(NotHermitian).
HermitianPoly parse_poly(std::string_view text, std::size_t n);
/// Same grammar without conjugated variables.
HoloPoly parse_holo(std::string_view text, std::size_t n);

/// Graded term order; "0" for the zero polynomial.
std::string format_poly(const HermitianPoly& f);
std::string format_holo(const HoloPoly& g);

Json to_json(const HermitianPoly& f);
Json to_json(const WeightedSOSDecomposition& d);
Json to_json(const GapProfile& p);
Json to_json(const SpanReport& r);
Json to_json(const FamilySpec& s);
Json to_json(const Report& r);

// Readers throw SchemaError carrying the JSON pointer of the bad node.
HermitianPoly poly_from_json(const Json& j);
WeightedSOSDecomposition decomposition_from_json(const Json& j);
GapProfile profile_from_json(const Json& j);
SpanReport span_report_from_json(const Json& j);
FamilySpec family_spec_from_json(const Json& j);
Report report_from_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& j);
/// Throws SchemaError on malformed JSON.
Json parse_json(std::string_view text);

/// Whole-file helpers. Throw InvalidInput on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace hermrank
