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

#include "hermrank/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hermrank {

namespace {

constexpr int kMaxExponent = 1000;

// ---------------------------------------------------------------------------
// Parser

// A polynomial in z and conj(z) without the Hermitian invariant; the parser
// only enforces symmetry on the final result.
using RawPoly = TermMap;

void add_into(RawPoly& acc, const TermKey& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

RawPoly multiply(const RawPoly& a, const RawPoly& b) {
  RawPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_into(out, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t n, bool allow_conjugates)
      : text_(text), n_(n), allow_conj_(allow_conjugates) {}

  RawPoly parse() {
    skip_space();
    if (at_end()) fail(ErrorKind::SyntaxError, "empty expression");
    RawPoly r = expr();
    skip_space();
    if (!at_end()) fail(ErrorKind::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const { throw ParseError(kind, pos_, msg); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(ErrorKind::SyntaxError, std::string("expected '") + c + "'");
  }

  RawPoly constant(const GaussianRational& c) const {
    RawPoly r;
    add_into(r, {MultiIndex::zero(n_), MultiIndex::zero(n_)}, c);
    return r;
  }

  RawPoly expr() {
    RawPoly acc = term();
    for (;;) {
      if (accept('+')) {
        for (const auto& [k, c] : term()) add_into(acc, k, c);
      } else if (accept('-')) {
        for (const auto& [k, c] : term()) add_into(acc, k, -c);
      } else {
        return acc;
      }
    }
  }

  RawPoly term() {
    RawPoly acc = factor();
    while (accept('*')) acc = multiply(acc, factor());
    return acc;
  }

  RawPoly factor() {
    if (accept('-')) {
      RawPoly r = factor();
      for (auto& [k, c] : r) c = -c;
      return r;
    }
    if (accept('+')) return factor();
    RawPoly base = atom();
    while (accept('^')) {
      skip_space();
      const int e = natural();
      RawPoly power = constant(GaussianRational(1));
      for (int i = 0; i < e; ++i) power = multiply(power, base);
      base = std::move(power);
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int natural() {
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.empty()) fail(ErrorKind::SyntaxError, "expected a non-negative integer exponent");
    if (d.size() > 4 || std::stoi(d) > kMaxExponent) {
      pos_ = start;
      fail(ErrorKind::SyntaxError, "exponent exceeds " + std::to_string(kMaxExponent));
    }
    return std::stoi(d);
  }

  std::size_t variable_index() {
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.empty()) fail(ErrorKind::SyntaxError, "expected a variable index after 'z'");
    if (d.size() > 9 || std::stoul(d) < 1 || std::stoul(d) > n_) {
      pos_ = start;
      fail(ErrorKind::UnknownVariable, "z" + d + " is not one of z1..z" + std::to_string(n_));
    }
    return std::stoul(d) - 1;
  }

  RawPoly variable(bool conjugated) {
    const std::size_t j = variable_index();
    RawPoly r;
    const MultiIndex e = MultiIndex::unit(n_, j);
    const MultiIndex zero = MultiIndex::zero(n_);
    add_into(r, conjugated ? TermKey{zero, e} : TermKey{e, zero}, GaussianRational(1));
    return r;
  }

  RawPoly conjugated_variable(std::size_t token_start) {
    if (!allow_conj_) {
      pos_ = token_start;
      fail(ErrorKind::SyntaxError, "conjugated variable in a holomorphic polynomial");
    }
    if (peek() != 'z') fail(ErrorKind::SyntaxError, "expected 'z'");
    ++pos_;
    return variable(true);
  }

  RawPoly atom() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RawPoly r = expr();
      expect(')');
      return r;
    }
    if (c == 'z') {
      ++pos_;
      return variable(false);
    }
    if (c == '~') {
      ++pos_;
      return conjugated_variable(start);
    }
    if (text_.substr(pos_, 5) == "conj(") {
      pos_ += 5;
      RawPoly r = conjugated_variable(start);
      expect(')');
      return r;
    }
    if (c == 'i') {
      ++pos_;
      return constant(GaussianRational::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits());
      BigInt den = 1;
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_start = pos_;
        const std::string d = digits();
        if (d.empty()) fail(ErrorKind::SyntaxError, "expected a denominator");
        den = BigInt(d);
        if (den == 0) {
          pos_ = den_start;
          fail(ErrorKind::SyntaxError, "zero denominator");
        }
      }
      Rational value(num, den);
      if (peek() == 'i') {
        ++pos_;
        return constant(GaussianRational(Rational(0), value));
      }
      return constant(GaussianRational(value));
    }
    if (at_end()) fail(ErrorKind::SyntaxError, "unexpected end of input");
    fail(ErrorKind::SyntaxError, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t n_;
  bool allow_conj_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Formatter

std::string monomial_text(const MultiIndex& m, const char* prefix) {
  std::string out;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += prefix;
    out += std::to_string(j + 1);
    if (m[j] > 1) out += '^' + std::to_string(m[j]);
  }
  return out;
}

// Appends "c*mono" with the sign hoisted into the joining operator.
void append_term(std::string& out, const GaussianRational& c, const std::string& mono) {
  bool negative = false;
  std::string coef;
  if (c.is_real()) {
    negative = c.re().sign() < 0;
    const Rational a = c.re().abs();
    if (!(a == Rational(1)) || mono.empty()) coef = a.to_string();
  } else if (c.re().is_zero()) {
    negative = c.im().sign() < 0;
    const Rational a = c.im().abs();
    coef = a == Rational(1) ? "i" : a.to_string() + "i";
  } else {
    coef = "(" + c.to_string() + ")";
  }
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  out += coef;
  if (!coef.empty() && !mono.empty()) out += '*';
  out += mono;
}

// ---------------------------------------------------------------------------
// JSON helpers

std::string child(const std::string& pointer, std::string_view key) { return pointer + "/" + std::string(key); }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& field(const Json& j, const std::string& pointer, std::string_view key) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  auto it = j.find(std::string(key));
  if (it == j.end()) throw SchemaError(child(pointer, key), "missing field");
  return *it;
}

const Json* optional_field(const Json& j, std::string_view key) {
  auto it = j.find(std::string(key));
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t get_int(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t get_uint64(const Json& j, const std::string& pointer) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw SchemaError(pointer, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::size_t get_size(const Json& j, const std::string& pointer) {
  return static_cast<std::size_t>(get_uint64(j, pointer));
}

bool get_bool(const Json& j, const std::string& pointer) {
  if (!j.is_boolean()) throw SchemaError(pointer, "expected a boolean");
  return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& pointer) {
  if (!j.is_string()) throw SchemaError(pointer, "expected a string");
  return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array");
  return j;
}

Rational get_rational(const Json& j, const std::string& pointer) {
  const std::string s = get_string(j, pointer);
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    throw SchemaError(pointer, "malformed rational \"" + s + "\" (" + e.what() + ")");
  }
}

MultiIndex get_multi_index(const Json& j, const std::string& pointer, std::size_t n) {
  get_array(j, pointer);
  if (j.size() != n) throw SchemaError(pointer, "expected " + std::to_string(n) + " exponents");
  std::vector<int> e;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::int64_t v = get_int(j[k], child(pointer, k));
    if (v < 0 || v > kMaxExponent) throw SchemaError(child(pointer, k), "exponent out of range");
    e.push_back(static_cast<int>(v));
  }
  return MultiIndex(std::move(e));
}

Json interval_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

Interval get_interval(const Json& j, const std::string& pointer) {
  get_array(j, pointer);
  if (j.size() != 2) throw SchemaError(pointer, "expected [lo, hi]");
  return {get_int(j[0], child(pointer, 0)), get_int(j[1], child(pointer, 1))};
}

std::vector<Interval> get_intervals(const Json& j, const std::string& pointer) {
  std::vector<Interval> out;
  for (std::size_t k = 0; k < get_array(j, pointer).size(); ++k) out.push_back(get_interval(j[k], child(pointer, k)));
  return out;
}

template <typename T, typename F>
std::vector<T> get_list(const Json& j, const std::string& pointer, F&& read) {
  std::vector<T> out;
  for (std::size_t k = 0; k < get_array(j, pointer).size(); ++k) out.push_back(read(j[k], child(pointer, k)));
  return out;
}

// Re-raises library errors from nested constructors as schema errors.
template <typename F>
auto at_pointer(const std::string& pointer, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(pointer, e.what());
  }
}

Finding finding_from_json(const Json& j, const std::string& ptr) {
  Finding f;
  f.index = get_size(field(j, ptr, "index"), child(ptr, "index"));
  f.kind = get_string(field(j, ptr, "kind"), child(ptr, "kind"));
  f.detail = get_string(field(j, ptr, "detail"), child(ptr, "detail"));
  f.poly = get_string(field(j, ptr, "poly"), child(ptr, "poly"));
  return f;
}

Json finding_json(const Finding& f) {
  return {{"index", f.index}, {"kind", f.kind}, {"detail", f.detail}, {"poly", f.poly}};
}

}  // namespace

// ---------------------------------------------------------------------------

HermitianPoly parse_poly(std::string_view text, std::size_t n) {
  RawPoly raw = Parser(text, n, true).parse();
  return HermitianPoly::from_terms(n, std::move(raw));
}

HoloPoly parse_holo(std::string_view text, std::size_t n) {
  HoloPoly::Terms terms;
  for (const auto& [k, c] : Parser(text, n, false).parse()) terms.emplace(k.first, c);
  return HoloPoly(n, std::move(terms));
}

std::string format_poly(const HermitianPoly& f) {
  std::string out;
  for (const auto& [k, c] : f.terms()) {
    std::string mono = monomial_text(k.first, "z");
    const std::string conj_part = monomial_text(k.second, "~z");
    if (!mono.empty() && !conj_part.empty()) mono += '*';
    mono += conj_part;
    append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

std::string format_holo(const HoloPoly& g) {
  std::string out;
  for (const auto& [a, c] : g.terms()) append_term(out, c, monomial_text(a, "z"));
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

Json to_json(const HermitianPoly& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    terms.push_back({{"alpha", k.first.exponents()},
                     {"beta", k.second.exponents()},
                     {"re", c.re().to_string()},
                     {"im", c.im().to_string()}});
  }
  return {{"n", f.n()}, {"terms", std::move(terms)}};
}

HermitianPoly poly_from_json(const Json& j) {
  const std::string root;
  const std::size_t n = get_size(field(j, root, "n"), "/n");
  const Json& terms = get_array(field(j, root, "terms"), "/terms");
  TermMap map;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string ptr = child("/terms", k);
    const MultiIndex a = get_multi_index(field(terms[k], ptr, "alpha"), child(ptr, "alpha"), n);
    const MultiIndex b = get_multi_index(field(terms[k], ptr, "beta"), child(ptr, "beta"), n);
    GaussianRational c(get_rational(field(terms[k], ptr, "re"), child(ptr, "re")),
                       get_rational(field(terms[k], ptr, "im"), child(ptr, "im")));
    if (!map.emplace(TermKey{a, b}, std::move(c)).second) throw SchemaError(ptr, "duplicate (alpha, beta) pair");
  }
  return at_pointer("/terms", [&] { return HermitianPoly::from_terms(n, std::move(map)); });
}

Json to_json(const WeightedSOSDecomposition& d) {
  Json weights = Json::array();
  for (const auto& w : d.weights) weights.push_back(w.to_string());
  Json polys = Json::array();
  for (const auto& g : d.polys) polys.push_back(format_holo(g));
  return {{"n", d.n},     {"degree", d.degree}, {"homogenized", d.homogenized}, {"p", d.p()},
          {"q", d.q()},   {"rank", d.rank()},   {"weights", std::move(weights)}, {"polys", std::move(polys)}};
}

WeightedSOSDecomposition decomposition_from_json(const Json& j) {
  const std::string root;
  WeightedSOSDecomposition d;
  d.n = get_size(field(j, root, "n"), "/n");
  const std::int64_t degree = get_int(field(j, root, "degree"), "/degree");
  if (degree < 0 || degree > kMaxExponent) throw SchemaError("/degree", "degree out of range");
  d.degree = static_cast<int>(degree);
  d.homogenized = get_bool(field(j, root, "homogenized"), "/homogenized");
  d.weights = get_list<Rational>(field(j, root, "weights"), "/weights", get_rational);
  d.polys = get_list<HoloPoly>(field(j, root, "polys"), "/polys", [&](const Json& e, const std::string& ptr) {
    const std::string text = get_string(e, ptr);
    return at_pointer(ptr, [&] { return parse_holo(text, d.n); });
  });
  if (d.weights.size() != d.polys.size()) throw SchemaError("/polys", "weights and polys differ in length");
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    if (d.weights[k].is_zero()) throw SchemaError(child("/weights", k), "zero weight");
    if (k > 0 && d.weights[k - 1].sign() < 0 && d.weights[k].sign() > 0) {
      throw SchemaError(child("/weights", k), "positive weight after a negative one");
    }
    const auto hd = d.polys[k].homogeneous_degree();
    if (!hd || *hd != d.degree) throw SchemaError(child("/polys", k), "not homogeneous of the stated degree");
  }
  for (const char* key : {"p", "q", "rank"}) {
    const std::size_t stated = get_size(field(j, root, key), child("", key));
    const std::size_t actual = std::string_view(key) == "p" ? d.p() : std::string_view(key) == "q" ? d.q() : d.rank();
    if (stated != actual) throw SchemaError(child("", key), "does not match the weights");
  }
  return d;
}

Json to_json(const GapProfile& p) {
  Json allowed = Json::array();
  for (const auto& iv : p.allowed) allowed.push_back(interval_json(iv));
  Json forbidden = Json::array();
  for (const auto& iv : p.forbidden) forbidden.push_back(interval_json(iv));
  return {{"n", p.n},   {"tau", p.tau},   {"variant", variant_name(p.variant)}, {"k0", p.k0},
          {"tail", p.tail}, {"allowed", std::move(allowed)}, {"forbidden", std::move(forbidden)}};
}

GapProfile profile_from_json(const Json& j) {
  const std::string root;
  GapProfile p;
  p.n = get_int(field(j, root, "n"), "/n");
  p.tau = get_int(field(j, root, "tau"), "/tau");
  const std::string v = get_string(field(j, root, "variant"), "/variant");
  p.variant = at_pointer("/variant", [&] { return parse_variant(v); });
  p.k0 = get_int(field(j, root, "k0"), "/k0");
  p.tail = get_int(field(j, root, "tail"), "/tail");
  p.allowed = get_intervals(field(j, root, "allowed"), "/allowed");
  p.forbidden = get_intervals(field(j, root, "forbidden"), "/forbidden");
  return p;
}

Json to_json(const SpanReport& r) {
  return {{"check", r.check},     {"subspace_dims", r.subspace_dims}, {"measured", r.measured},
          {"bound", r.bound},     {"direction", r.direction},         {"applicable", r.applicable},
          {"pass", r.pass},       {"retries", r.retries},             {"seed", r.seed},
          {"note", r.note}};
}

SpanReport span_report_from_json(const Json& j) {
  const std::string root;
  SpanReport r;
  r.check = get_string(field(j, root, "check"), "/check");
  auto read_long = [](const Json& e, const std::string& ptr) { return static_cast<long>(get_int(e, ptr)); };
  r.subspace_dims = get_list<long>(field(j, root, "subspace_dims"), "/subspace_dims", read_long);
  r.measured = get_list<long>(field(j, root, "measured"), "/measured", read_long);
  r.bound = read_long(field(j, root, "bound"), "/bound");
  r.direction = get_string(field(j, root, "direction"), "/direction");
  if (r.direction != ">=" && r.direction != "<=") throw SchemaError("/direction", "expected \">=\" or \"<=\"");
  r.applicable = get_bool(field(j, root, "applicable"), "/applicable");
  r.pass = get_bool(field(j, root, "pass"), "/pass");
  r.retries = static_cast<int>(get_int(field(j, root, "retries"), "/retries"));
  r.seed = get_uint64(field(j, root, "seed"), "/seed");
  r.note = get_string(field(j, root, "note"), "/note");
  return r;
}

Json to_json(const FamilySpec& s) {
  return {{"kind", family_name(s.kind)},   {"n", s.n},
          {"form", s.form.to_string()},    {"degree", s.degree},
          {"coef_range", s.coef_range},    {"count", s.count},
          {"support_cap", s.support_cap},  {"exact_degree", s.exact_degree},
          {"seed", s.seed}};
}

FamilySpec family_spec_from_json(const Json& j) {
  const std::string root;
  FamilySpec s;
  const std::string kind = get_string(field(j, root, "kind"), "/kind");
  s.kind = at_pointer("/kind", [&] { return parse_family(kind); });
  s.n = get_size(field(j, root, "n"), "/n");
  const std::string form = get_string(field(j, root, "form"), "/form");
  s.form = at_pointer("/form", [&] { return SignatureForm::parse(form); });
  s.degree = static_cast<int>(get_int(field(j, root, "degree"), "/degree"));
  s.coef_range = static_cast<long>(get_int(field(j, root, "coef_range"), "/coef_range"));
  s.count = get_size(field(j, root, "count"), "/count");
  s.support_cap = get_size(field(j, root, "support_cap"), "/support_cap");
  s.exact_degree = get_bool(field(j, root, "exact_degree"), "/exact_degree");
  s.seed = get_uint64(field(j, root, "seed"), "/seed");
  return s;
}

Json to_json(const Report& r) {
  Json instances = Json::array();
  for (const auto& rec : r.instances) {
    instances.push_back({{"index", rec.index},
                         {"hash", rec.hash},
                         {"rank", rec.rank},
                         {"p", rec.p},
                         {"q", rec.q},
                         {"homogenized", rec.homogenized},
                         {"verified", rec.verified ? Json(*rec.verified) : Json(nullptr)},
                         {"classification", rec.classification},
                         {"gap", rec.gap ? interval_json(*rec.gap) : Json(nullptr)},
                         {"error", rec.error}});
  }
  Json histogram = Json::array();
  for (const auto& b : r.histogram) {
    histogram.push_back(
        {{"lo", b.lo}, {"hi", b.hi ? Json(*b.hi) : Json(nullptr)}, {"label", b.label}, {"count", b.count}});
  }
  Json violations = Json::array();
  for (const auto& f : r.violations) violations.push_back(finding_json(f));
  Json candidates = Json::array();
  for (const auto& f : r.candidates) candidates.push_back(finding_json(f));
  Json out = {{"schema", r.schema},
              {"tool_version", r.tool_version},
              {"seed", r.spec.seed},
              {"spec", to_json(r.spec)},
              {"variant", variant_name(r.variant)},
              {"decompositions", r.decompositions},
              {"profile", r.profile ? to_json(*r.profile) : Json(nullptr)},
              {"instances", std::move(instances)},
              {"histogram", std::move(histogram)},
              {"violations", std::move(violations)},
              {"counterexample_candidates", std::move(candidates)},
              {"summary",
               {{"instances", r.instances.size()},
                {"skipped", r.skipped},
                {"violations", r.violations.size()},
                {"counterexample_candidates", r.candidates.size()}}}};
  if (r.wall_clock_seconds) out["wall_clock_seconds"] = *r.wall_clock_seconds;
  return out;
}

Report report_from_json(const Json& j) {
  const std::string root;
  Report r;
  r.schema = get_string(field(j, root, "schema"), "/schema");
  if (r.schema != kReportSchema) throw SchemaError("/schema", "unsupported schema \"" + r.schema + "\"");
  r.tool_version = get_string(field(j, root, "tool_version"), "/tool_version");
  r.spec = at_pointer("/spec", [&] { return family_spec_from_json(field(j, root, "spec")); });
  if (get_uint64(field(j, root, "seed"), "/seed") != r.spec.seed) throw SchemaError("/seed", "differs from /spec/seed");
  const std::string v = get_string(field(j, root, "variant"), "/variant");
  r.variant = at_pointer("/variant", [&] { return parse_variant(v); });
  if (const Json* p = optional_field(j, "profile")) r.profile = at_pointer("/profile", [&] { return profile_from_json(*p); });
  r.instances = get_list<InstanceRecord>(field(j, root, "instances"), "/instances", [](const Json& e, const std::string& ptr) {
    InstanceRecord rec;
    rec.index = get_size(field(e, ptr, "index"), child(ptr, "index"));
    rec.hash = get_string(field(e, ptr, "hash"), child(ptr, "hash"));
    rec.rank = get_size(field(e, ptr, "rank"), child(ptr, "rank"));
    rec.p = get_size(field(e, ptr, "p"), child(ptr, "p"));
    rec.q = get_size(field(e, ptr, "q"), child(ptr, "q"));
    rec.homogenized = get_bool(field(e, ptr, "homogenized"), child(ptr, "homogenized"));
    if (const Json* v = optional_field(e, "verified")) rec.verified = get_bool(*v, child(ptr, "verified"));
    rec.classification = get_string(field(e, ptr, "classification"), child(ptr, "classification"));
    if (const Json* g = optional_field(e, "gap")) rec.gap = get_interval(*g, child(ptr, "gap"));
    rec.error = get_string(field(e, ptr, "error"), child(ptr, "error"));
    return rec;
  });
  r.histogram = get_list<HistogramBucket>(field(j, root, "histogram"), "/histogram", [](const Json& e, const std::string& ptr) {
    HistogramBucket b;
    b.lo = get_int(field(e, ptr, "lo"), child(ptr, "lo"));
    if (const Json* hi = optional_field(e, "hi")) b.hi = get_int(*hi, child(ptr, "hi"));
    b.label = get_string(field(e, ptr, "label"), child(ptr, "label"));
    b.count = get_size(field(e, ptr, "count"), child(ptr, "count"));
    return b;
  });
  r.decompositions = get_bool(field(j, root, "decompositions"), "/decompositions");
  r.violations = get_list<Finding>(field(j, root, "violations"), "/violations", finding_from_json);
  r.candidates =
      get_list<Finding>(field(j, root, "counterexample_candidates"), "/counterexample_candidates", finding_from_json);
  const Json& summary = field(j, root, "summary");
  r.skipped = get_size(field(summary, "/summary", "skipped"), "/summary/skipped");
  if (const Json* w = optional_field(j, "wall_clock_seconds")) {
    if (!w->is_number()) throw SchemaError("/wall_clock_seconds", "expected a number");
    r.wall_clock_seconds = w->get<double>();
  }
  return r;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::InvalidInput, "write failed for " + path);
}

}  // namespace hermrank
