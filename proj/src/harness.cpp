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

#include "hermrank/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "hermrank/io.hpp"
#include "hermrank/random.hpp"
#include "hermrank/sos.hpp"

namespace hermrank {

namespace {

// Safety valve against specs that would never produce `count` distinct instances.
constexpr std::size_t kMaxDrawsPerInstance = 1000;

std::vector<MultiIndex> monomials_up_to(std::size_t n, int degree, bool exact) {
  std::vector<MultiIndex> out;
  for (int e = exact ? degree : 0; e <= degree; ++e) {
    const MonomialBasis basis(n, e);
    out.insert(out.end(), basis.monomials().begin(), basis.monomials().end());
  }
  return out;
}

GaussianRational random_nonzero(Rng& rng, long range, bool real) {
  for (;;) {
    GaussianRational c(Rational(uniform_int(rng, -range, range)),
                       Rational(real ? 0 : uniform_int(rng, -range, range)));
    if (!c.is_zero()) return c;
  }
}

// Sparse random Hermitian coefficient matrix over `monomials`. The density
// (k/M)^2, k uniform in [1, M], spreads the draws over low and high ranks.
HermitianPoly random_hermitian(const std::vector<MultiIndex>& monomials, std::size_t n, long range, Rng& rng) {
  const long m = static_cast<long>(monomials.size());
  const long k = uniform_int(rng, 1, m);
  TermMap terms;
  for (long i = 0; i < m; ++i) {
    for (long j = i; j < m; ++j) {
      if (uniform_int(rng, 1, m * m) > k * k) continue;
      const GaussianRational c = random_nonzero(rng, range, i == j);
      terms.emplace(TermKey{monomials[i], monomials[j]}, c);
      if (i != j) terms.emplace(TermKey{monomials[j], monomials[i]}, c.conj());
    }
  }
  return HermitianPoly::from_terms(n, std::move(terms));
}

HermitianPoly draw_instance(const FamilySpec& spec, const std::vector<MultiIndex>& monomials, std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    HermitianPoly a = random_hermitian(monomials, spec.n, spec.coef_range, rng);
    if (a.is_zero()) continue;
    if (spec.kind == FamilyKind::RandomGeneral && is_bihomogeneous(a)) continue;
    return a;
  }
}

// Every subset of `monomials` of size 1..cap (in lexicographic index order)
// with every sign pattern whose first sign is +1.
std::vector<HermitianPoly> monomial_exhaustive(const FamilySpec& spec) {
  const auto monomials = monomials_up_to(spec.n, spec.degree, spec.exact_degree);
  std::vector<HermitianPoly> out;
  std::set<std::string> seen;
  const std::size_t cap = std::min(spec.support_cap, monomials.size());
  std::vector<std::size_t> subset;
  auto emit = [&]() {
    const std::size_t patterns = std::size_t{1} << (subset.size() - 1);
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      if (spec.count != 0 && out.size() >= spec.count) return;
      TermMap terms;
      for (std::size_t k = 0; k < subset.size(); ++k) {
        const bool negative = k > 0 && ((mask >> (k - 1)) & 1U);
        const MultiIndex& m = monomials[subset[k]];
        terms.emplace(TermKey{m, m}, GaussianRational(negative ? -1 : 1));
      }
      HermitianPoly a = HermitianPoly::from_terms(spec.n, std::move(terms));
      if (seen.insert(format_poly(a)).second) out.push_back(std::move(a));
    }
  };
  // Iterative subset enumeration in size-then-lexicographic order.
  for (std::size_t size = 1; size <= cap; ++size) {
    subset.resize(size);
    for (std::size_t k = 0; k < size; ++k) subset[k] = k;
    for (;;) {
      emit();
      if (spec.count != 0 && out.size() >= spec.count) return out;
      std::size_t k = size;
      while (k > 0 && subset[k - 1] == monomials.size() - size + (k - 1)) --k;
      if (k == 0) break;
      ++subset[k - 1];
      for (std::size_t l = k; l < size; ++l) subset[l] = subset[l - 1] + 1;
    }
  }
  return out;
}

std::string kind_string(ErrorKind kind) { return std::string(to_string(kind)); }

std::string interval_text(const Interval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

struct InstanceOutcome {
  InstanceRecord record;
  std::vector<Finding> violations;
  std::optional<Finding> candidate;
  bool skipped = false;
};

InstanceOutcome process(std::size_t index, const HermitianPoly& a, const FamilySpec& spec, TheoremVariant variant,
                        const std::optional<GapProfile>& profile, bool decompositions) {
  InstanceOutcome out;
  InstanceRecord& rec = out.record;
  rec.index = index;
  rec.hash = poly_hash(a);
  auto finding = [&](std::string kind, std::string detail) {
    return Finding{index, std::move(kind), std::move(detail), format_poly(a)};
  };
  try {
    const RankResult rank = sos_rank(a, spec.form);
    rec.rank = rank.rank;
    rec.p = rank.positive;
    rec.q = rank.negative;
    rec.homogenized = rank.homogenized;
    if (decompositions) {
      const WeightedSOSDecomposition dec = decompose(a, spec.form);
      rec.verified = verify_decomposition(sos_product(a, spec.form), dec);
      if (dec.p() != rec.p || dec.q() != rec.q) {
        out.violations.push_back(finding("rank-mismatch", "decomposition has (p,q)=(" + std::to_string(dec.p()) + "," +
                                                             std::to_string(dec.q()) + "), inertia gives (" +
                                                             std::to_string(rec.p) + "," + std::to_string(rec.q) + ")"));
      }
    }
  } catch (const Error& e) {
    rec.classification = "skipped";
    rec.error = kind_string(e.kind());
    out.skipped = true;
    if (e.kind() != ErrorKind::ZeroProduct) out.violations.push_back(finding("error", e.what()));
    return out;
  }
  if (rec.verified == false) out.violations.push_back(finding("decomposition", "weighted decomposition does not expand back"));

  const long lower = static_cast<long>(spec.form.r() + spec.form.s());
  if (is_bihomogeneous(a) && static_cast<long>(rec.rank) < lower) {
    out.violations.push_back(
        finding("lower-bound", "R=" + std::to_string(rec.rank) + " < r+s=" + std::to_string(lower)));
  }

  if (!profile) {
    rec.classification = "unclassified";
    return out;
  }
  const Classification c = classify_rank(static_cast<std::int64_t>(rec.rank), *profile);
  rec.classification = c.label();
  rec.gap = c.gap;
  if (!c.allowed()) {
    std::string detail = "R=" + std::to_string(rec.rank);
    detail += c.kind == RankClass::BelowRange ? " below every allowed rank" : " in forbidden gap";
    if (c.gap) detail += " " + interval_text(*c.gap);
    if (is_proven(variant)) {
      out.violations.push_back(finding("forbidden-rank", detail));
    } else {
      out.candidate = finding("counterexample-candidate", detail);
    }
  }
  return out;
}

std::vector<HistogramBucket> histogram(const std::vector<InstanceRecord>& records,
                                       const std::optional<GapProfile>& profile) {
  std::vector<HistogramBucket> buckets;
  if (profile) {
    for (const auto& iv : profile->allowed) buckets.push_back({iv.lo, iv.hi, "allowed", 0});
    for (const auto& iv : profile->forbidden) buckets.push_back({iv.lo, iv.hi, "forbidden", 0});
    std::sort(buckets.begin(), buckets.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    buckets.push_back({profile->tail, std::nullopt, "tail", 0});
    for (const auto& rec : records) {
      if (!rec.error.empty()) continue;
      const auto r = static_cast<std::int64_t>(rec.rank);
      for (auto& b : buckets) {
        if (r >= b.lo && (!b.hi || r <= *b.hi)) {
          ++b.count;
          break;
        }
      }
    }
    return buckets;
  }
  std::map<std::int64_t, std::size_t> counts;
  for (const auto& rec : records)
    if (rec.error.empty()) ++counts[static_cast<std::int64_t>(rec.rank)];
  for (const auto& [r, c] : counts) buckets.push_back({r, r, "rank", c});
  return buckets;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::MonomialExhaustive: return "monomial-exhaustive";
    case FamilyKind::RandomBihomogeneous: return "random-bihomogeneous";
    case FamilyKind::RandomGeneral: return "random-general";
  }
  return "unknown";
}

FamilyKind parse_family(std::string_view name) {
  for (auto k : {FamilyKind::MonomialExhaustive, FamilyKind::RandomBihomogeneous, FamilyKind::RandomGeneral}) {
    if (family_name(k) == name) return k;
  }
  throw Error(ErrorKind::SpecError, "unknown family '" + std::string(name) +
                                        "' (expected monomial-exhaustive, random-bihomogeneous or random-general)");
}

void FamilySpec::validate() const {
  auto bad = [](const std::string& msg) { throw Error(ErrorKind::SpecError, msg); };
  if (n < 1) bad("n must be at least 1");
  if (form.n() != n) bad("form " + form.to_string() + " acts on " + std::to_string(form.n()) + " variables, not n = " +
                         std::to_string(n));
  if (degree < 0) bad("degree must be non-negative, got " + std::to_string(degree));
  if (kind == FamilyKind::RandomGeneral && degree < 1) bad("random-general needs degree >= 1");
  if (kind != FamilyKind::MonomialExhaustive) {
    if (coef_range < 1) bad("coef_range must be at least 1");
    if (count < 1) bad("count must be at least 1 for random families");
  } else if (support_cap < 1) {
    bad("support_cap must be at least 1");
  }
}

std::vector<HermitianPoly> generate_family(const FamilySpec& spec) {
  spec.validate();
  if (spec.kind == FamilyKind::MonomialExhaustive) return monomial_exhaustive(spec);
  const auto monomials = monomials_up_to(spec.n, spec.degree, spec.kind == FamilyKind::RandomBihomogeneous);
  std::vector<HermitianPoly> out;
  std::set<std::string> seen;
  const std::size_t budget = spec.count * kMaxDrawsPerInstance;
  for (std::size_t draw = 0; out.size() < spec.count; ++draw) {
    if (draw >= budget) {
      throw Error(ErrorKind::SpecError, "family has fewer than " + std::to_string(spec.count) + " distinct instances");
    }
    HermitianPoly a = draw_instance(spec, monomials, derive_seed(spec.seed, draw));
    if (seen.insert(format_poly(a)).second) out.push_back(std::move(a));
  }
  return out;
}

std::string poly_hash(const HermitianPoly& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_poly(f)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

unsigned worker_count() {
  if (const char* env = std::getenv("HERMRANK_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

Report run_verification(const FamilySpec& spec, TheoremVariant variant, unsigned workers, bool decompositions) {
  spec.validate();
  const bool bihomogeneous_family =
      spec.kind == FamilyKind::RandomBihomogeneous || (spec.kind == FamilyKind::MonomialExhaustive && spec.exact_degree);
  if (requires_bihomogeneous(variant) && !bihomogeneous_family) {
    throw Error(ErrorKind::SpecError, std::string(variant_name(variant)) + " applies to bihomogeneous families only");
  }
  Report report;
  report.spec = spec;
  report.variant = variant;
  report.decompositions = decompositions;
  try {
    report.profile = gap_profile(static_cast<std::int64_t>(spec.n), static_cast<std::int64_t>(spec.form.t()), variant);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TrivialSignature) throw Error(ErrorKind::SpecError, e.what());
  }

  const std::vector<HermitianPoly> family = generate_family(spec);
  std::vector<InstanceOutcome> outcomes(family.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < family.size(); i = next++) {
      outcomes[i] = process(i, family[i], spec, variant, report.profile, decompositions);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(family.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (auto& o : outcomes) {
    if (o.skipped) ++report.skipped;
    report.instances.push_back(std::move(o.record));
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
    if (o.candidate) report.candidates.push_back(std::move(*o.candidate));
  }
  report.histogram = histogram(report.instances, report.profile);
  return report;
}

std::string report_csv(const Report& report) {
  std::string out = "index,hash,rank,p,q,homogenized,verified,classification,gap_lo,gap_hi,error\n";
  for (const auto& r : report.instances) {
    out += std::to_string(r.index) + "," + r.hash + "," + std::to_string(r.rank) + "," + std::to_string(r.p) + "," +
           std::to_string(r.q) + "," + (r.homogenized ? "true" : "false") + "," + (r.verified ? (*r.verified ? "true" : "false") : "") +
           "," + csv_field(r.classification) + "," + (r.gap ? std::to_string(r.gap->lo) : "") + "," +
           (r.gap ? std::to_string(r.gap->hi) : "") + "," + csv_field(r.error) + "\n";
  }
  return out;
}

}  // namespace hermrank
