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

// Instance families and verification campaigns.
//
// A campaign draws a family of Hermitian polynomials A, computes the rank of
// A * <z,z>_form for each, re-verifies the decomposition behind it and
// classifies the rank against a gap profile. Everything is a pure function of
// the FamilySpec (seed included), so two runs produce identical reports.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hermrank/gaps.hpp"
#include "hermrank/poly.hpp"

namespace hermrank {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kReportSchema = "hermrank-report/1";

enum class FamilyKind { MonomialExhaustive, RandomBihomogeneous, RandomGeneral };

/// "monomial-exhaustive", "random-bihomogeneous", "random-general".
std::string_view family_name(FamilyKind kind);
/// Throws SpecError.
FamilyKind parse_family(std::string_view name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::RandomBihomogeneous;
  std::size_t n = 1;
  SignatureForm form{1, 0, 0};
  /// Bidegree (d, d) for random-bihomogeneous, max(|a|, |b|) <= d otherwise.
  int degree = 1;
  /// Random coefficients have real and imaginary parts in [-coef_range, coef_range].
  long coef_range = 3;
  /// Instances to draw for the random kinds; an upper limit (0 = none) for
  /// monomial-exhaustive.
  std::size_t count = 0;
  /// monomial-exhaustive: at most this many squared monomials per instance.
  std::size_t support_cap = 1;
  /// monomial-exhaustive: use monomials of degree exactly `degree`.
  bool exact_degree = false;
  std::uint64_t seed = 0;

  /// Throws SpecError naming the bad field.
  void validate() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Deterministic in spec (seed included); distinct instances only.
std::vector<HermitianPoly> generate_family(const FamilySpec& spec);

/// 64-bit FNV-1a of format_poly(f), as 16 hex digits.
std::string poly_hash(const HermitianPoly& f);

struct InstanceRecord {
  std::size_t index = 0;
  std::string hash;
  std::size_t rank = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  bool homogenized = false;
  /// Whether the decomposition expanded back; empty when the run skipped
  /// decompositions.
  std::optional<bool> verified;
  /// Classification label, "unclassified" without a profile, "skipped" on error.
  std::string classification;
  std::optional<Interval> gap;
  /// Error kind for skipped instances.
  std::string error;
  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

struct Finding {
  std::size_t index = 0;
  /// "forbidden-rank", "lower-bound", "decomposition", "rank-mismatch", "error"
  /// or "counterexample-candidate".
  std::string kind;
  std::string detail;
  /// The offending A in text form, for reproduction.
  std::string poly;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct HistogramBucket {
  std::int64_t lo = 0;
  /// Empty for the open-ended tail bucket.
  std::optional<std::int64_t> hi;
  /// "allowed", "forbidden", "tail" or "rank".
  std::string label;
  std::size_t count = 0;
  friend bool operator==(const HistogramBucket&, const HistogramBucket&) = default;
};

struct Report {
  std::string schema{kReportSchema};
  std::string tool_version{kToolVersion};
  FamilySpec spec;
  TheoremVariant variant = TheoremVariant::GeneralThm;
  /// Empty when the form leaves no profile (tau >= n - 1).
  std::optional<GapProfile> profile;
  std::vector<InstanceRecord> instances;
  std::vector<HistogramBucket> histogram;
  /// Proven-statement failures; any entry is a bug.
  std::vector<Finding> violations;
  /// Ranks outside the conjectured profile.
  std::vector<Finding> candidates;
  std::size_t skipped = 0;
  /// False for rank-only runs.
  bool decompositions = true;
  /// Only filled on request; it would break byte-for-byte determinism.
  std::optional<double> wall_clock_seconds;

  bool has_violations() const noexcept { return !violations.empty(); }
  friend bool operator==(const Report&, const Report&) = default;
};

/// Workers from HERMRANK_WORKERS, else the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs the campaign. Throws SpecError when the family and variant do not
/// fit together (homo and remark need bihomogeneous instances).
///
/// With `decompositions` every instance is also decomposed, the expansion is
/// checked and its (p, q) compared with the inertia computed separately.
/// Without it ranks come from the inertia alone, which stays fast for the
/// 200+ dimensional coefficient matrices of larger campaigns.
Report run_verification(const FamilySpec& spec, TheoremVariant variant, unsigned workers = worker_count(),
                        bool decompositions = true);

/// One header line plus one line per instance record.
std::string report_csv(const Report& report);

}  // namespace hermrank
