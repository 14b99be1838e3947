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

// Allowed and forbidden ranks of A(z, conj z) * <z, z> on C^n.
//
// Every profile here uses the affine convention: n is the number of
// variables of A and tau the number of null directions of the form. The
// projective statements about maps P^{n_p} -> P^N translate with
// n_p = n - 1 and N = R - 1; forbidden_intervals_ia() is the only place that
// speaks in those terms and it says so.
//
//   variant      k0: largest k with            interval k                      tail
//   conjecture   n > k(k+1)/2                  [kn - k(k-1)/2, kn]             (k0+1)n - k0(k0+1)/2 - 1
//   general      n >= k^2 + k(3+2tau) + 2+tau  [kn - k(k-1+tau), kn + k(2+tau)] (k0+1)n - (k0+1)(k0+tau)
//   homo         n >= k^2 + k(1+2tau) + 2+tau  [kn - k(k-1+tau), kn + k tau]    (k0+1)n - (k0+1)(k0+tau)
//   corollary    n >= (k+2)(k+1)               [kn - k(k-1), kn + 2k]           (k0+1)n - (k0+1)k0
//   remark       n >= (k+2)(k+1)               [kn - k(k-1), kn]                (k0+1)n - (k0+1)k0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hermrank/error.hpp"

namespace hermrank {

enum class TheoremVariant { ConjectureSOS, GeneralThm, HomoThm, CorollarySOS, CorollaryRemark };

/// "conjecture", "general", "homo", "corollary", "remark".
std::string_view variant_name(TheoremVariant v);
/// Accepts the short names above and the enumerator names. Throws InvalidInput.
TheoremVariant parse_variant(std::string_view name);
/// Only the conjecture is unproven.
constexpr bool is_proven(TheoremVariant v) { return v != TheoremVariant::ConjectureSOS; }
/// homo and remark apply to bihomogeneous A only.
constexpr bool requires_bihomogeneous(TheoremVariant v) {
  return v == TheoremVariant::HomoThm || v == TheoremVariant::CorollaryRemark;
}

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t x) const noexcept { return lo <= x && x <= hi; }
  bool empty() const noexcept { return hi < lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct GapProfile {
  std::int64_t n = 0;
  std::int64_t tau = 0;
  TheoremVariant variant = TheoremVariant::GeneralThm;
  std::int64_t k0 = 0;
  /// Interval k = 1..k0 clipped below the tail; empty ones are dropped.
  std::vector<Interval> allowed;
  /// Every R >= tail is allowed.
  std::int64_t tail = 0;
  /// Complement of the allowed intervals inside [1, tail - 1].
  std::vector<Interval> forbidden;

  friend bool operator==(const GapProfile&, const GapProfile&) = default;
};

/// Largest k in N satisfying the variant's threshold (0 if k = 1 already
/// fails). Throws TrivialSignature for tau >= n - 1 and InvalidInput for
/// n < 1, tau < 0 or tau != 0 with conjecture/corollary/remark.
std::int64_t k0(std::int64_t n, std::int64_t tau, TheoremVariant variant);

/// The unclipped interval for k as stated by the variant.
Interval rank_interval(std::int64_t n, std::int64_t tau, TheoremVariant variant, std::int64_t k);
std::int64_t tail_threshold(std::int64_t n, std::int64_t tau, TheoremVariant variant, std::int64_t k0);

GapProfile gap_profile(std::int64_t n, std::int64_t tau, TheoremVariant variant);

/// The non-empty I_a = [(a+1)(n+tau), (a+2)(n-1-a-tau) - 2], a = 0, 1, ...
/// These bound R - 1, the projective dimension of the span of the induced map
/// P^{n-1} -> P^{R-1}; here n is still the affine variable count.
std::vector<Interval> forbidden_intervals_ia(std::int64_t n_affine, std::int64_t tau);

enum class RankClass { Allowed, Forbidden, BelowRange };

struct Classification {
  RankClass kind = RankClass::Allowed;
  /// The gap that was hit, for Forbidden.
  std::optional<Interval> gap;
  /// 1-based k of the allowed interval containing R; empty when R is in the tail.
  std::optional<std::int64_t> interval_k;
  bool conjectural = false;

  bool allowed() const noexcept { return kind == RankClass::Allowed; }
  /// "allowed" / "forbidden" / "below-range", or for the conjecture
  /// "conjecture-consistent" / "counterexample-candidate".
  std::string label() const;
};

/// BelowRange when R is smaller than every allowed rank, Forbidden when it
/// falls in a gap between allowed ranks.
Classification classify_rank(std::int64_t r, const GapProfile& profile);

}  // namespace hermrank
