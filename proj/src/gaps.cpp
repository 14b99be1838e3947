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

#include "hermrank/gaps.hpp"

#include <algorithm>
#include <string>

namespace hermrank {

std::string_view variant_name(TheoremVariant v) {
  switch (v) {
    case TheoremVariant::ConjectureSOS: return "conjecture";
    case TheoremVariant::GeneralThm: return "general";
    case TheoremVariant::HomoThm: return "homo";
    case TheoremVariant::CorollarySOS: return "corollary";
    case TheoremVariant::CorollaryRemark: return "remark";
  }
  return "unknown";
}

TheoremVariant parse_variant(std::string_view name) {
  if (name == "conjecture" || name == "ConjectureSOS") return TheoremVariant::ConjectureSOS;
  if (name == "general" || name == "GeneralThm") return TheoremVariant::GeneralThm;
  if (name == "homo" || name == "HomoThm") return TheoremVariant::HomoThm;
  if (name == "corollary" || name == "CorollarySOS") return TheoremVariant::CorollarySOS;
  if (name == "remark" || name == "CorollaryRemark") return TheoremVariant::CorollaryRemark;
  throw Error(ErrorKind::InvalidInput, "unknown variant '" + std::string(name) +
                                           "' (expected conjecture, general, homo, corollary or remark)");
}

namespace {

bool threshold_holds(std::int64_t n, std::int64_t tau, TheoremVariant v, std::int64_t k) {
  switch (v) {
    case TheoremVariant::ConjectureSOS: return 2 * n > k * (k + 1);
    case TheoremVariant::GeneralThm: return n >= k * k + k * (3 + 2 * tau) + 2 + tau;
    case TheoremVariant::HomoThm: return n >= k * k + k * (1 + 2 * tau) + 2 + tau;
    case TheoremVariant::CorollarySOS:
    case TheoremVariant::CorollaryRemark: return n >= (k + 2) * (k + 1);
  }
  return false;
}

}  // namespace

std::int64_t k0(std::int64_t n, std::int64_t tau, TheoremVariant variant) {
  if (n < 1 || tau < 0) {
    throw Error(ErrorKind::InvalidInput, "gap profile needs n >= 1 and tau >= 0");
  }
  if (tau >= n - 1) {
    throw Error(ErrorKind::TrivialSignature, "tau = " + std::to_string(tau) + " >= n - 1 = " + std::to_string(n - 1));
  }
  if (tau != 0 && (variant == TheoremVariant::ConjectureSOS || variant == TheoremVariant::CorollarySOS ||
                   variant == TheoremVariant::CorollaryRemark)) {
    throw Error(ErrorKind::InvalidInput, std::string(variant_name(variant)) + " is stated for tau = 0 only");
  }
  std::int64_t k = 0;
  while (threshold_holds(n, tau, variant, k + 1)) ++k;
  return k;
}

Interval rank_interval(std::int64_t n, std::int64_t tau, TheoremVariant variant, std::int64_t k) {
  switch (variant) {
    case TheoremVariant::ConjectureSOS: return {k * n - k * (k - 1) / 2, k * n};
    case TheoremVariant::GeneralThm: return {k * n - k * (k - 1 + tau), k * n + k * (2 + tau)};
    case TheoremVariant::HomoThm: return {k * n - k * (k - 1 + tau), k * n + k * tau};
    case TheoremVariant::CorollarySOS: return {k * n - k * (k - 1), k * n + 2 * k};
    case TheoremVariant::CorollaryRemark: return {k * n - k * (k - 1), k * n};
  }
  return {1, 0};
}

std::int64_t tail_threshold(std::int64_t n, std::int64_t tau, TheoremVariant variant, std::int64_t k0) {
  switch (variant) {
    case TheoremVariant::ConjectureSOS: return (k0 + 1) * n - k0 * (k0 + 1) / 2 - 1;
    case TheoremVariant::GeneralThm:
    case TheoremVariant::HomoThm: return (k0 + 1) * n - (k0 + 1) * (k0 + tau);
    case TheoremVariant::CorollarySOS:
    case TheoremVariant::CorollaryRemark: return (k0 + 1) * n - (k0 + 1) * k0;
  }
  return 0;
}

GapProfile gap_profile(std::int64_t n, std::int64_t tau, TheoremVariant variant) {
  GapProfile p;
  p.n = n;
  p.tau = tau;
  p.variant = variant;
  p.k0 = k0(n, tau, variant);
  p.tail = tail_threshold(n, tau, variant, p.k0);
  for (std::int64_t k = 1; k <= p.k0; ++k) {
    Interval iv = rank_interval(n, tau, variant, k);
    iv.hi = std::min(iv.hi, p.tail - 1);
    if (!iv.empty()) p.allowed.push_back(iv);
  }
  std::int64_t next = 1;
  for (const auto& iv : p.allowed) {
    if (iv.lo > next) p.forbidden.push_back({next, iv.lo - 1});
    next = std::max(next, iv.hi + 1);
  }
  if (p.tail > next) p.forbidden.push_back({next, p.tail - 1});
  return p;
}

std::vector<Interval> forbidden_intervals_ia(std::int64_t n_affine, std::int64_t tau) {
  if (n_affine < 2 || tau < 0) throw Error(ErrorKind::InvalidInput, "I_a needs n >= 2 and tau >= 0");
  std::vector<Interval> out;
  for (std::int64_t a = 0;; ++a) {
    if (n_affine < (a + 2) * (a + 1 + tau) + (a + 1) * tau + 2) break;
    out.push_back({(a + 1) * (n_affine + tau), (a + 2) * (n_affine - 1 - a - tau) - 2});
  }
  return out;
}

std::string Classification::label() const {
  if (conjectural) return allowed() ? "conjecture-consistent" : "counterexample-candidate";
  switch (kind) {
    case RankClass::Allowed: return "allowed";
    case RankClass::Forbidden: return "forbidden";
    case RankClass::BelowRange: return "below-range";
  }
  return "unknown";
}

Classification classify_rank(std::int64_t r, const GapProfile& profile) {
  Classification c;
  c.conjectural = profile.variant == TheoremVariant::ConjectureSOS;
  if (r >= profile.tail) return c;
  for (std::int64_t k = 1; k <= profile.k0; ++k) {
    if (rank_interval(profile.n, profile.tau, profile.variant, k).contains(r)) {
      c.interval_k = k;
      return c;
    }
  }
  const std::int64_t lowest = profile.allowed.empty() ? profile.tail : profile.allowed.front().lo;
  if (r < lowest) {
    c.kind = RankClass::BelowRange;
    if (r >= 1) c.gap = profile.forbidden.front();
    return c;
  }
  c.kind = RankClass::Forbidden;
  for (const auto& gap : profile.forbidden) {
    if (gap.contains(r)) c.gap = gap;
  }
  return c;
}

}  // namespace hermrank
