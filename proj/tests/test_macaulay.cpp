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

#include <functional>

#include "hermrank/macaulay.hpp"

using namespace hermrank;

namespace {

long binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  long r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

// Every valid representation of a, by exhaustive search.
std::vector<std::vector<long>> all_representations(long a, long n) {
  std::vector<std::vector<long>> found;
  std::vector<long> tops;
  std::function<void(long, long, long)> search = [&](long j, long upper, long rest) {
    for (long top = j; top < upper; ++top) {
      const long c = binom(top, j);
      if (c > rest) break;
      tops.push_back(top);
      if (c == rest) {
        found.push_back(tops);
      } else if (j > 1) {
        search(j - 1, top, rest - c);
      }
      tops.pop_back();
    }
  };
  search(n, a + n + 2, a);
  return found;
}

// Lowering operator straight from the definition, with C(a, 0) = 0.
long lower_by_definition(const std::vector<long>& tops, long n) {
  long sum = 0;
  for (std::size_t k = 0; k < tops.size(); ++k) {
    const long j = n - static_cast<long>(k);
    sum += j - 1 == 0 ? 0 : binom(tops[k] - 1, j - 1);
  }
  return sum;
}

std::vector<long> tops_of(const MacaulayRep& rep) {
  std::vector<long> out;
  for (const auto& t : rep.terms) out.push_back(t.top.get_si());
  return out;
}

}  // namespace

TEST_CASE("representation examples") {
  CHECK(macaulay_rep(5, 2).to_string() == "C(3,2)+C(2,1)");
  for (long n = 1; n <= 10; ++n) {
    CHECK(macaulay_rep(n + 1, n).to_string() == "C(" + std::to_string(n + 1) + "," + std::to_string(n) + ")");
    CHECK(macaulay_rep(1, n).to_string() == "C(" + std::to_string(n) + "," + std::to_string(n) + ")");
  }
  CHECK(macaulay_rep(10, 4).to_string() == "C(5,4)+C(4,3)+C(2,2)");
  CHECK_THROWS_AS(macaulay_rep(0, 3), Error);
  CHECK_THROWS_AS(macaulay_rep(3, 0), Error);
}

TEST_CASE("lowering operator examples") {
  CHECK(lower_op(5, 2) == 2);
  CHECK(lower_op(10, 4) == 8);
  CHECK(lower_op(2, 2) == 1);
  for (long n = 1; n <= 12; ++n) {
    for (long a = 1; a < n; ++a) CHECK(lower_op(a, n) == a);
    // C(n,n)+...+C(1,1) lowers to C(n-1,n-1)+...+C(0,0) = n - 1.
    CHECK(lower_op(n, n) == n - 1);
  }
  CHECK(macaulay_binomial(5, 0) == 0);
  CHECK(macaulay_binomial(2, 3) == 0);
  CHECK(macaulay_binomial(5, 2) == 10);
}

TEST_CASE("greedy representation is the unique one") {
  for (long n = 1; n <= 4; ++n) {
    for (long a = 1; a <= 200; ++a) {
      const auto reps = all_representations(a, n);
      CAPTURE(a);
      CAPTURE(n);
      REQUIRE(reps.size() == 1);
      const MacaulayRep greedy = macaulay_rep(a, n);
      CHECK(greedy.is_valid());
      CHECK(tops_of(greedy) == reps.front());
      CHECK(lower_op(a, n) == lower_by_definition(reps.front(), n));
    }
  }
}

TEST_CASE("roundtrip and monotonicity") {
  for (long n = 1; n <= 8; ++n) {
    BigInt previous = 0;
    for (long a = 1; a <= 3000; ++a) {
      const MacaulayRep rep = macaulay_rep(a, n);
      REQUIRE(rep.is_valid());
      REQUIRE(rep.value() == a);
      const BigInt lowered = lower_op(a, n);
      REQUIRE(lowered >= previous);
      previous = lowered;
    }
  }
}

TEST_CASE("N(n;a,b)") {
  for (long n = 1; n <= 12; ++n) CHECK(n_ab(n, 0, 0) == n + 1);
  CHECK(n_ab(4, 1, 1) == 10);
  for (long n = 1; n <= 25; ++n) {
    for (long a = 0; a <= n - 1; ++a) {
      for (long b = 0; b <= n - a - 1; ++b) {
        // (a+1)(n+1-a/2) + b, kept integral.
        REQUIRE(n_ab(n, a, b) == (a + 1) * (2 * n + 2 - a) / 2 + b);
        const MacaulayRep rep = n_ab_rep(n, a, b);
        REQUIRE(rep.is_valid());
        REQUIRE(rep.value() == n_ab(n, a, b));
        REQUIRE(rep == macaulay_rep(n_ab(n, a, b), n));
      }
    }
  }
  CHECK_THROWS_AS(n_ab(4, 1, 3), Error);
  CHECK_THROWS_AS(n_ab(4, -1, 0), Error);
  CHECK_THROWS_AS(n_ab(0, 0, 0), Error);
}

TEST_CASE("lowering identity for N(n;a,b)") {
  const NabLemmaCheck ex = lemma_nab(4, 1, 1);
  CHECK(ex.lowered == 8);
  CHECK(ex.predicted == n_ab(3, 1, 1));
  CHECK(ex.holds());
  for (long n = 3; n <= 12; ++n) {
    for (long a = 0; a + 2 <= n; ++a) CHECK(lower_op(n_ab(n, a, 0), n) == n_ab(n - 1, a, 0));
  }
  CHECK_THROWS_AS(lemma_nab(4, 3, 0), Error);
  CHECK_THROWS_AS(lemma_nab(4, 2, 2), Error);
}
