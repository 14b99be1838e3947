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

// Macaulay representations A = C(a_n, n) + C(a_{n-1}, n-1) + ... + C(a_delta, delta)
// with a_n > a_{n-1} > ... > a_delta, a_j >= j, delta >= 1, and the lowering
// operator built on them.

#pragma once

#include <string>
#include <vector>

#include "hermrank/exact.hpp"

namespace hermrank {

/// C(a, b) with the lowering-operator convention: 0 when a < b or b == 0.
BigInt macaulay_binomial(const BigInt& a, long b);

struct MacaulayTerm {
  BigInt top;  // a_j
  long index;  // j
  friend bool operator==(const MacaulayTerm&, const MacaulayTerm&) = default;
};

struct MacaulayRep {
  long n = 0;
  /// Ordered by decreasing index j = n, n-1, ..., delta.
  std::vector<MacaulayTerm> terms;

  long delta() const { return terms.back().index; }
  /// Sum of C(a_j, j).
  BigInt value() const;
  /// Strict decrease of a_j, a_j >= j, contiguous indices down from n, delta >= 1.
  bool is_valid() const;
  /// "C(3,2)+C(2,1)".
  std::string to_string() const;
  friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;
};

/// Greedy n-th Macaulay representation. Throws InvalidInput when a < 1 or n < 1.
MacaulayRep macaulay_rep(const BigInt& a, long n);

/// A^{-<n>} = C(a_n - 1, n - 1) + ... + C(a_delta - 1, delta - 1).
BigInt lower_op(const BigInt& a, long n);

/// N(n; a, b) = C(n+1, n) + C(n, n-1) + ... + C(n-a+1, n-a) + b for n >= 1,
/// a >= 0 and 0 <= b <= n - a - 1. Throws InvalidInput otherwise.
BigInt n_ab(long n, long a, long b);

/// The explicit representation of N(n; a, b): the a+1 leading binomials
/// followed by b unit terms C(n-a-1, n-a-1), ..., C(n-a-b, n-a-b).
MacaulayRep n_ab_rep(long n, long a, long b);

struct NabLemmaCheck {
  BigInt lowered;    // N(n;a,b)^{-<n>}
  BigInt predicted;  // N(n-1;a,b) or N(n-1;a,b-1)
  bool holds() const { return lowered == predicted; }
};

/// Both sides of the lowering identity for N(n; a, b):
/// N(n-1; a, b) when n - a - b >= 2, N(n-1; a, b-1) when n - a - b == 1 and b >= 1.
/// Throws InvalidInput outside those ranges.
NabLemmaCheck lemma_nab(long n, long a, long b);

}  // namespace hermrank
