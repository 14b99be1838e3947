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

#include "hermrank/macaulay.hpp"

namespace hermrank {

namespace {

BigInt binomial(const BigInt& a, long b) {
  if (b < 0 || a < b) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

void require_positive(const BigInt& a, long n) {
  if (a < 1 || n < 1) {
    throw Error(ErrorKind::InvalidInput, "Macaulay representation needs A >= 1 and n >= 1 (got A=" + a.get_str() +
                                             ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

BigInt macaulay_binomial(const BigInt& a, long b) {
  if (b == 0) return 0;
  return binomial(a, b);
}

BigInt MacaulayRep::value() const {
  BigInt sum = 0;
  for (const auto& t : terms) sum += binomial(t.top, t.index);
  return sum;
}

bool MacaulayRep::is_valid() const {
  if (terms.empty() || terms.front().index != n) return false;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k].index < 1 || terms[k].top < terms[k].index) return false;
    if (k > 0 && (terms[k].index != terms[k - 1].index - 1 || !(terms[k].top < terms[k - 1].top))) return false;
  }
  return true;
}

std::string MacaulayRep::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += '+';
    out += "C(" + t.top.get_str() + "," + std::to_string(t.index) + ")";
  }
  return out;
}

MacaulayRep macaulay_rep(const BigInt& a, long n) {
  require_positive(a, n);
  MacaulayRep rep;
  rep.n = n;
  BigInt rest = a;
  for (long j = n; j >= 1 && rest > 0; --j) {
    BigInt top;
    if (j == 1) {
      top = rest;
    } else {
      // Largest top with C(top, j) <= rest; C(j, j) = 1 <= rest always holds.
      top = j;
      BigInt value = 1;
      for (;;) {
        BigInt next = value * (top + 1) / (top + 1 - j);
        if (next > rest) break;
        value = std::move(next);
        top += 1;
      }
    }
    rest -= binomial(top, j);
    rep.terms.push_back({std::move(top), j});
  }
  return rep;
}

BigInt lower_op(const BigInt& a, long n) {
  const MacaulayRep rep = macaulay_rep(a, n);
  BigInt sum = 0;
  for (const auto& t : rep.terms) sum += macaulay_binomial(t.top - 1, t.index - 1);
  return sum;
}

MacaulayRep n_ab_rep(long n, long a, long b) {
  if (n < 1 || a < 0 || b < 0 || b > n - a - 1) {
    throw Error(ErrorKind::InvalidInput, "N(n;a,b) needs n >= 1, a >= 0 and 0 <= b <= n-a-1 (got n=" +
                                             std::to_string(n) + ", a=" + std::to_string(a) +
                                             ", b=" + std::to_string(b) + ")");
  }
  MacaulayRep rep;
  rep.n = n;
  for (long i = 0; i <= a; ++i) rep.terms.push_back({BigInt(n + 1 - i), n - i});
  for (long i = 1; i <= b; ++i) rep.terms.push_back({BigInt(n - a - i), n - a - i});
  return rep;
}

BigInt n_ab(long n, long a, long b) { return n_ab_rep(n, a, b).value(); }

NabLemmaCheck lemma_nab(long n, long a, long b) {
  const BigInt value = n_ab(n, a, b);
  const long slack = n - a - b;
  NabLemmaCheck check;
  if (slack >= 2) {
    check.predicted = n_ab(n - 1, a, b);
  } else if (slack == 1 && b >= 1) {
    check.predicted = n_ab(n - 1, a, b - 1);
  } else {
    throw Error(ErrorKind::InvalidInput, "lowering identity needs n-a-b >= 2, or n-a-b == 1 with b >= 1");
  }
  check.lowered = lower_op(value, n);
  return check;
}

}  // namespace hermrank
