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

// Multimodular inertia of a Hermitian matrix over the Gaussian rationals.
//
// The matrix is scaled to Gaussian integers and reduced modulo primes
// p = 1 (mod 4), with i mapped to a square root of -1. One prime fixes a
// pivot order (with the same lambda in {1, i} repairs as the rational
// eliminator). The leading principal minors m_k along that order are real
// integers, nonzero because they are nonzero modulo that prime; their exact
// values come from Chinese remaindering against the Hadamard bound, and the
// k-th pivot has the sign of m_k * m_(k-1).
//
// The rank r is certified the same way: every prime used has rank r, and
// their product exceeds the Hadamard bound of any (r+1)-minor, so no such
// minor can be nonzero.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>

#include "hermrank/error.hpp"
#include "hermrank/linalg.hpp"

namespace hermrank {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd p < 2^62. Values are kept in
// Montgomery form; zero maps to zero.
class Montgomery {
 public:
  explicit Montgomery(u64 p) : p_(p) {
    u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int k = 0; k < 6; ++k) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    const u128 r = (static_cast<u128>(1) << 64) % p;
    r2_ = static_cast<u64>((r * r) % p);
  }

  u64 p() const { return p_; }
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 out = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return out >= p_ ? out - p_ : out;
  }
  u64 to(u64 a) const { return reduce(static_cast<u128>(a % p_) * r2_); }
  u64 from(u64 a) const { return reduce(a); }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 pow(u64 a, u64 e) const {
    u64 out = to(1);
    while (e) {
      if (e & 1) out = mul(out, a);
      a = mul(a, a);
      e >>= 1;
    }
    return out;
  }
  u64 inverse(u64 a) const { return pow(a, p_ - 2); }

 private:
  u64 p_;
  u64 neg_inv_;
  u64 r2_;
};

struct PrimeField {
  Montgomery mont;
  u64 sqrt_minus_one;  // Montgomery form
};

PrimeField make_field(u64 p) {
  const Montgomery m(p);
  const u64 minus_one = m.neg(m.to(1));
  for (u64 c = 2;; ++c) {
    const u64 s = m.pow(m.to(c), (p - 1) / 4);
    if (m.mul(s, s) == minus_one) return {m, s};
  }
}

// Primes p = 1 (mod 4) below 2^62, descending. Generated once.
const PrimeField& field(std::size_t index) {
  static std::mutex mutex;
  static std::vector<PrimeField> fields;
  static mpz_class cursor = (mpz_class(1) << 62) - 3;  // = 1 (mod 4)
  std::lock_guard lock(mutex);
  while (fields.size() <= index) {
    while (mpz_probab_prime_p(cursor.get_mpz_t(), 30) == 0) cursor -= 4;
    fields.push_back(make_field(cursor.get_ui()));
    cursor -= 4;
  }
  return fields[index];
}

// Full Gaussian-integer copy of the scaled matrix.
struct IntegerHermitian {
  std::size_t n = 0;
  std::vector<mpz_class> re, im;

  mpz_class& r(std::size_t i, std::size_t j) { return re[i * n + j]; }
  mpz_class& c(std::size_t i, std::size_t j) { return im[i * n + j]; }
  const mpz_class& r(std::size_t i, std::size_t j) const { return re[i * n + j]; }
  const mpz_class& c(std::size_t i, std::size_t j) const { return im[i * n + j]; }
};

IntegerHermitian scale_to_integers(const HermitianMatrix& h) {
  IntegerHermitian out;
  out.n = h.dim();
  mpz_class scale = 1;
  for (std::size_t i = 0; i < out.n; ++i)
    for (std::size_t j = 0; j < out.n; ++j) {
      scale = lcm(scale, h(i, j).re().value().get_den());
      scale = lcm(scale, h(i, j).im().value().get_den());
    }
  out.re.resize(out.n * out.n);
  out.im.resize(out.n * out.n);
  for (std::size_t i = 0; i < out.n; ++i)
    for (std::size_t j = 0; j < out.n; ++j) {
      const mpq_class& a = h(i, j).re().value();
      const mpq_class& b = h(i, j).im().value();
      out.r(i, j) = a.get_num() * (scale / a.get_den());
      out.c(i, j) = b.get_num() * (scale / b.get_den());
    }
  return out;
}

// e_i <- e_i + lambda e_j with lambda = 1 or i.
struct Repair {
  std::size_t i, j;
  bool imaginary;
};

void apply(IntegerHermitian& a, const Repair& op) {
  for (std::size_t r = 0; r < a.n; ++r) {  // column i += lambda * column j
    if (op.imaginary) {
      const mpz_class re = a.r(r, op.j), im = a.c(r, op.j);
      a.r(r, op.i) -= im;
      a.c(r, op.i) += re;
    } else {
      a.r(r, op.i) += a.r(r, op.j);
      a.c(r, op.i) += a.c(r, op.j);
    }
  }
  for (std::size_t c = 0; c < a.n; ++c) {  // row i += conj(lambda) * row j
    if (op.imaginary) {
      const mpz_class re = a.r(op.j, c), im = a.c(op.j, c);
      a.r(op.i, c) += im;
      a.c(op.i, c) -= re;
    } else {
      a.r(op.i, c) += a.r(op.j, c);
      a.c(op.i, c) += a.c(op.j, c);
    }
  }
}

// Image of a(order[x], order[y]) in F_p, Montgomery form, row-major.
std::vector<u64> reduce(const IntegerHermitian& a, const PrimeField& f, const std::vector<std::size_t>& order) {
  const Montgomery& m = f.mont;
  const std::size_t n = a.n;
  std::vector<u64> x(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const u64 re = m.to(mpz_fdiv_ui(a.r(order[u], order[v]).get_mpz_t(), m.p()));
      const u64 im = m.to(mpz_fdiv_ui(a.c(order[u], order[v]).get_mpz_t(), m.p()));
      x[u * n + v] = m.add(re, m.mul(im, f.sqrt_minus_one));
    }
  return x;
}

// Row reduction of the active block by pivot k (non-symmetric: the image of
// a Hermitian matrix in F_p is not symmetric).
void eliminate(std::vector<u64>& x, std::size_t n, std::size_t k, const std::vector<char>& active, const Montgomery& m) {
  const u64 inv = m.inverse(x[k * n + k]);
  const u64* pivot_row = &x[k * n];
  for (std::size_t r = 0; r < n; ++r) {
    if (!active[r] || r == k || x[r * n + k] == 0) continue;
    const u64 f = m.mul(x[r * n + k], inv);
    u64* row = &x[r * n];
    for (std::size_t c = 0; c < n; ++c) {
      if (active[c] && c != k && pivot_row[c] != 0) row[c] = m.sub(row[c], m.mul(f, pivot_row[c]));
    }
  }
}

struct PivotPlan {
  std::vector<Repair> repairs;
  std::vector<std::size_t> pivots;
};

// Pivot order and repairs chosen in F_p: the first active nonzero diagonal
// entry, else a repair on the first active nonzero off-diagonal entry.
PivotPlan plan_pivots(const IntegerHermitian& a, const PrimeField& f) {
  const Montgomery& m = f.mont;
  const std::size_t n = a.n;
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<u64> x = reduce(a, f, identity);
  std::vector<char> active(n, 1);
  PivotPlan plan;
  const u64 s = f.sqrt_minus_one;
  const u64 s_bar = m.neg(s);
  while (true) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (active[i] && x[i * n + i] != 0) pivot = i;
    if (pivot == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (active[j] && x[i * n + j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;
      // New diagonal: x_ii + lambda x_ij + conj(lambda) x_ji + x_jj, with x_ii = x_jj = 0.
      const bool imaginary = m.add(x[pi * n + pj], x[pj * n + pi]) == 0;
      const u64 lambda = imaginary ? s : m.to(1);
      const u64 lambda_bar = imaginary ? s_bar : m.to(1);
      for (std::size_t r = 0; r < n; ++r)
        if (active[r]) x[r * n + pi] = m.add(x[r * n + pi], m.mul(lambda, x[r * n + pj]));
      for (std::size_t c = 0; c < n; ++c)
        if (active[c]) x[pi * n + c] = m.add(x[pi * n + c], m.mul(lambda_bar, x[pj * n + c]));
      plan.repairs.push_back({pi, pj, imaginary});
      pivot = pi;
    }
    eliminate(x, n, pivot, active, m);
    active[pivot] = 0;
    plan.pivots.push_back(pivot);
  }
  return plan;
}

enum class PrimeOutcome { Good, BadPivot, HigherRank };

// Elimination of the permuted image along the diagonal. On success `minors`
// holds the leading principal minors 1..r in plain (non-Montgomery) form.
PrimeOutcome leading_minors(const IntegerHermitian& a, const PrimeField& f, const std::vector<std::size_t>& order,
                            std::size_t rank, std::vector<u64>& minors) {
  const Montgomery& m = f.mont;
  const std::size_t n = a.n;
  std::vector<u64> x = reduce(a, f, order);
  std::vector<char> active(n, 1);
  minors.assign(rank, 0);
  u64 running = m.to(1);
  for (std::size_t k = 0; k < rank; ++k) {
    if (x[k * n + k] == 0) return PrimeOutcome::BadPivot;
    running = m.mul(running, x[k * n + k]);
    minors[k] = m.from(running);
    eliminate(x, n, k, active, m);
    active[k] = 0;
  }
  for (std::size_t r = rank; r < n; ++r)
    for (std::size_t c = rank; c < n; ++c)
      if (x[r * n + c] != 0) return PrimeOutcome::HigherRank;
  return PrimeOutcome::Good;
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 out = 1;
  while (e) {
    if (e & 1) out = mulmod(out, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return out;
}

constexpr std::size_t kMaxPrimes = 4096;

}  // namespace

Signature signature_multimodular(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  const IntegerHermitian original = scale_to_integers(h);
  std::size_t planner = 0;
  while (true) {
    const PivotPlan plan = plan_pivots(original, field(planner));
    const std::size_t rank = plan.pivots.size();
    if (rank == 0) {
      // Nonzero matrices that vanish modulo this prime are planned with the next.
      const bool zero = std::all_of(original.re.begin(), original.re.end(), [](const mpz_class& v) { return v == 0; }) &&
                  std::all_of(original.im.begin(), original.im.end(), [](const mpz_class& v) { return v == 0; });
      if (zero) return {0, 0, n};
      ++planner;
      continue;
    }
    IntegerHermitian a = original;
    for (const Repair& op : plan.repairs) apply(a, op);

    std::vector<std::size_t> order = plan.pivots;
    std::vector<char> used(n, 0);
    for (const std::size_t p : plan.pivots) used[p] = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) order.push_back(i);

    // Squared Hadamard bounds: rows through the pivots for the minors, the
    // rank + 1 heaviest rows for any larger minor.
    std::vector<mpz_class> norms(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norms[i] += a.r(i, j) * a.r(i, j) + a.c(i, j) * a.c(i, j);
    mpz_class minor_bound = 4;  // |m_k| < P / 2
    for (const std::size_t p : plan.pivots) minor_bound *= norms[p];
    mpz_class rank_bound = 0;
    if (rank < n) {
      std::vector<mpz_class> sorted = norms;
      std::sort(sorted.begin(), sorted.end(), [](const mpz_class& x, const mpz_class& y) { return x > y; });
      rank_bound = 1;
      for (std::size_t k = 0; k <= rank; ++k) rank_bound *= sorted[k];
    }

    std::vector<mpz_class> values(rank, 0);
    mpz_class modulus = 1;
    std::vector<u64> residues;
    bool restart = false;
    for (std::size_t idx = 0;; ++idx) {
      if (idx >= kMaxPrimes) throw Error(ErrorKind::InvalidInput, "multimodular inertia ran out of primes");
      const PrimeField& f = field(idx);
      const PrimeOutcome outcome = leading_minors(a, f, order, rank, residues);
      if (outcome == PrimeOutcome::BadPivot) continue;
      if (outcome == PrimeOutcome::HigherRank) {
        planner = idx;
        restart = true;
        break;
      }
      const u64 p = f.mont.p();
      const u64 inv = powmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p - 2, p);
      for (std::size_t k = 0; k < rank; ++k) {
        const u64 current = mpz_fdiv_ui(values[k].get_mpz_t(), p);
        const u64 delta = mulmod((residues[k] + p - current) % p, inv, p);
        values[k] += modulus * mpz_class(static_cast<unsigned long>(delta));
      }
      modulus *= static_cast<unsigned long>(p);
      const mpz_class squared = modulus * modulus;
      if (squared > minor_bound && squared > rank_bound) break;
    }
    if (restart) continue;

    const mpz_class half = modulus / 2;
    Signature sig;
    int previous = 1;
    for (auto& v : values) {
      if (v > half) v -= modulus;
      const int current = sgn(v);
      if (current == 0) throw Error(ErrorKind::InvalidInput, "multimodular inertia: vanishing leading minor");
      (current == previous ? sig.positive : sig.negative) += 1;
      previous = current;
    }
    sig.zero = n - rank;
    return sig;
  }
}

}  // namespace hermrank
