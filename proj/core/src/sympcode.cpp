// Copyright 2026 The qsymp Authors
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

#include "qsymp/sympcode.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qsymp/enumerate.hpp"
#include "qsymp/errors.hpp"

namespace qsymp {

SympVector SympVector::from_pairs(uint32_t p,
                                  const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  SympVector v(PrimeField(p), pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    v.flat[2 * i] = pairs[i].first % p;
    v.flat[2 * i + 1] = pairs[i].second % p;
  }
  return v;
}

SympVector SympVector::from_flat(uint32_t p, std::vector<uint32_t> flat) {
  if (flat.size() % 2 != 0) throw std::invalid_argument("pairs-vector needs even length");
  SympVector v(PrimeField(p), flat.size() / 2);
  for (size_t i = 0; i < flat.size(); ++i) v.flat[i] = flat[i] % p;
  return v;
}

int symp_weight(const SympVector& v) { return pair_weight(v.flat); }

uint32_t symp_inner(const SympVector& v, const SympVector& w) {
  if (v.f != w.f || v.length() != w.length()) {
    throw std::invalid_argument("symplectic product needs equal length and modulus");
  }
  const PrimeField& f = v.f;
  uint32_t acc = 0;
  for (size_t i = 0; i < v.length(); ++i) {
    acc = f.add(acc, f.sub(f.mul(v.a(i), w.b(i)), f.mul(v.b(i), w.a(i))));
  }
  return acc;
}

namespace {

// Flat inner product against the J-twisted row: <v, w> = (vJ) . w, where
// (vJ) sends each pair (a, b) to (-b, a).
std::vector<uint32_t> j_twist(const PrimeField& f, const uint32_t* row, size_t cols) {
  std::vector<uint32_t> out(cols);
  for (size_t i = 0; i + 1 < cols; i += 2) {
    out[i] = f.neg(row[i + 1]);
    out[i + 1] = row[i];
  }
  return out;
}

}  // namespace

SympCode::SympCode(PrimeField f, size_t n) : n_(n), gens_(f, 0, 2 * n) {
  if (n == 0) throw std::invalid_argument("code length must be positive");
}

SympCode SympCode::from_generators(PrimeField f, size_t n,
                                   const std::vector<std::vector<uint32_t>>& flat_rows) {
  return from_matrix(n, GfMatrix::from_rows(f, 2 * n, flat_rows));
}

SympCode SympCode::from_matrix(size_t n, const GfMatrix& rows) {
  if (rows.cols() != 2 * n) throw std::invalid_argument("generator width must be 2n");
  SympCode c(rows.field(), n);
  RrefResult rr = rref(rows);
  c.gens_ = rr.mat;
  c.pivots_ = rr.pivots;
  return c;
}

SympVector SympCode::generator_vector(size_t i) const {
  SympVector v(field(), n_);
  v.flat = gens_.row_vec(i);
  return v;
}

bool SympCode::contains(const std::vector<uint32_t>& flat) const {
  if (flat.size() != 2 * n_) throw std::invalid_argument("vector length mismatch");
  return in_row_space(gens_, pivots_, flat);
}

bool SympCode::contains_code(const SympCode& sub) const {
  if (sub.n_ != n_ || sub.p() != p()) return false;
  for (size_t i = 0; i < sub.dim(); ++i) {
    if (!contains(sub.gens_.row_vec(i))) return false;
  }
  return true;
}

SympCode dual(const SympCode& c) {
  // w is dual to v exactly when (vJ) . w = 0, so the dual is the kernel of
  // the J-twisted generator matrix.
  const PrimeField& f = c.field();
  GfMatrix twisted(f, c.dim(), 2 * c.n());
  for (size_t r = 0; r < c.dim(); ++r) {
    auto t = j_twist(f, c.generators().row(r), 2 * c.n());
    for (size_t j = 0; j < t.size(); ++j) twisted.set(r, j, t[j]);
  }
  return SympCode::from_matrix(c.n(), kernel(twisted));
}

bool is_self_orthogonal(const SympCode& c) {
  size_t i, j;
  return !find_non_orthogonal_pair(c, i, j);
}

bool find_non_orthogonal_pair(const SympCode& c, size_t& i_out, size_t& j_out) {
  for (size_t i = 0; i < c.dim(); ++i) {
    SympVector vi = c.generator_vector(i);
    for (size_t j = i; j < c.dim(); ++j) {
      if (symp_inner(vi, c.generator_vector(j)) != 0) {
        i_out = i;
        j_out = j;
        return true;
      }
    }
  }
  return false;
}

namespace {

// dim of the subspace of `code` supported inside the coordinate set S
// (pair coordinates; both columns of a dropped coordinate must vanish).
size_t dim_supported_in(const GfMatrix& gens, const std::vector<size_t>& support, size_t n) {
  std::vector<bool> keep(n, false);
  for (size_t s : support) keep[s] = true;
  size_t dropped = 0;
  for (size_t i = 0; i < n; ++i) dropped += !keep[i];
  if (dropped == 0) return gens.rows();
  GfMatrix outside(gens.field(), gens.rows(), 2 * dropped);
  size_t col = 0;
  for (size_t i = 0; i < n; ++i) {
    if (keep[i]) continue;
    for (size_t r = 0; r < gens.rows(); ++r) {
      outside.set(r, col, gens.at(r, 2 * i));
      outside.set(r, col + 1, gens.at(r, 2 * i + 1));
    }
    col += 2;
  }
  return gens.rows() - rank_of(outside);
}

int support_search_distance(const SympCode& d_code, const SympCode& c_code,
                            uint64_t max_subsets) {
  const size_t n = d_code.n();
  uint64_t processed = 0;
  std::vector<size_t> support;
  for (size_t w = 1; w <= n; ++w) {
    // Iterate all w-subsets of the n coordinates.
    support.resize(w);
    for (size_t i = 0; i < w; ++i) support[i] = i;
    while (true) {
      if (++processed > max_subsets) {
        throw ResourceError("support-set search exceeded its work budget");
      }
      if (dim_supported_in(d_code.generators(), support, n) >
          dim_supported_in(c_code.generators(), support, n)) {
        return static_cast<int>(w);
      }
      // next combination
      size_t i = w;
      while (i-- > 0) {
        if (support[i] + (w - i) < n) {
          ++support[i];
          for (size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
          break;
        }
        if (i == 0) goto next_weight;
      }
    }
  next_weight:;
  }
  throw std::logic_error("no word outside the subcode found");
}

}  // namespace

int min_weight_outside(const SympCode& d_code, const SympCode& c_code, uint64_t budget) {
  if (d_code.n() != c_code.n() || d_code.p() != c_code.p()) {
    throw std::invalid_argument("codes live in different spaces");
  }
  if (!d_code.contains_code(c_code)) {
    throw std::invalid_argument("inner code is not contained in outer code");
  }
  if (d_code.dim() == c_code.dim()) {
    throw std::invalid_argument("outer and inner codes coincide: empty difference");
  }
  uint64_t words = pow_sat(d_code.p(), d_code.dim());
  if (words > budget) {
    // One support set costs about a hundred codeword visits' worth of rank
    // work, so scale the subset allowance off the word budget.
    return support_search_distance(d_code, c_code,
                                   std::max<uint64_t>(1'000'000, budget / 100));
  }

  int best = static_cast<int>(d_code.n()) + 1;
  for_each_in_span(d_code.generators(), [&](const std::vector<uint32_t>& v) {
    int w = pair_weight(v);
    if (w != 0 && w < best && !c_code.contains(v)) {
      best = w;
      if (best == 1) return false;
    }
    return true;
  });
  if (best > static_cast<int>(d_code.n())) throw std::logic_error("difference set was empty");
  return best;
}

int min_nonzero_weight(const SympCode& c, uint64_t budget) {
  if (c.dim() == 0) return static_cast<int>(c.n()) + 1;
  return min_weight_outside(c, SympCode(c.field(), c.n()), budget);
}

CodeParams parameters(const SympCode& c, uint64_t budget) {
  if (!is_self_orthogonal(c)) {
    throw std::invalid_argument("parameters need a self-orthogonal code");
  }
  CodeParams out;
  out.n = c.n();
  out.k = c.n() - c.dim();
  out.alphabet = c.p();
  if (c.dim() == c.n()) {
    // Maximal isotropic: the dual equals the code. Distance and purity both
    // refer to the code's own minimum weight.
    out.d = min_nonzero_weight(c, budget);
    out.pure_to = out.d;
    out.is_pure = true;
    return out;
  }
  out.d = min_weight_outside(dual(c), c, budget);
  out.pure_to = min_nonzero_weight(c, budget);
  out.is_pure = out.pure_to >= out.d;
  return out;
}

BigInt WeightDist::total() const {
  BigInt s = 0;
  for (const BigInt& x : counts) s += x;
  return s;
}

WeightDist weight_distribution(const SympCode& c, uint64_t budget) {
  uint64_t words = pow_sat(c.p(), c.dim());
  if (words > budget) {
    throw ResourceError("weight distribution of " + std::to_string(c.dim()) +
                        "-dim code exceeds budget");
  }
  std::vector<uint64_t> counts(c.n() + 1, 0);
  for_each_in_span(c.generators(), [&](const std::vector<uint32_t>& v) {
    ++counts[pair_weight(v)];
    return true;
  });
  WeightDist out;
  out.counts.assign(counts.begin(), counts.end());
  return out;
}

BigInt binomial(size_t n, size_t k) {
  if (k > n) return 0;
  BigInt acc = 1;
  for (size_t i = 0; i < k; ++i) {
    acc *= static_cast<unsigned>(n - i);
    acc /= static_cast<unsigned>(i + 1);
  }
  return acc;
}

WeightDist macwilliams(const WeightDist& a, const BigInt& code_size, uint32_t p, size_t n) {
  if (a.counts.size() != n + 1) throw std::invalid_argument("distribution length mismatch");
  const BigInt qm1 = BigInt(p) * p - 1;
  WeightDist b;
  b.counts.assign(n + 1, 0);
  for (size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (size_t i = 0; i <= n; ++i) {
      if (a.counts[i] == 0) continue;
      // Krawtchouk kernel K_j(i) for alphabet size q = p^2.
      BigInt kr = 0;
      for (size_t s = 0; s <= j; ++s) {
        if (s > i || j - s > n - i) continue;
        BigInt term = binomial(i, s) * binomial(n - i, j - s);
        BigInt powq = 1;
        for (size_t t = 0; t < j - s; ++t) powq *= qm1;
        term *= powq;
        if (s % 2 == 0) {
          kr += term;
        } else {
          kr -= term;
        }
      }
      acc += a.counts[i] * kr;
    }
    if (acc % code_size != 0) throw std::logic_error("MacWilliams sum not divisible by |C|");
    b.counts[j] = acc / code_size;
  }
  return b;
}

WeightDist quantum_a_dist(const SympCode& c, uint64_t budget) {
  BigInt k_val = 1;
  for (size_t i = 0; i < c.n() - c.dim(); ++i) k_val *= c.p();
  WeightDist a = weight_distribution(c, budget);
  for (BigInt& x : a.counts) x *= k_val * k_val;
  return a;
}

WeightDist quantum_b_dist(const SympCode& c, uint64_t budget) {
  BigInt k_val = 1;
  for (size_t i = 0; i < c.n() - c.dim(); ++i) k_val *= c.p();
  WeightDist b = weight_distribution(dual(c), budget);
  for (BigInt& x : b.counts) x *= k_val;
  return b;
}

BigRational unitary_enumerator_coeff(const WeightDist& x, size_t j, uint64_t alpha, size_t n) {
  if (j > n) return 0;
  BigInt am1 = BigInt(alpha) - 1;
  BigRational sum = 0;
  BigInt ai_pow = 1;
  for (size_t i = 0; i + j <= n; ++i) {
    if (i < x.counts.size()) sum += BigRational(binomial(n - i, j) * ai_pow * x.counts[i]);
    ai_pow *= am1;
  }
  // alpha^(j-n) with j <= n.
  BigInt denom = 1;
  for (size_t t = 0; t < n - j; ++t) denom *= alpha;
  return sum / BigRational(denom);
}

Singleton singleton_check(const CodeParams& params) {
  const long n = static_cast<long>(params.n);
  const long d = params.d;
  if (params.k >= 1) {
    const long lhs = static_cast<long>(params.k);
    const long rhs = n - 2 * d + 2;
    if (lhs > rhs) return Singleton::violated;
    return lhs == rhs ? Singleton::mds : Singleton::strict;
  }
  if (2 * d > n + 2) return Singleton::violated;
  return 2 * d == n + 2 ? Singleton::mds : Singleton::strict;
}

SympCode apply_equivalence(const SympCode& c, const std::vector<size_t>& perm,
                           const std::vector<std::array<uint32_t, 4>>& locals) {
  const size_t n = c.n();
  const PrimeField& f = c.field();
  if (perm.size() != n || locals.size() != n) {
    throw std::invalid_argument("permutation and local list must have length n");
  }
  std::vector<bool> seen(n, false);
  for (size_t t : perm) {
    if (t >= n || seen[t]) throw std::invalid_argument("not a permutation");
    seen[t] = true;
  }
  for (const auto& m : locals) {
    uint32_t det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
    if (det != 1) throw std::invalid_argument("local matrices must have determinant 1");
  }
  GfMatrix out(f, c.dim(), 2 * n);
  for (size_t r = 0; r < c.dim(); ++r) {
    for (size_t i = 0; i < n; ++i) {
      uint32_t a = c.generators().at(r, 2 * i);
      uint32_t b = c.generators().at(r, 2 * i + 1);
      const auto& m = locals[i];
      uint32_t na = f.add(f.mul(a, m[0]), f.mul(b, m[2]));
      uint32_t nb = f.add(f.mul(a, m[1]), f.mul(b, m[3]));
      out.set(r, 2 * perm[i], na);
      out.set(r, 2 * perm[i] + 1, nb);
    }
  }
  return SympCode::from_matrix(n, out);
}

}  // namespace qsymp
