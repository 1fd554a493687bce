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

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsymp/matrix.hpp"

namespace qsymp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

constexpr uint64_t kDefaultBudget = 100'000'000;

/// Length-n vector of GF(p) pairs (a_i, b_i), stored flat in the column
/// order a_1 b_1 a_2 b_2 ...
struct SympVector {
  PrimeField f;
  std::vector<uint32_t> flat;

  SympVector(PrimeField field, size_t n) : f(field), flat(2 * n, 0) {}
  static SympVector from_pairs(uint32_t p,
                               const std::vector<std::pair<uint32_t, uint32_t>>& pairs);
  static SympVector from_flat(uint32_t p, std::vector<uint32_t> flat);

  size_t length() const { return flat.size() / 2; }
  uint32_t a(size_t i) const { return flat[2 * i]; }
  uint32_t b(size_t i) const { return flat[2 * i + 1]; }

  bool operator==(const SympVector& o) const { return f == o.f && flat == o.flat; }
};

/// Number of coordinates whose pair is not (0, 0).
int symp_weight(const SympVector& v);

/// The alternating form sum_i (a_i b'_i - b_i a'_i) mod p.
uint32_t symp_inner(const SympVector& v, const SympVector& w);

/// A GF(p)-subspace of pairs-vectors, held in a canonical form: the RREF
/// of the flattened dim x 2n generator matrix. Two codes are equal exactly
/// when their canonical matrices are equal.
class SympCode {
 public:
  /// The zero code of length n.
  SympCode(PrimeField f, size_t n);
  static SympCode from_generators(PrimeField f, size_t n,
                                  const std::vector<std::vector<uint32_t>>& flat_rows);
  static SympCode from_matrix(size_t n, const GfMatrix& rows);

  const PrimeField& field() const { return gens_.field(); }
  uint32_t p() const { return gens_.field().p(); }
  size_t n() const { return n_; }
  size_t dim() const { return gens_.rows(); }
  const GfMatrix& generators() const { return gens_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  SympVector generator_vector(size_t i) const;

  bool contains(const std::vector<uint32_t>& flat) const;
  bool contains_code(const SympCode& sub) const;

  bool operator==(const SympCode& o) const { return n_ == o.n_ && gens_ == o.gens_; }
  bool operator!=(const SympCode& o) const { return !(*this == o); }

 private:
  size_t n_;
  GfMatrix gens_;
  std::vector<size_t> pivots_;
};

/// Dual under the alternating form; dim(dual) = 2n - dim.
SympCode dual(const SympCode& c);

/// True when every pair of generators has vanishing symplectic product.
bool is_self_orthogonal(const SympCode& c);

/// If a generator pair violates self-orthogonality, return its indices.
bool find_non_orthogonal_pair(const SympCode& c, size_t& i_out, size_t& j_out);

/// Minimum symplectic weight over D - C (C must be contained in D, and
/// strictly smaller). Enumerates the p^dim(D) words of D when that fits in
/// budget; otherwise falls back to a support-set search that looks, for
/// w = 1, 2, ..., for a subspace of D supported inside some w-set of
/// coordinates that is larger than C's subspace there. Both paths return
/// the same value.
int min_weight_outside(const SympCode& d_code, const SympCode& c_code,
                       uint64_t budget = kDefaultBudget);

/// Minimum symplectic weight of the nonzero words of C; n+1 if C = {0}.
int min_nonzero_weight(const SympCode& c, uint64_t budget = kDefaultBudget);

enum class Singleton { violated, strict, mds };

struct CodeParams {
  size_t n = 0;
  size_t k = 0;
  int d = 0;
  int pure_to = 0;
  bool is_pure = false;
  uint64_t alphabet = 0;
};

/// Parameters of the quantum code attached to a self-orthogonal C:
/// k = n - dim(C), d = min weight of dual(C) - C, purity from C's own
/// minimum weight. A maximal isotropic C (dim = n) has empty dual(C) - C;
/// its d is the minimum nonzero weight of C itself and it counts as pure.
CodeParams parameters(const SympCode& c, uint64_t budget = kDefaultBudget);

struct WeightDist {
  std::vector<BigInt> counts;  // counts[w] = number of words of weight w

  size_t n() const { return counts.size() - 1; }
  BigInt total() const;
  bool operator==(const WeightDist& o) const { return counts == o.counts; }
};

/// Counts of codewords by symplectic weight (full enumeration).
WeightDist weight_distribution(const SympCode& c, uint64_t budget = kDefaultBudget);

/// MacWilliams transform for alphabet size p^2 and length n:
/// B_j = |C|^{-1} sum_i A_i K_j(i). Equals the weight distribution of the
/// dual code for every subspace.
WeightDist macwilliams(const WeightDist& a, const BigInt& code_size, uint32_t p, size_t n);

/// Quantum-normalized enumerators for a self-orthogonal code with
/// K = p^(n-dim): A_i = K^2 * (weight-i words of C),
/// B_i = K * (weight-i words of dual(C)).
WeightDist quantum_a_dist(const SympCode& c, uint64_t budget = kDefaultBudget);
WeightDist quantum_b_dist(const SympCode& c, uint64_t budget = kDefaultBudget);

/// alpha^(j-n) * sum_{i=0}^{n-j} C(n-i, j) (alpha-1)^i X_i, evaluated as an
/// exact rational. Applied to the quantum-normalized A at j = d-1 and to B
/// at j = n-d+1 it yields the two expressions for the same unitary
/// enumerator coefficient, which must agree for a distance-d code.
BigRational unitary_enumerator_coeff(const WeightDist& x, size_t j, uint64_t alpha, size_t n);

/// Compares K = alpha^k against alpha^(n-2d+2); for k = 0 the pure
/// self-dual bound 2d <= n+2 is used instead.
Singleton singleton_check(const CodeParams& params);

/// Apply a coordinate permutation and per-coordinate SL2(p) matrices
/// (row-vector convention: pair -> pair * M). Entry order of each local
/// matrix is {m00, m01, m10, m11}; determinant must be 1. The transformed
/// pair of coordinate i lands at coordinate perm[i].
SympCode apply_equivalence(const SympCode& c, const std::vector<size_t>& perm,
                           const std::vector<std::array<uint32_t, 4>>& locals);

BigInt binomial(size_t n, size_t k);

}  // namespace qsymp
