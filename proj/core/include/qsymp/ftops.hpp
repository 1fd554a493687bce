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

#include <cstdint>
#include <optional>
#include <vector>

#include "qsymp/algebra.hpp"
#include "qsymp/sympcode.hpp"

namespace qsymp {

/// Coefficient algebra for block operations: either the scalars GF(p)
/// (every code is linear over them) or a two-dimensional algebra. Entries
/// of a scalar-algebra matrix must have zero X-part.
class FtAlgebra {
 public:
  static FtAlgebra scalars(PrimeField f);
  static FtAlgebra two_dim(TwoDimAlgebra alg);

  bool is_scalar() const { return !alg_.has_value(); }
  const PrimeField& field() const { return f_; }
  uint32_t p() const { return f_.p(); }
  const TwoDimAlgebra& algebra() const;
  /// Number of elements: p or p^2.
  uint64_t size() const { return is_scalar() ? f_.p() : uint64_t(f_.p()) * f_.p(); }

  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  AlgElem add(const AlgElem& x, const AlgElem& y) const;
  AlgElem conj(const AlgElem& x) const;
  bool check_elem(const AlgElem& x) const;  // scalar algebras forbid b != 0

  bool operator==(const FtAlgebra& o) const;

 private:
  explicit FtAlgebra(PrimeField f) : f_(f) {}
  PrimeField f_;
  std::optional<TwoDimAlgebra> alg_;
};

/// m x m matrix over an FtAlgebra, acting on m code blocks.
class FtMatrix {
 public:
  FtMatrix(FtAlgebra alg, size_t m);
  static FtMatrix identity(FtAlgebra alg, size_t m);
  static FtMatrix from_entries(FtAlgebra alg, size_t m, const std::vector<AlgElem>& entries);
  /// Assemble a split-algebra matrix from a pair of GF(p) matrices acting
  /// on the two idempotent components (alg must be the canonical split
  /// algebra t=1, d=0).
  static FtMatrix from_split_pair(const TwoDimAlgebra& alg, const GfMatrix& t1,
                                  const GfMatrix& t2);

  const FtAlgebra& algebra() const { return alg_; }
  size_t m() const { return m_; }
  const AlgElem& at(size_t i, size_t j) const { return e_[i * m_ + j]; }
  void set(size_t i, size_t j, const AlgElem& v);

  bool operator==(const FtMatrix& o) const { return m_ == o.m_ && e_ == o.e_; }

 private:
  FtAlgebra alg_;
  size_t m_;
  std::vector<AlgElem> e_;
};

FtMatrix ft_mul(const FtMatrix& x, const FtMatrix& y);

/// Conjugate transpose.
FtMatrix dagger(const FtMatrix& t);

/// dagger(T) * T = identity over the algebra.
bool is_ft_unitary(const FtMatrix& t);

/// Exactly one nonzero entry in every row and every column.
bool is_monomial(const FtMatrix& t);

/// Block substitution a + bX -> a I + b X_hat into a 2m x 2m matrix over
/// GF(p) acting on pair rows. T is ft-unitary exactly when the embedding
/// preserves the block symplectic form J.
GfMatrix embed_symplectic(const FtMatrix& t);

/// T J T^t = J for J the direct sum of m copies of [[0,1],[-1,0]].
bool satisfies_j_condition(const GfMatrix& t2m);

/// Apply a raw 2m x 2m matrix over GF(p) to a block vector: at each of the
/// n coordinate positions, the m pairs across blocks form a row vector of
/// length 2m that is right-multiplied by the matrix. Blocks are stored
/// block-major (all n pairs of block 1, then block 2, ...).
std::vector<uint32_t> apply_block_matrix(const GfMatrix& t2m, const std::vector<uint32_t>& flat,
                                         size_t m, size_t n);

/// Membership of the transformed generators of C^(m) (direct sum of m
/// copies of C) back in C^(m), for the embedded action of a raw matrix.
bool preserves_power_raw(const GfMatrix& t2m, const SympCode& c, size_t m);

/// The same check for a matrix over the algebra; the code must be linear
/// over it (any code qualifies for the scalar algebra).
bool preserves_code_power(const FtMatrix& t, const SympCode& c);

/// T1^t * T2 = identity (both square, same size, invertible).
bool split_pair_check(const GfMatrix& t1, const GfMatrix& t2);

struct FtGroupCensus {
  uint64_t total = 0;
  uint64_t unitary = 0;
  uint64_t non_monomial_unitary = 0;
  std::vector<FtMatrix> samples;  // a few non-monomial unitaries
};

/// Exhaustive census of |A|^(m^2) matrices; throws ResourceError when that
/// exceeds the limit.
FtGroupCensus enumerate_ft_group(const FtAlgebra& alg, size_t m, uint64_t limit,
                                 size_t max_samples = 4);

}  // namespace qsymp
