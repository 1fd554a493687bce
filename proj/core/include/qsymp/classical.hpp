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
#include <vector>

#include "qsymp/matrix.hpp"
#include "qsymp/poly.hpp"

namespace qsymp {

/// Linear code over GF(p), stored as the RREF of its generator matrix.
class ClassicalCode {
 public:
  ClassicalCode(PrimeField f, size_t n);  // zero code
  static ClassicalCode from_rows(PrimeField f, size_t n,
                                 const std::vector<std::vector<uint32_t>>& rows);
  static ClassicalCode from_matrix(const GfMatrix& rows);

  const PrimeField& field() const { return gens_.field(); }
  uint32_t p() const { return gens_.field().p(); }
  size_t n() const { return gens_.cols(); }
  size_t dim() const { return gens_.rows(); }
  const GfMatrix& generators() const { return gens_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<uint32_t>& v) const;
  bool contains_code(const ClassicalCode& sub) const;

  bool operator==(const ClassicalCode& o) const { return gens_ == o.gens_; }
  bool operator!=(const ClassicalCode& o) const { return !(*this == o); }

 private:
  GfMatrix gens_;
  std::vector<size_t> pivots_;
};

/// Euclidean dual.
ClassicalCode dual(const ClassicalCode& c);

/// True when every generator of a is orthogonal to every generator of b
/// under the Euclidean dot product.
bool orthogonal_codes(const ClassicalCode& a, const ClassicalCode& b);

/// Minimum Hamming weight over D - C (same contract and search strategy as
/// the symplectic version).
int min_weight_outside(const ClassicalCode& d_code, const ClassicalCode& c_code,
                       uint64_t budget);

/// Minimum Hamming weight of the nonzero words of C; n+1 if C = {0}.
int min_nonzero_weight(const ClassicalCode& c, uint64_t budget);

/// Cyclic code of length n generated by g(x): rows are x^i g(x) mod x^n - 1.
ClassicalCode cyclic_code(const PrimeField& f, size_t n, const PolyGf& g);

}  // namespace qsymp
