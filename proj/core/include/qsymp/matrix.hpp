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

#include <cstddef>
#include <vector>

#include "qsymp/field.hpp"

namespace qsymp {

/// Dense matrix over GF(p). All target sizes are at most a few hundred
/// entries, so no sparse representation is provided.
class GfMatrix {
 public:
  GfMatrix(PrimeField f, size_t rows, size_t cols)
      : f_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static GfMatrix identity(PrimeField f, size_t n);
  static GfMatrix from_rows(PrimeField f, size_t cols,
                            const std::vector<std::vector<uint32_t>>& rows);

  const PrimeField& field() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint32_t at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v) { e_[r * cols_ + c] = v; }

  const uint32_t* row(size_t r) const { return e_.data() + r * cols_; }
  std::vector<uint32_t> row_vec(size_t r) const;

  void append_row(const std::vector<uint32_t>& v);

  bool operator==(const GfMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const GfMatrix& o) const { return !(*this == o); }

 private:
  PrimeField f_;
  size_t rows_, cols_;
  std::vector<uint32_t> e_;
};

struct RrefResult {
  GfMatrix mat;
  size_t rank;
  std::vector<size_t> pivots;
};

/// Reduced row-echelon form. Row space is preserved; rank equals the
/// number of pivot columns.
RrefResult rref(const GfMatrix& m);

/// Basis of the right kernel {x : M x^T = 0}, one basis vector per row.
/// Row count is cols(M) - rank(M).
GfMatrix kernel(const GfMatrix& m);

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b);
GfMatrix transpose(const GfMatrix& m);
size_t rank_of(const GfMatrix& m);

/// Reduce v against an RREF basis in place; v ends up zero exactly when it
/// lies in the row space.
void reduce_against(const GfMatrix& rref_basis, const std::vector<size_t>& pivots,
                    std::vector<uint32_t>& v);

/// Membership of v in the row space of an RREF basis.
bool in_row_space(const GfMatrix& rref_basis, const std::vector<size_t>& pivots,
                  std::vector<uint32_t> v);

/// Solve x * gens = target for one x, or return empty if inconsistent.
/// gens need not be in echelon form.
bool solve_row_combination(const GfMatrix& gens, const std::vector<uint32_t>& target,
                           std::vector<uint32_t>& coeffs_out);

}  // namespace qsymp
