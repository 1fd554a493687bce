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

#include "qsymp/matrix.hpp"

#include <stdexcept>

namespace qsymp {

GfMatrix GfMatrix::identity(PrimeField f, size_t n) {
  GfMatrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GfMatrix GfMatrix::from_rows(PrimeField f, size_t cols,
                             const std::vector<std::vector<uint32_t>>& rows) {
  GfMatrix m(f, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c] % f.p());
  }
  return m;
}

std::vector<uint32_t> GfMatrix::row_vec(size_t r) const {
  return std::vector<uint32_t>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

void GfMatrix::append_row(const std::vector<uint32_t>& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  e_.insert(e_.end(), v.begin(), v.end());
  ++rows_;
}

RrefResult rref(const GfMatrix& m) {
  GfMatrix a = m;
  const PrimeField& f = a.field();
  size_t rank = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    size_t sel = rank;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != rank) {
      for (size_t c = 0; c < a.cols(); ++c) {
        uint32_t t = a.at(sel, c);
        a.set(sel, c, a.at(rank, c));
        a.set(rank, c, t);
      }
    }
    uint32_t piv_inv = f.inv(a.at(rank, col));
    for (size_t c = col; c < a.cols(); ++c) a.set(rank, c, f.mul(a.at(rank, c), piv_inv));
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == rank) continue;
      uint32_t factor = a.at(r, col);
      if (factor == 0) continue;
      for (size_t c = col; c < a.cols(); ++c) {
        a.set(r, c, f.sub(a.at(r, c), f.mul(factor, a.at(rank, c))));
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  // Drop all-zero rows so the result is a basis.
  GfMatrix out(f, rank, a.cols());
  for (size_t r = 0; r < rank; ++r) {
    for (size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
  }
  return {out, rank, pivots};
}

GfMatrix kernel(const GfMatrix& m) {
  RrefResult rr = rref(m);
  const PrimeField& f = m.field();
  size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  GfMatrix out(f, n - rr.rank, n);
  size_t row = 0;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    out.set(row, free_col, 1);
    for (size_t i = 0; i < rr.rank; ++i) {
      uint32_t v = rr.mat.at(i, free_col);
      if (v != 0) out.set(row, rr.pivots[i], f.neg(v));
    }
    ++row;
  }
  return out;
}

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b) {
  if (a.cols() != b.rows() || a.field() != b.field()) {
    throw std::invalid_argument("matmul shape or field mismatch");
  }
  const PrimeField& f = a.field();
  GfMatrix out(f, a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      uint32_t v = a.at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(v, b.at(k, j))));
      }
    }
  }
  return out;
}

GfMatrix transpose(const GfMatrix& m) {
  GfMatrix out(m.field(), m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.set(j, i, m.at(i, j));
  return out;
}

size_t rank_of(const GfMatrix& m) { return rref(m).rank; }

void reduce_against(const GfMatrix& rref_basis, const std::vector<size_t>& pivots,
                    std::vector<uint32_t>& v) {
  const PrimeField& f = rref_basis.field();
  for (size_t i = 0; i < pivots.size(); ++i) {
    uint32_t c = v[pivots[i]];
    if (c == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) {
      v[j] = f.sub(v[j], f.mul(c, rref_basis.at(i, j)));
    }
  }
}

bool in_row_space(const GfMatrix& rref_basis, const std::vector<size_t>& pivots,
                  std::vector<uint32_t> v) {
  reduce_against(rref_basis, pivots, v);
  for (uint32_t x : v)
    if (x != 0) return false;
  return true;
}

bool solve_row_combination(const GfMatrix& gens, const std::vector<uint32_t>& target,
                           std::vector<uint32_t>& coeffs_out) {
  // Augment each generator row with an indicator column block tracking the
  // combination, then reduce the target.
  const PrimeField& f = gens.field();
  size_t n = gens.cols(), k = gens.rows();
  GfMatrix aug(f, k, n + k);
  for (size_t r = 0; r < k; ++r) {
    for (size_t c = 0; c < n; ++c) aug.set(r, c, gens.at(r, c));
    aug.set(r, n + r, 1);
  }
  RrefResult rr = rref(aug);
  std::vector<uint32_t> v(n + k, 0);
  for (size_t c = 0; c < n; ++c) v[c] = target[c];
  for (size_t i = 0; i < rr.rank; ++i) {
    size_t piv = rr.pivots[i];
    if (piv >= n) break;  // remaining pivots live in the tracking block
    uint32_t c = v[piv];
    if (c == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, rr.mat.at(i, j)));
  }
  for (size_t c = 0; c < n; ++c) {
    if (v[c] != 0) return false;
  }
  coeffs_out.assign(k, 0);
  for (size_t r = 0; r < k; ++r) coeffs_out[r] = f.neg(v[n + r]);
  return true;
}

}  // namespace qsymp
