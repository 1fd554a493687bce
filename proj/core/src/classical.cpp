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

#include "qsymp/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsymp/enumerate.hpp"
#include "qsymp/errors.hpp"

namespace qsymp {

ClassicalCode::ClassicalCode(PrimeField f, size_t n) : gens_(f, 0, n) {
  if (n == 0) throw std::invalid_argument("code length must be positive");
}

ClassicalCode ClassicalCode::from_rows(PrimeField f, size_t n,
                                       const std::vector<std::vector<uint32_t>>& rows) {
  return from_matrix(GfMatrix::from_rows(f, n, rows));
}

ClassicalCode ClassicalCode::from_matrix(const GfMatrix& rows) {
  ClassicalCode c(rows.field(), rows.cols());
  RrefResult rr = rref(rows);
  c.gens_ = rr.mat;
  c.pivots_ = rr.pivots;
  return c;
}

bool ClassicalCode::contains(const std::vector<uint32_t>& v) const {
  if (v.size() != n()) throw std::invalid_argument("vector length mismatch");
  return in_row_space(gens_, pivots_, v);
}

bool ClassicalCode::contains_code(const ClassicalCode& sub) const {
  if (sub.n() != n() || sub.p() != p()) return false;
  for (size_t i = 0; i < sub.dim(); ++i) {
    if (!contains(sub.gens_.row_vec(i))) return false;
  }
  return true;
}

ClassicalCode dual(const ClassicalCode& c) {
  return ClassicalCode::from_matrix(kernel(c.generators()));
}

bool orthogonal_codes(const ClassicalCode& a, const ClassicalCode& b) {
  if (a.n() != b.n() || a.p() != b.p()) {
    throw std::invalid_argument("codes live in different spaces");
  }
  const PrimeField& f = a.field();
  for (size_t i = 0; i < a.dim(); ++i) {
    for (size_t j = 0; j < b.dim(); ++j) {
      uint32_t acc = 0;
      for (size_t c = 0; c < a.n(); ++c) {
        acc = f.add(acc, f.mul(a.generators().at(i, c), b.generators().at(j, c)));
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

namespace {

size_t dim_supported_in_cl(const GfMatrix& gens, const std::vector<size_t>& support) {
  const size_t n = gens.cols();
  std::vector<bool> keep(n, false);
  for (size_t s : support) keep[s] = true;
  size_t dropped = 0;
  for (size_t i = 0; i < n; ++i) dropped += !keep[i];
  if (dropped == 0) return gens.rows();
  GfMatrix outside(gens.field(), gens.rows(), dropped);
  size_t col = 0;
  for (size_t i = 0; i < n; ++i) {
    if (keep[i]) continue;
    for (size_t r = 0; r < gens.rows(); ++r) outside.set(r, col, gens.at(r, i));
    ++col;
  }
  return gens.rows() - rank_of(outside);
}

int support_search_distance_cl(const ClassicalCode& d_code, const ClassicalCode& c_code,
                               uint64_t max_subsets) {
  const size_t n = d_code.n();
  uint64_t processed = 0;
  std::vector<size_t> support;
  for (size_t w = 1; w <= n; ++w) {
    support.resize(w);
    for (size_t i = 0; i < w; ++i) support[i] = i;
    while (true) {
      if (++processed > max_subsets) {
        throw ResourceError("support-set search exceeded its work budget");
      }
      if (dim_supported_in_cl(d_code.generators(), support) >
          dim_supported_in_cl(c_code.generators(), support)) {
        return static_cast<int>(w);
      }
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

int min_weight_outside(const ClassicalCode& d_code, const ClassicalCode& c_code,
                       uint64_t budget) {
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
    return support_search_distance_cl(d_code, c_code,
                                      std::max<uint64_t>(1'000'000, budget / 100));
  }

  int best = static_cast<int>(d_code.n()) + 1;
  for_each_in_span(d_code.generators(), [&](const std::vector<uint32_t>& v) {
    int w = hamming_weight(v);
    if (w != 0 && w < best && !c_code.contains(v)) {
      best = w;
      if (best == 1) return false;
    }
    return true;
  });
  if (best > static_cast<int>(d_code.n())) throw std::logic_error("difference set was empty");
  return best;
}

int min_nonzero_weight(const ClassicalCode& c, uint64_t budget) {
  if (c.dim() == 0) return static_cast<int>(c.n()) + 1;
  return min_weight_outside(c, ClassicalCode(c.field(), c.n()), budget);
}

ClassicalCode cyclic_code(const PrimeField& f, size_t n, const PolyGf& g) {
  if (g.is_zero()) return ClassicalCode(f, n);
  if (static_cast<size_t>(g.degree()) >= n) {
    throw std::invalid_argument("generator degree must be below the length");
  }
  size_t k = n - static_cast<size_t>(g.degree());
  GfMatrix rows(f, k, n);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j <= static_cast<size_t>(g.degree()); ++j) {
      rows.set(i, (i + j) % n, g.coeff(j));
    }
  }
  return ClassicalCode::from_matrix(rows);
}

}  // namespace qsymp
