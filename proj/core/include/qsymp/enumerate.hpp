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

namespace qsymp {

/// p^e, saturating at UINT64_MAX on overflow (callers compare against
/// budgets, so saturation is the right behavior).
inline uint64_t pow_sat(uint64_t p, uint64_t e) {
  uint64_t acc = 1;
  while (e--) {
    if (acc > UINT64_MAX / p) return UINT64_MAX;
    acc *= p;
  }
  return acc;
}

/// Visit every vector in the row span of gens exactly once, zero first.
/// The visited buffer is reused between calls; visitors must copy what they
/// keep. Enumeration walks a mixed-radix odometer over the coefficient
/// space, adding one generator row per digit step, so the amortized cost
/// per codeword is one row addition. If the visitor returns false the walk
/// stops early.
template <typename Visitor>
void for_each_in_span(const GfMatrix& gens, Visitor&& visit) {
  const PrimeField& f = gens.field();
  const uint32_t p = f.p();
  const size_t k = gens.rows(), n = gens.cols();
  std::vector<uint32_t> cur(n, 0);
  if (!visit(static_cast<const std::vector<uint32_t>&>(cur))) return;
  if (k == 0) return;
  std::vector<uint32_t> digits(k, 0);
  while (true) {
    size_t i = 0;
    while (i < k) {
      const uint32_t* row = gens.row(i);
      for (size_t c = 0; c < n; ++c) {
        uint32_t s = cur[c] + row[c];
        cur[c] = s >= p ? s - p : s;
      }
      if (++digits[i] < p) break;
      // p additions of the same row cancel, so cur already dropped this
      // digit's contribution; carry into the next one.
      digits[i] = 0;
      ++i;
    }
    if (i == k) return;  // odometer wrapped: all words visited
    if (!visit(static_cast<const std::vector<uint32_t>&>(cur))) return;
  }
}

/// Hamming weight of a flat vector.
inline int hamming_weight(const std::vector<uint32_t>& v) {
  int w = 0;
  for (uint32_t x : v) w += x != 0;
  return w;
}

/// Weight of a pairs-vector (length 2n, coordinate i occupying slots
/// 2i, 2i+1): the number of coordinates whose pair is not (0,0).
inline int pair_weight(const std::vector<uint32_t>& v) {
  int w = 0;
  for (size_t i = 0; i + 1 < v.size(); i += 2) {
    w += (v[i] | v[i + 1]) != 0;
  }
  return w;
}

}  // namespace qsymp
