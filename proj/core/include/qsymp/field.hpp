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

namespace qsymp {

bool is_prime(uint64_t n);

/// Arithmetic context for the prime field GF(p). Elements are plain
/// uint32_t values kept in [0, p); all operations reduce their results.
class PrimeField {
 public:
  /// Rejects p that fail a deterministic (trial-division) primality test.
  explicit PrimeField(uint32_t p);

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }

  /// Multiplicative inverse; zero input is a domain error.
  uint32_t inv(uint32_t a) const;

  uint32_t pow(uint32_t a, uint64_t e) const;

  /// Reduce an arbitrary signed value into [0, p).
  uint32_t reduce(int64_t x) const {
    int64_t r = x % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  uint32_t p_;
};

/// Legendre symbol of a mod p for odd prime p: +1 for a nonzero square,
/// -1 for a nonsquare, 0 when p divides a. p = 2 is a domain error.
int legendre(int64_t a, uint32_t p);

/// Roots of x^2 - t*x + d over GF(p), found by exhaustive evaluation so
/// that characteristic 2 needs no special casing. Returned as a multiset:
/// empty (irreducible), {r, r} (double root), or {r, s} with r < s.
std::vector<uint32_t> quadratic_roots(uint32_t t, uint32_t d, const PrimeField& f);

}  // namespace qsymp
