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

#include <vector>

#include "qsymp/field.hpp"

namespace qsymp {

/// Polynomial over GF(p), coefficients stored lowest degree first with the
/// leading coefficient nonzero (the zero polynomial is the empty vector).
class PolyGf {
 public:
  explicit PolyGf(PrimeField f) : f_(f) {}
  PolyGf(PrimeField f, std::vector<uint32_t> coeffs);

  const PrimeField& field() const { return f_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }

  uint32_t eval(uint32_t x) const;

  friend PolyGf operator+(const PolyGf& a, const PolyGf& b);
  friend PolyGf operator-(const PolyGf& a, const PolyGf& b);
  friend PolyGf operator*(const PolyGf& a, const PolyGf& b);
  bool operator==(const PolyGf& o) const { return f_ == o.f_ && c_ == o.c_; }

  /// Remainder of this modulo m (m nonzero).
  PolyGf mod(const PolyGf& m) const;

 private:
  void trim();
  PrimeField f_;
  std::vector<uint32_t> c_;
};

}  // namespace qsymp
