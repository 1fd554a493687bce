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

#include "qsymp/poly.hpp"

#include <stdexcept>

namespace qsymp {

PolyGf::PolyGf(PrimeField f, std::vector<uint32_t> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= f_.p();
  trim();
}

void PolyGf::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint32_t PolyGf::eval(uint32_t x) const {
  uint32_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x % f_.p()), c_[i]);
  return acc;
}

PolyGf operator+(const PolyGf& a, const PolyGf& b) {
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff(i), b.coeff(i));
  return PolyGf(a.f_, std::move(c));
}

PolyGf operator-(const PolyGf& a, const PolyGf& b) {
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_.sub(a.coeff(i), b.coeff(i));
  return PolyGf(a.f_, std::move(c));
}

PolyGf operator*(const PolyGf& a, const PolyGf& b) {
  if (a.is_zero() || b.is_zero()) return PolyGf(a.f_);
  std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] = a.f_.add(c[i + j], a.f_.mul(a.c_[i], b.c_[j]));
    }
  }
  return PolyGf(a.f_, std::move(c));
}

PolyGf PolyGf::mod(const PolyGf& m) const {
  if (m.is_zero()) throw std::invalid_argument("polynomial modulus is zero");
  std::vector<uint32_t> r = c_;
  uint32_t lead_inv = f_.inv(m.c_.back());
  while (r.size() >= m.c_.size()) {
    uint32_t factor = f_.mul(r.back(), lead_inv);
    size_t shift = r.size() - m.c_.size();
    if (factor != 0) {
      for (size_t i = 0; i < m.c_.size(); ++i) {
        r[shift + i] = f_.sub(r[shift + i], f_.mul(factor, m.c_[i]));
      }
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() < m.c_.size()) break;
  }
  return PolyGf(f_, std::move(r));
}

}  // namespace qsymp
