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

#include "qsymp/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsymp {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p).
  int64_t r0 = a % p_, r1 = p_;
  int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  return reduce(s0);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % p_, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

int legendre(int64_t a, uint32_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre symbol requires an odd prime modulus");
  }
  PrimeField f(p);
  uint32_t r = f.reduce(a);
  if (r == 0) return 0;
  // Euler's criterion.
  uint32_t e = f.pow(r, (p - 1) / 2);
  return e == 1 ? 1 : -1;
}

std::vector<uint32_t> quadratic_roots(uint32_t t, uint32_t d, const PrimeField& f) {
  std::vector<uint32_t> roots;
  for (uint32_t x = 0; x < f.p(); ++x) {
    uint32_t v = f.add(f.mul(x, x), f.sub(d, f.mul(t, x)));
    if (v == 0) roots.push_back(x);
  }
  // A monic quadratic with exactly one distinct root over a field is a
  // perfect square, so report the root twice.
  if (roots.size() == 1) roots.push_back(roots[0]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qsymp
