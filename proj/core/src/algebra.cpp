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

#include "qsymp/algebra.hpp"

#include <stdexcept>

namespace qsymp {

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::inert:
      return "inert";
    case AlgebraKind::split:
      return "split";
    case AlgebraKind::ramified:
      return "ramified";
  }
  return "?";
}

TwoDimAlgebra classify(uint32_t t, uint32_t d, const PrimeField& f) {
  TwoDimAlgebra alg{f, t % f.p(), d % f.p(), AlgebraKind::inert};
  auto roots = quadratic_roots(alg.t, alg.d, f);
  if (roots.empty()) {
    alg.kind = AlgebraKind::inert;
  } else if (roots[0] == roots[1]) {
    alg.kind = AlgebraKind::ramified;
  } else {
    alg.kind = AlgebraKind::split;
  }
  return alg;
}

AlgElem alg_add(const AlgElem& x, const AlgElem& y, const TwoDimAlgebra& alg) {
  return {alg.f.add(x.a, y.a), alg.f.add(x.b, y.b)};
}

AlgElem alg_sub(const AlgElem& x, const AlgElem& y, const TwoDimAlgebra& alg) {
  return {alg.f.sub(x.a, y.a), alg.f.sub(x.b, y.b)};
}

AlgElem alg_mul(const AlgElem& x, const AlgElem& y, const TwoDimAlgebra& alg) {
  const PrimeField& f = alg.f;
  uint32_t bb = f.mul(x.b, y.b);
  uint32_t a = f.sub(f.mul(x.a, y.a), f.mul(alg.d, bb));
  uint32_t b = f.add(f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)), f.mul(alg.t, bb));
  return {a, b};
}

AlgElem alg_conj(const AlgElem& x, const TwoDimAlgebra& alg) {
  return {alg.f.add(x.a, alg.f.mul(x.b, alg.t)), alg.f.neg(x.b)};
}

uint32_t alg_norm(const AlgElem& x, const TwoDimAlgebra& alg) {
  AlgElem n = alg_mul(x, alg_conj(x, alg), alg);
  if (n.b != 0) throw std::logic_error("norm is not a scalar");
  return n.a;
}

uint32_t alg_trace(const AlgElem& x, const TwoDimAlgebra& alg) {
  return alg.f.add(alg.f.add(x.a, x.a), alg.f.mul(x.b, alg.t));
}

bool alg_is_invertible(const AlgElem& x, const TwoDimAlgebra& alg) {
  // x * conj(x) = N(x); x is a unit exactly when the norm is nonzero,
  // except in the split/ramified cases where zero divisors have zero norm
  // as well, so the norm test is correct for all three kinds.
  return alg_norm(x, alg) != 0;
}

AlgVector alg_vec_add(const AlgVector& v, const AlgVector& w, const TwoDimAlgebra& alg) {
  if (v.size() != w.size()) throw std::invalid_argument("vector length mismatch");
  AlgVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = alg_add(v[i], w[i], alg);
  return out;
}

AlgVector alg_vec_scale(const AlgVector& v, const AlgElem& s, const TwoDimAlgebra& alg) {
  AlgVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = alg_mul(v[i], s, alg);
  return out;
}

AlgElem hermitian_inner(const AlgVector& v, const AlgVector& w, const TwoDimAlgebra& alg) {
  if (v.size() != w.size()) throw std::invalid_argument("vector length mismatch");
  AlgElem acc{0, 0};
  for (size_t i = 0; i < v.size(); ++i) {
    acc = alg_add(acc, alg_mul(v[i], alg_conj(w[i], alg), alg), alg);
  }
  return acc;
}

}  // namespace qsymp
