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
#include <string>
#include <vector>

#include "qsymp/field.hpp"

namespace qsymp {

enum class AlgebraKind { inert, split, ramified };

std::string to_string(AlgebraKind k);

/// The two-dimensional algebra A = GF(p)[X] / (X^2 - t X + d), classified
/// by how the defining quadratic factors: irreducible (inert, A = GF(p^2)),
/// two distinct roots (split, A = GF(p) x GF(p)), or a double root
/// (ramified). Elements a + bX are stored as coefficient pairs.
struct TwoDimAlgebra {
  PrimeField f;
  uint32_t t, d;
  AlgebraKind kind;

  uint32_t p() const { return f.p(); }
  bool operator==(const TwoDimAlgebra& o) const {
    return f == o.f && t == o.t && d == o.d;
  }
};

/// Classification by exhaustive root finding, which is uniform in
/// characteristic 2 where the discriminant degenerates. For odd p the
/// result agrees with the Legendre symbol of t^2 - 4d.
TwoDimAlgebra classify(uint32_t t, uint32_t d, const PrimeField& f);

/// Element a + bX of a two-dimensional algebra.
struct AlgElem {
  uint32_t a = 0, b = 0;
  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const AlgElem& o) const { return a == o.a && b == o.b; }
};

AlgElem alg_add(const AlgElem& x, const AlgElem& y, const TwoDimAlgebra& alg);
AlgElem alg_sub(const AlgElem& x, const AlgElem& y, const TwoDimAlgebra& alg);

/// (a1 + b1 X)(a2 + b2 X) reduced with X^2 = t X - d.
AlgElem alg_mul(const AlgElem& x, const AlgElem& y, const TwoDimAlgebra& alg);

/// Conjugation: a + bX -> (a + bt) - bX.
AlgElem alg_conj(const AlgElem& x, const TwoDimAlgebra& alg);

/// Norm x * conj(x) = a^2 + abt + b^2 d, a scalar.
uint32_t alg_norm(const AlgElem& x, const TwoDimAlgebra& alg);

/// Trace x + conj(x) = 2a + bt, a scalar.
uint32_t alg_trace(const AlgElem& x, const TwoDimAlgebra& alg);

bool alg_is_invertible(const AlgElem& x, const TwoDimAlgebra& alg);

using AlgVector = std::vector<AlgElem>;

AlgVector alg_vec_add(const AlgVector& v, const AlgVector& w, const TwoDimAlgebra& alg);
AlgVector alg_vec_scale(const AlgVector& v, const AlgElem& s, const TwoDimAlgebra& alg);

/// sum_i v_i * conj(w_i), an algebra element. Relates to the symplectic
/// form through v_i conj(w_i) = -<v,w> X + <v, wX> coordinate-wise.
AlgElem hermitian_inner(const AlgVector& v, const AlgVector& w, const TwoDimAlgebra& alg);

}  // namespace qsymp
