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

#include "qsymp/algebra.hpp"
#include "qsymp/classical.hpp"
#include "qsymp/sympcode.hpp"

namespace qsymp {

/// GF(p)-span of {g, gX} for each A-module generator g, flattened through
/// a + bX -> (a, b). The result is invariant under A by construction.
SympCode to_symplectic(const std::vector<AlgVector>& gens, const TwoDimAlgebra& alg);

/// True when the image of every generator under multiplication by X stays
/// inside the code.
bool is_a_linear(const SympCode& c, const TwoDimAlgebra& alg);

/// Read the coordinates of a codeword as algebra elements.
AlgVector row_as_alg(const SympCode& c, size_t row);

/// Module multiplication by X on a flat pairs-row: (a, b) -> (-db, a + tb).
std::vector<uint32_t> flat_mul_x(const std::vector<uint32_t>& flat, const TwoDimAlgebra& alg);

// ---- split / CSS ----------------------------------------------------------

/// Symplectic code of the pair (C1, C2) with C1 orthogonal to C2: the
/// module C1 X + C2 (1 - X) over the split algebra X^2 = X. Generators map
/// to pairs (0, u) for u in C1 and (w, -w) for w in C2.
SympCode css_build(const ClassicalCode& c1, const ClassicalCode& c2);

/// Distance of the CSS code by the classical formula:
/// min(minwt(dual(C2) - C1), minwt(dual(C1) - C2)).
int css_distance(const ClassicalCode& c1, const ClassicalCode& c2,
                 uint64_t budget = kDefaultBudget);

/// Recover (C1, C2) from a split-linear code. Works for any split algebra
/// by passing to its idempotents; C1 is the component attached to the
/// idempotent with the larger eigenvalue of X (for the canonical t=1, d=0
/// algebra that is X itself, matching css_build).
std::pair<ClassicalCode, ClassicalCode> split_extract(const SympCode& c,
                                                      const TwoDimAlgebra& alg);

/// True when the split components agree, i.e. the code is invariant under
/// the full matrix algebra and not just the diagonal one.
bool mat2_check(const SympCode& c, const TwoDimAlgebra& alg);

// ---- ramified --------------------------------------------------------------

/// Data of a ramified-linear code over the canonical nilpotent algebra
/// X^2 = 0: codes C1 inside C0 with C1 orthogonal to C0, plus one lift in
/// GF(p)^n per generator of C1 (phi, defined modulo C0). The pairing
/// u . phi(v) must be symmetric across generators so the built code is
/// self-orthogonal.
struct RamifiedData {
  ClassicalCode c1;
  ClassicalCode c0;
  GfMatrix phi_lifts;  // row i lifts generator i of c1

  RamifiedData(ClassicalCode c1_in, ClassicalCode c0_in, GfMatrix lifts);

  /// Same components with lifts compared modulo C0.
  bool operator==(const RamifiedData& o) const;
};

/// span{ v + phi(v) X : v generator of C1 } + C0 X. Validates the
/// RamifiedData invariants.
SympCode ramified_build(const RamifiedData& data);

/// Inverse of ramified_build, for any ramified algebra: the code is first
/// conjugated coordinate-wise so that the algebra's nilpotent part acts as
/// the canonical X with X^2 = 0, and the returned data describes that
/// conjugated code (see canonical_ramified_form).
RamifiedData ramified_extract(const SympCode& c, const TwoDimAlgebra& alg);

/// The SL2-conjugated copy of c on which ramified_extract operates. For
/// the canonical algebra (t = 0, d = 0) this is c itself.
SympCode canonical_ramified_form(const SympCode& c, const TwoDimAlgebra& alg);

// ---- puncture / shorten ----------------------------------------------------

/// Dual of the span of the componentwise symplectic products {v, w} over
/// generator pairs (bilinearity makes generator pairs sufficient). Words of
/// this code index valid shortenings.
ClassicalCode puncture_code(const SympCode& c);

/// Shorten along a word c of the puncture code: rescale each kept
/// coordinate by the local transformation diag(c_i, 1) (determinant c_i)
/// and delete the coordinates where c_i = 0. The result has length
/// wt(c), is self-orthogonal, and its dual minimum weight is at least
/// that of dual(C). The zero word is rejected.
SympCode shorten(const SympCode& c, const std::vector<uint32_t>& word);

/// Span of the componentwise norms of the vectors of an A-linear code
/// (computed from a polarized family of generator combinations). For
/// inert algebras this equals dual(puncture_code(c)); at p = 2 it is the
/// code generated by the supports.
ClassicalCode puncture_dual_norms(const SympCode& c, const TwoDimAlgebra& alg);

}  // namespace qsymp
