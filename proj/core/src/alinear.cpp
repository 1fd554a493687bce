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

#include "qsymp/alinear.hpp"

#include <stdexcept>

namespace qsymp {

namespace {

std::vector<uint32_t> flat_of_alg(const AlgVector& v) {
  std::vector<uint32_t> flat(2 * v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    flat[2 * i] = v[i].a;
    flat[2 * i + 1] = v[i].b;
  }
  return flat;
}

// Basis of {u : u * map_rows is in C}, where row i of map_rows is the image
// of the i-th unit vector. Reduction against C's canonical basis is linear,
// so the preimage is the left kernel of the reduced image matrix.
GfMatrix preimage_in_code(const GfMatrix& map_rows, const SympCode& c) {
  GfMatrix reduced(map_rows.field(), map_rows.rows(), map_rows.cols());
  for (size_t i = 0; i < map_rows.rows(); ++i) {
    auto v = map_rows.row_vec(i);
    reduce_against(c.generators(), c.pivots(), v);
    for (size_t j = 0; j < v.size(); ++j) reduced.set(i, j, v[j]);
  }
  return kernel(transpose(reduced));
}

}  // namespace

std::vector<uint32_t> flat_mul_x(const std::vector<uint32_t>& flat, const TwoDimAlgebra& alg) {
  const PrimeField& f = alg.f;
  std::vector<uint32_t> out(flat.size());
  for (size_t i = 0; i + 1 < flat.size(); i += 2) {
    uint32_t a = flat[i], b = flat[i + 1];
    out[i] = f.neg(f.mul(alg.d, b));
    out[i + 1] = f.add(a, f.mul(alg.t, b));
  }
  return out;
}

SympCode to_symplectic(const std::vector<AlgVector>& gens, const TwoDimAlgebra& alg) {
  if (gens.empty()) throw std::invalid_argument("need at least one module generator");
  size_t n = gens[0].size();
  std::vector<std::vector<uint32_t>> rows;
  rows.reserve(2 * gens.size());
  for (const AlgVector& g : gens) {
    if (g.size() != n) throw std::invalid_argument("generator length mismatch");
    auto flat = flat_of_alg(g);
    rows.push_back(flat);
    rows.push_back(flat_mul_x(flat, alg));
  }
  return SympCode::from_generators(alg.f, n, rows);
}

bool is_a_linear(const SympCode& c, const TwoDimAlgebra& alg) {
  if (c.p() != alg.p()) throw std::invalid_argument("field mismatch");
  for (size_t i = 0; i < c.dim(); ++i) {
    if (!c.contains(flat_mul_x(c.generators().row_vec(i), alg))) return false;
  }
  return true;
}

AlgVector row_as_alg(const SympCode& c, size_t row) {
  AlgVector v(c.n());
  for (size_t i = 0; i < c.n(); ++i) {
    v[i] = {c.generators().at(row, 2 * i), c.generators().at(row, 2 * i + 1)};
  }
  return v;
}

// ---- split / CSS -----------------------------------------------------------

SympCode css_build(const ClassicalCode& c1, const ClassicalCode& c2) {
  if (c1.n() != c2.n() || c1.p() != c2.p()) {
    throw std::invalid_argument("component codes live in different spaces");
  }
  if (!orthogonal_codes(c1, c2)) {
    throw std::invalid_argument("component codes are not orthogonal");
  }
  const PrimeField& f = c1.field();
  const size_t n = c1.n();
  std::vector<std::vector<uint32_t>> rows;
  for (size_t r = 0; r < c1.dim(); ++r) {
    std::vector<uint32_t> flat(2 * n, 0);
    for (size_t i = 0; i < n; ++i) flat[2 * i + 1] = c1.generators().at(r, i);
    rows.push_back(std::move(flat));
  }
  for (size_t r = 0; r < c2.dim(); ++r) {
    std::vector<uint32_t> flat(2 * n, 0);
    for (size_t i = 0; i < n; ++i) {
      uint32_t w = c2.generators().at(r, i);
      flat[2 * i] = w;
      flat[2 * i + 1] = f.neg(w);
    }
    rows.push_back(std::move(flat));
  }
  return SympCode::from_generators(f, n, rows);
}

int css_distance(const ClassicalCode& c1, const ClassicalCode& c2, uint64_t budget) {
  ClassicalCode d2 = dual(c2), d1 = dual(c1);
  if (!d2.contains_code(c1)) {
    throw std::invalid_argument("component codes are not orthogonal");
  }
  if (d2.dim() == c1.dim()) {
    // Self-dual pair: both difference sets are empty and the distance is
    // the minimum weight of the code itself.
    return std::min(min_nonzero_weight(c1, budget), min_nonzero_weight(c2, budget));
  }
  return std::min(min_weight_outside(d2, c1, budget), min_weight_outside(d1, c2, budget));
}

std::pair<ClassicalCode, ClassicalCode> split_extract(const SympCode& c,
                                                      const TwoDimAlgebra& alg) {
  if (alg.kind != AlgebraKind::split) throw std::invalid_argument("algebra is not split");
  if (!is_a_linear(c, alg)) throw std::invalid_argument("code is not A-linear");
  const PrimeField& f = alg.f;
  auto roots = quadratic_roots(alg.t, alg.d, f);
  uint32_t r1 = roots[0], r2 = roots[1];
  // Idempotent attached to eigenvalue r2: (X - r1) / (r2 - r1), and its
  // complement. For t=1, d=0 these are X and 1 - X.
  uint32_t scale = f.inv(f.sub(r2, r1));
  AlgElem pi2{f.neg(f.mul(scale, r1)), scale};
  AlgElem pi1{f.sub(1, pi2.a), f.neg(pi2.b)};

  auto component = [&](const AlgElem& idem) {
    GfMatrix map_rows(f, c.n(), 2 * c.n());
    for (size_t i = 0; i < c.n(); ++i) {
      map_rows.set(i, 2 * i, idem.a);
      map_rows.set(i, 2 * i + 1, idem.b);
    }
    return ClassicalCode::from_matrix(preimage_in_code(map_rows, c));
  };
  return {component(pi2), component(pi1)};
}

bool mat2_check(const SympCode& c, const TwoDimAlgebra& alg) {
  auto [c1, c2] = split_extract(c, alg);
  return c1 == c2;
}

// ---- ramified ---------------------------------------------------------------

RamifiedData::RamifiedData(ClassicalCode c1_in, ClassicalCode c0_in, GfMatrix lifts)
    : c1(std::move(c1_in)), c0(std::move(c0_in)), phi_lifts(std::move(lifts)) {
  if (c1.n() != c0.n() || c1.p() != c0.p()) {
    throw std::invalid_argument("component codes live in different spaces");
  }
  if (phi_lifts.rows() != c1.dim() || phi_lifts.cols() != c1.n()) {
    throw std::invalid_argument("phi must provide one lift per generator of C1");
  }
  if (!c0.contains_code(c1)) throw std::invalid_argument("C1 must be contained in C0");
  if (!orthogonal_codes(c1, c0)) throw std::invalid_argument("C1 must be orthogonal to C0");
  // The alternating form of two lifted generators is u_i . l_j - l_i . u_j,
  // so the pairing u . phi(w) must be symmetric (no diagonal constraint).
  const PrimeField& f = c1.field();
  for (size_t i = 0; i < c1.dim(); ++i) {
    for (size_t j = i + 1; j < c1.dim(); ++j) {
      uint32_t acc = 0;
      for (size_t cidx = 0; cidx < c1.n(); ++cidx) {
        acc = f.add(acc, f.mul(c1.generators().at(i, cidx), phi_lifts.at(j, cidx)));
        acc = f.sub(acc, f.mul(phi_lifts.at(i, cidx), c1.generators().at(j, cidx)));
      }
      if (acc != 0) {
        throw std::invalid_argument("phi violates the symmetry needed for self-orthogonality");
      }
    }
  }
}

bool RamifiedData::operator==(const RamifiedData& o) const {
  if (c1 != o.c1 || c0 != o.c0) return false;
  const PrimeField& f = c1.field();
  for (size_t r = 0; r < c1.dim(); ++r) {
    std::vector<uint32_t> diff(c1.n());
    for (size_t i = 0; i < c1.n(); ++i) diff[i] = f.sub(phi_lifts.at(r, i), o.phi_lifts.at(r, i));
    if (!c0.contains(diff)) return false;
  }
  return true;
}

SympCode ramified_build(const RamifiedData& data) {
  const PrimeField& f = data.c1.field();
  const size_t n = data.c1.n();
  std::vector<std::vector<uint32_t>> rows;
  for (size_t r = 0; r < data.c1.dim(); ++r) {
    std::vector<uint32_t> flat(2 * n, 0);
    for (size_t i = 0; i < n; ++i) {
      flat[2 * i] = data.c1.generators().at(r, i);
      flat[2 * i + 1] = data.phi_lifts.at(r, i);
    }
    rows.push_back(std::move(flat));
  }
  for (size_t r = 0; r < data.c0.dim(); ++r) {
    std::vector<uint32_t> flat(2 * n, 0);
    for (size_t i = 0; i < n; ++i) flat[2 * i + 1] = data.c0.generators().at(r, i);
    rows.push_back(std::move(flat));
  }
  return SympCode::from_generators(f, n, rows);
}

SympCode canonical_ramified_form(const SympCode& c, const TwoDimAlgebra& alg) {
  if (alg.kind != AlgebraKind::ramified) throw std::invalid_argument("algebra is not ramified");
  if (alg.t == 0 && alg.d == 0) return c;
  const PrimeField& f = alg.f;
  uint32_t r = quadratic_roots(alg.t, alg.d, f)[0];
  // The left kernel of the nilpotent X - r on pair rows is spanned by
  // (-r, 1); conjugating by the shear that moves it onto (0, 1) makes the
  // nilpotent strictly upper triangular, i.e. the algebra canonical.
  std::array<uint32_t, 4> g = {1, 0, r, 1};
  std::vector<size_t> perm(c.n());
  for (size_t i = 0; i < c.n(); ++i) perm[i] = i;
  return apply_equivalence(c, perm, std::vector<std::array<uint32_t, 4>>(c.n(), g));
}

RamifiedData ramified_extract(const SympCode& c, const TwoDimAlgebra& alg) {
  if (!is_a_linear(c, alg)) throw std::invalid_argument("code is not A-linear");
  SympCode cc = canonical_ramified_form(c, alg);
  const PrimeField& f = c.field();
  const size_t n = c.n();
  TwoDimAlgebra canon = classify(0, 0, f);
  if (!is_a_linear(cc, canon)) throw std::logic_error("canonical form lost A-linearity");

  // C1 = span of the a-parts of the codewords.
  GfMatrix a_parts(f, cc.dim(), n);
  for (size_t r = 0; r < cc.dim(); ++r) {
    for (size_t i = 0; i < n; ++i) a_parts.set(r, i, cc.generators().at(r, 2 * i));
  }
  ClassicalCode c1 = ClassicalCode::from_matrix(a_parts);

  // C0 = {w : (0, w) lies in the code}.
  GfMatrix embed(f, n, 2 * n);
  for (size_t i = 0; i < n; ++i) embed.set(i, 2 * i + 1, 1);
  ClassicalCode c0 = ClassicalCode::from_matrix(preimage_in_code(embed, cc));

  // One lift per generator of C1: a codeword whose a-part is the generator.
  GfMatrix lifts(f, c1.dim(), n);
  for (size_t r = 0; r < c1.dim(); ++r) {
    std::vector<uint32_t> coeffs;
    if (!solve_row_combination(a_parts, c1.generators().row_vec(r), coeffs)) {
      throw std::logic_error("generator of C1 escaped the a-part span");
    }
    for (size_t i = 0; i < n; ++i) {
      uint32_t acc = 0;
      for (size_t s = 0; s < cc.dim(); ++s) {
        acc = f.add(acc, f.mul(coeffs[s], cc.generators().at(s, 2 * i + 1)));
      }
      lifts.set(r, i, acc);
    }
  }
  return RamifiedData(std::move(c1), std::move(c0), std::move(lifts));
}

// ---- puncture / shorten -----------------------------------------------------

namespace {

GfMatrix pair_product_rows(const SympCode& c) {
  const PrimeField& f = c.field();
  const size_t n = c.n();
  GfMatrix rows(f, 0, n);
  for (size_t i = 0; i < c.dim(); ++i) {
    for (size_t j = i + 1; j < c.dim(); ++j) {
      std::vector<uint32_t> prod(n);
      for (size_t s = 0; s < n; ++s) {
        uint32_t ai = c.generators().at(i, 2 * s), bi = c.generators().at(i, 2 * s + 1);
        uint32_t aj = c.generators().at(j, 2 * s), bj = c.generators().at(j, 2 * s + 1);
        prod[s] = f.sub(f.mul(ai, bj), f.mul(bi, aj));
      }
      rows.append_row(prod);
    }
  }
  return rows;
}

}  // namespace

ClassicalCode puncture_code(const SympCode& c) {
  return ClassicalCode::from_matrix(kernel(pair_product_rows(c)));
}

SympCode shorten(const SympCode& c, const std::vector<uint32_t>& word) {
  const PrimeField& f = c.field();
  const size_t n = c.n();
  if (word.size() != n) throw std::invalid_argument("puncture word length mismatch");
  GfMatrix products = pair_product_rows(c);
  for (size_t r = 0; r < products.rows(); ++r) {
    uint32_t acc = 0;
    for (size_t i = 0; i < n; ++i) acc = f.add(acc, f.mul(word[i] % f.p(), products.at(r, i)));
    if (acc != 0) throw std::invalid_argument("word is not in the puncture code");
  }
  std::vector<size_t> keep;
  for (size_t i = 0; i < n; ++i) {
    if (word[i] % f.p() != 0) keep.push_back(i);
  }
  if (keep.empty()) throw std::invalid_argument("zero word gives an empty shortening");

  GfMatrix rows(f, c.dim(), 2 * keep.size());
  for (size_t r = 0; r < c.dim(); ++r) {
    for (size_t s = 0; s < keep.size(); ++s) {
      size_t i = keep[s];
      rows.set(r, 2 * s, f.mul(word[i] % f.p(), c.generators().at(r, 2 * i)));
      rows.set(r, 2 * s + 1, c.generators().at(r, 2 * i + 1));
    }
  }
  return SympCode::from_matrix(keep.size(), rows);
}

ClassicalCode puncture_dual_norms(const SympCode& c, const TwoDimAlgebra& alg) {
  if (alg.kind == AlgebraKind::split) {
    throw std::invalid_argument("componentwise norms need an inert or ramified algebra");
  }
  if (!is_a_linear(c, alg)) throw std::invalid_argument("code is not A-linear");
  const PrimeField& f = alg.f;
  const size_t n = c.n();
  std::vector<AlgVector> family;
  for (size_t i = 0; i < c.dim(); ++i) family.push_back(row_as_alg(c, i));
  size_t k = family.size();
  // Norms are quadratic; sums of generator pairs (plain and X-twisted)
  // polarize them, so this finite family spans the norms of all codewords.
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      family.push_back(alg_vec_add(family[i], family[j], alg));
      family.push_back(
          alg_vec_add(family[i], alg_vec_scale(family[j], AlgElem{0, 1}, alg), alg));
    }
  }
  GfMatrix rows(f, family.size(), n);
  for (size_t r = 0; r < family.size(); ++r) {
    for (size_t i = 0; i < n; ++i) rows.set(r, i, alg_norm(family[r][i], alg));
  }
  return ClassicalCode::from_matrix(rows);
}

}  // namespace qsymp
