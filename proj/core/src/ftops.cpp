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

#include "qsymp/ftops.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsymp/alinear.hpp"
#include "qsymp/enumerate.hpp"
#include "qsymp/errors.hpp"

namespace qsymp {

FtAlgebra FtAlgebra::scalars(PrimeField f) { return FtAlgebra(f); }

FtAlgebra FtAlgebra::two_dim(TwoDimAlgebra alg) {
  FtAlgebra a(alg.f);
  a.alg_ = alg;
  return a;
}

const TwoDimAlgebra& FtAlgebra::algebra() const {
  if (!alg_) throw std::logic_error("scalar algebra has no quadratic structure");
  return *alg_;
}

AlgElem FtAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
  if (is_scalar()) return {f_.mul(x.a, y.a), 0};
  return alg_mul(x, y, *alg_);
}

AlgElem FtAlgebra::add(const AlgElem& x, const AlgElem& y) const {
  return {f_.add(x.a, y.a), f_.add(x.b, y.b)};
}

AlgElem FtAlgebra::conj(const AlgElem& x) const {
  if (is_scalar()) return x;
  return alg_conj(x, *alg_);
}

bool FtAlgebra::check_elem(const AlgElem& x) const { return !is_scalar() || x.b == 0; }

bool FtAlgebra::operator==(const FtAlgebra& o) const {
  if (f_ != o.f_ || is_scalar() != o.is_scalar()) return false;
  return is_scalar() || *alg_ == *o.alg_;
}

FtMatrix::FtMatrix(FtAlgebra alg, size_t m) : alg_(alg), m_(m), e_(m * m) {
  if (m == 0) throw std::invalid_argument("block count must be positive");
}

FtMatrix FtMatrix::identity(FtAlgebra alg, size_t m) {
  FtMatrix t(alg, m);
  for (size_t i = 0; i < m; ++i) t.set(i, i, {1, 0});
  return t;
}

FtMatrix FtMatrix::from_entries(FtAlgebra alg, size_t m, const std::vector<AlgElem>& entries) {
  if (entries.size() != m * m) throw std::invalid_argument("entry count mismatch");
  FtMatrix t(alg, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) t.set(i, j, entries[i * m + j]);
  return t;
}

FtMatrix FtMatrix::from_split_pair(const TwoDimAlgebra& alg, const GfMatrix& t1,
                                   const GfMatrix& t2) {
  if (alg.kind != AlgebraKind::split || alg.t != 1 || alg.d != 0) {
    throw std::invalid_argument("split assembly needs the canonical split algebra");
  }
  if (t1.rows() != t1.cols() || t2.rows() != t2.cols() || t1.rows() != t2.rows()) {
    throw std::invalid_argument("split pair must be square matrices of equal size");
  }
  const PrimeField& f = alg.f;
  FtMatrix t(FtAlgebra::two_dim(alg), t1.rows());
  for (size_t i = 0; i < t1.rows(); ++i) {
    for (size_t j = 0; j < t1.cols(); ++j) {
      // Component t1 sits on the idempotent X, t2 on 1 - X:
      // entry = t2 + (t1 - t2) X.
      t.set(i, j, {t2.at(i, j), f.sub(t1.at(i, j), t2.at(i, j))});
    }
  }
  return t;
}

void FtMatrix::set(size_t i, size_t j, const AlgElem& v) {
  if (!alg_.check_elem(v)) {
    throw std::invalid_argument("scalar algebra entry has a nonzero X-part");
  }
  e_[i * m_ + j] = v;
}

FtMatrix ft_mul(const FtMatrix& x, const FtMatrix& y) {
  if (!(x.algebra() == y.algebra()) || x.m() != y.m()) {
    throw std::invalid_argument("matrix algebra or size mismatch");
  }
  const FtAlgebra& a = x.algebra();
  FtMatrix out(a, x.m());
  for (size_t i = 0; i < x.m(); ++i) {
    for (size_t j = 0; j < x.m(); ++j) {
      AlgElem acc{0, 0};
      for (size_t k = 0; k < x.m(); ++k) acc = a.add(acc, a.mul(x.at(i, k), y.at(k, j)));
      out.set(i, j, acc);
    }
  }
  return out;
}

FtMatrix dagger(const FtMatrix& t) {
  FtMatrix out(t.algebra(), t.m());
  for (size_t i = 0; i < t.m(); ++i)
    for (size_t j = 0; j < t.m(); ++j) out.set(j, i, t.algebra().conj(t.at(i, j)));
  return out;
}

bool is_ft_unitary(const FtMatrix& t) {
  FtMatrix prod = ft_mul(dagger(t), t);
  for (size_t i = 0; i < t.m(); ++i) {
    for (size_t j = 0; j < t.m(); ++j) {
      AlgElem want = i == j ? AlgElem{1, 0} : AlgElem{0, 0};
      if (!(prod.at(i, j) == want)) return false;
    }
  }
  return true;
}

bool is_monomial(const FtMatrix& t) {
  for (size_t i = 0; i < t.m(); ++i) {
    size_t row_nz = 0, col_nz = 0;
    for (size_t j = 0; j < t.m(); ++j) {
      row_nz += !t.at(i, j).is_zero();
      col_nz += !t.at(j, i).is_zero();
    }
    if (row_nz != 1 || col_nz != 1) return false;
  }
  return true;
}

GfMatrix embed_symplectic(const FtMatrix& t) {
  const PrimeField& f = t.algebra().field();
  uint32_t xt = 0, xd = 0;
  if (!t.algebra().is_scalar()) {
    xt = t.algebra().algebra().t;
    xd = t.algebra().algebra().d;
  }
  const size_t m = t.m();
  GfMatrix out(f, 2 * m, 2 * m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      const AlgElem& e = t.at(i, j);
      // a I + b X_hat with X_hat = [[0, 1], [-d, t]] acting on pair rows.
      out.set(2 * i, 2 * j, e.a);
      out.set(2 * i, 2 * j + 1, e.b);
      out.set(2 * i + 1, 2 * j, f.neg(f.mul(xd, e.b)));
      out.set(2 * i + 1, 2 * j + 1, f.add(e.a, f.mul(xt, e.b)));
    }
  }
  return out;
}

bool satisfies_j_condition(const GfMatrix& t2m) {
  if (t2m.rows() != t2m.cols() || t2m.rows() % 2 != 0) {
    throw std::invalid_argument("expected an even square matrix");
  }
  const PrimeField& f = t2m.field();
  const size_t m = t2m.rows() / 2;
  GfMatrix j(f, 2 * m, 2 * m);
  for (size_t i = 0; i < m; ++i) {
    j.set(2 * i, 2 * i + 1, 1);
    j.set(2 * i + 1, 2 * i, f.neg(1));
  }
  return matmul(matmul(t2m, j), transpose(t2m)) == j;
}

std::vector<uint32_t> apply_block_matrix(const GfMatrix& t2m, const std::vector<uint32_t>& flat,
                                         size_t m, size_t n) {
  if (t2m.rows() != 2 * m || flat.size() != 2 * m * n) {
    throw std::invalid_argument("block matrix and vector sizes disagree");
  }
  const PrimeField& f = t2m.field();
  std::vector<uint32_t> out(flat.size(), 0);
  for (size_t pos = 0; pos < n; ++pos) {
    for (size_t col = 0; col < 2 * m; ++col) {
      uint32_t acc = 0;
      for (size_t row = 0; row < 2 * m; ++row) {
        // Pair slot `row` at position `pos` lives in block row/2 at flat
        // index: block offset + 2*pos + (row & 1).
        uint32_t v = flat[(row / 2) * 2 * n + 2 * pos + (row & 1)];
        acc = f.add(acc, f.mul(v, t2m.at(row, col)));
      }
      out[(col / 2) * 2 * n + 2 * pos + (col & 1)] = acc;
    }
  }
  return out;
}

bool preserves_power_raw(const GfMatrix& t2m, const SympCode& c, size_t m) {
  const size_t n = c.n();
  for (size_t block = 0; block < m; ++block) {
    for (size_t g = 0; g < c.dim(); ++g) {
      std::vector<uint32_t> flat(2 * m * n, 0);
      auto row = c.generators().row_vec(g);
      std::copy(row.begin(), row.end(), flat.begin() + block * 2 * n);
      auto image = apply_block_matrix(t2m, flat, m, n);
      for (size_t b2 = 0; b2 < m; ++b2) {
        std::vector<uint32_t> comp(image.begin() + b2 * 2 * n,
                                   image.begin() + (b2 + 1) * 2 * n);
        if (!c.contains(comp)) return false;
      }
    }
  }
  return true;
}

bool preserves_code_power(const FtMatrix& t, const SympCode& c) {
  if (t.algebra().p() != c.p()) throw std::invalid_argument("field mismatch");
  if (!t.algebra().is_scalar() && !is_a_linear(c, t.algebra().algebra())) {
    throw std::invalid_argument("code is not linear over the matrix algebra");
  }
  return preserves_power_raw(embed_symplectic(t), c, t.m());
}

bool split_pair_check(const GfMatrix& t1, const GfMatrix& t2) {
  if (t1.rows() != t1.cols() || t2.rows() != t2.cols() || t1.rows() != t2.rows() ||
      t1.field() != t2.field()) {
    throw std::invalid_argument("split pair must be square matrices of equal size");
  }
  if (rank_of(t1) != t1.rows() || rank_of(t2) != t2.rows()) {
    throw std::invalid_argument("split pair matrices must be invertible");
  }
  return matmul(transpose(t1), t2) == GfMatrix::identity(t1.field(), t1.rows());
}

FtGroupCensus enumerate_ft_group(const FtAlgebra& alg, size_t m, uint64_t limit,
                                 size_t max_samples) {
  const uint64_t asize = alg.size();
  uint64_t total = 1;
  for (size_t i = 0; i < m * m; ++i) {
    if (total > limit / asize) throw ResourceError("matrix space exceeds the limit");
    total *= asize;
  }
  FtGroupCensus census;
  census.total = total;
  const uint32_t p = alg.p();
  std::vector<uint64_t> digits(m * m, 0);
  FtMatrix t(alg, m);
  while (true) {
    for (size_t e = 0; e < m * m; ++e) {
      AlgElem v{static_cast<uint32_t>(digits[e] % p), static_cast<uint32_t>(digits[e] / p)};
      t.set(e / m, e % m, v);
    }
    if (is_ft_unitary(t)) {
      ++census.unitary;
      if (!is_monomial(t)) {
        ++census.non_monomial_unitary;
        if (census.samples.size() < max_samples) census.samples.push_back(t);
      }
    }
    size_t i = 0;
    while (i < m * m && ++digits[i] == asize) digits[i++] = 0;
    if (i == m * m) break;
  }
  return census;
}

}  // namespace qsymp
