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

#include <gtest/gtest.h>

#include "qsymp/alinear.hpp"
#include "qsymp/errors.hpp"
#include "qsymp/ftops.hpp"
#include "qsymp/quadring.hpp"
#include "testutil.hpp"

namespace qsymp {
namespace {

using testutil::Rng;

FtMatrix all_ones_minus_identity(uint32_t p, size_t m) {
  FtAlgebra alg = FtAlgebra::scalars(PrimeField(p));
  FtMatrix t(alg, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) t.set(i, j, {i == j ? 0u : 1u, 0});
  return t;
}

FtMatrix omega_matrix() {
  // 3x3 over the quadratic extension of GF(2), with omega = X.
  PrimeField f2(2);
  FtAlgebra alg = FtAlgebra::two_dim(classify(1, 1, f2));
  return FtMatrix::from_entries(alg, 3,
                                {{1, 0}, {1, 0}, {1, 0},
                                 {1, 0}, {0, 1}, {1, 1},
                                 {1, 0}, {1, 1}, {0, 1}});
}

TEST(Dagger, ExamplesAndInvolution) {
  PrimeField f2(2);
  FtAlgebra gf4 = FtAlgebra::two_dim(classify(1, 1, f2));
  FtMatrix id = FtMatrix::identity(gf4, 3);
  EXPECT_EQ(dagger(id), id);

  FtMatrix w = omega_matrix();
  FtMatrix wd = dagger(w);
  EXPECT_EQ(wd.at(1, 2), (AlgElem{0, 1}));  // conj swaps omega and omega-bar
  EXPECT_EQ(wd.at(2, 1), (AlgElem{0, 1}));
  EXPECT_EQ(wd.at(1, 1), (AlgElem{1, 1}));
  EXPECT_EQ(dagger(wd), w);
}

TEST(FtUnitary, Examples) {
  EXPECT_TRUE(is_ft_unitary(all_ones_minus_identity(2, 4)));
  EXPECT_TRUE(is_ft_unitary(omega_matrix()));

  FtAlgebra gf5 = FtAlgebra::scalars(PrimeField(5));
  FtMatrix twice(gf5, 2);
  twice.set(0, 0, {2, 0});
  twice.set(1, 1, {2, 0});
  EXPECT_FALSE(is_ft_unitary(twice));
}

TEST(Monomial, Examples) {
  FtAlgebra gf2 = FtAlgebra::scalars(PrimeField(2));
  FtMatrix perm(gf2, 3);
  perm.set(0, 1, {1, 0});
  perm.set(1, 2, {1, 0});
  perm.set(2, 0, {1, 0});
  EXPECT_TRUE(is_monomial(perm));
  EXPECT_FALSE(is_monomial(all_ones_minus_identity(2, 4)));

  PrimeField f2(2);
  TwoDimAlgebra split = classify(1, 0, f2);
  GfMatrix t1 = GfMatrix::from_rows(f2, 2, {{1, 1}, {0, 1}});
  GfMatrix t2 = GfMatrix::from_rows(f2, 2, {{1, 0}, {1, 1}});
  FtMatrix cnot = FtMatrix::from_split_pair(split, t1, t2);
  EXPECT_FALSE(is_monomial(cnot));
  EXPECT_TRUE(is_ft_unitary(cnot));
}

TEST(EmbedSymplectic, JConditionMatchesUnitarity) {
  FtMatrix ex1 = all_ones_minus_identity(2, 4);
  GfMatrix embedded = embed_symplectic(ex1);
  EXPECT_EQ(embedded.rows(), 8u);
  EXPECT_TRUE(satisfies_j_condition(embedded));

  FtAlgebra gf5 = FtAlgebra::scalars(PrimeField(5));
  FtMatrix twice(gf5, 2);
  twice.set(0, 0, {2, 0});
  twice.set(1, 1, {2, 0});
  EXPECT_FALSE(satisfies_j_condition(embed_symplectic(twice)));

  // Exhaustive equivalence for small parameter sets.
  for (uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (uint32_t t = 0; t < p; ++t) {
      for (uint32_t d = 0; d < p; ++d) {
        FtAlgebra alg = FtAlgebra::two_dim(classify(t, d, f));
        size_t m = p == 2 ? 2 : 1;
        FtGroupCensus census = enumerate_ft_group(alg, m, 1 << 20);
        // re-enumerate and compare against the embedding condition
        uint64_t match = 0;
        std::vector<uint64_t> digits(m * m, 0);
        FtMatrix mat(alg, m);
        uint64_t asize = alg.size();
        while (true) {
          for (size_t e = 0; e < m * m; ++e) {
            mat.set(e / m, e % m,
                    {static_cast<uint32_t>(digits[e] % p),
                     static_cast<uint32_t>(digits[e] / p)});
          }
          bool unit = is_ft_unitary(mat);
          EXPECT_EQ(unit, satisfies_j_condition(embed_symplectic(mat)));
          match += unit;
          size_t i = 0;
          while (i < m * m && ++digits[i] == asize) digits[i++] = 0;
          if (i == m * m) break;
        }
        EXPECT_EQ(match, census.unitary);
      }
    }
  }
}

TEST(FtUnitary, ClosureAndDaggerInverse) {
  PrimeField f3(3);
  FtAlgebra alg = FtAlgebra::two_dim(classify(1, 2, f3));
  FtGroupCensus census = enumerate_ft_group(alg, 1, 1 << 16, 16);
  // Collect the unitaries of U_1 and check group structure.
  std::vector<FtMatrix> unitaries;
  for (uint32_t a = 0; a < 3; ++a) {
    for (uint32_t b = 0; b < 3; ++b) {
      FtMatrix t(alg, 1);
      t.set(0, 0, {a, b});
      if (is_ft_unitary(t)) unitaries.push_back(t);
    }
  }
  EXPECT_EQ(unitaries.size(), census.unitary);
  for (const auto& x : unitaries) {
    EXPECT_TRUE(is_ft_unitary(ft_mul(dagger(x), x)));
    EXPECT_TRUE(is_ft_unitary(ft_mul(x, dagger(x))));
    for (const auto& y : unitaries) {
      EXPECT_TRUE(is_ft_unitary(ft_mul(x, y)));
    }
  }
}

TEST(PreservesCodePower, Examples) {
  PrimeField f2(2);
  SympCode qr = reduce_mod_p(quadratic_residue_module(QuadRing(5)), f2);

  FtAlgebra scal = FtAlgebra::scalars(f2);
  EXPECT_TRUE(preserves_code_power(FtMatrix::identity(scal, 2), qr));
  EXPECT_TRUE(preserves_code_power(all_ones_minus_identity(2, 4), qr));

  // CNOT pair on a CSS code with equal components.
  auto simplex = ClassicalCode::from_rows(f2, 7, {{1, 0, 1, 0, 1, 0, 1},
                                                  {0, 1, 1, 0, 0, 1, 1},
                                                  {0, 0, 0, 1, 1, 1, 1}});
  SympCode css = css_build(simplex, simplex);
  TwoDimAlgebra split = classify(1, 0, f2);
  GfMatrix t1 = GfMatrix::from_rows(f2, 2, {{1, 1}, {0, 1}});
  GfMatrix t2 = GfMatrix::from_rows(f2, 2, {{1, 0}, {1, 1}});
  EXPECT_TRUE(split_pair_check(t1, t2));
  FtMatrix cnot = FtMatrix::from_split_pair(split, t1, t2);
  EXPECT_TRUE(preserves_code_power(cnot, css));

  // The precondition is enforced: the QR code is not split-linear.
  EXPECT_THROW(preserves_code_power(cnot, qr), std::invalid_argument);
}

TEST(SplitPairCheck, Examples) {
  PrimeField f2(2);
  GfMatrix id = GfMatrix::identity(f2, 2);
  EXPECT_TRUE(split_pair_check(id, id));
  GfMatrix t1 = GfMatrix::from_rows(f2, 2, {{1, 1}, {0, 1}});
  GfMatrix t2 = GfMatrix::from_rows(f2, 2, {{1, 0}, {1, 1}});
  EXPECT_TRUE(split_pair_check(t1, t2));
  EXPECT_FALSE(split_pair_check(t1, t1));
  GfMatrix singular(f2, 2, 2);
  EXPECT_THROW(split_pair_check(t1, singular), std::invalid_argument);
}

TEST(EnumerateFtGroup, SmallCensuses) {
  FtAlgebra gf2 = FtAlgebra::scalars(PrimeField(2));
  FtGroupCensus m2 = enumerate_ft_group(gf2, 2, 1 << 20);
  EXPECT_EQ(m2.unitary, 2u);  // identity and the swap
  EXPECT_EQ(m2.non_monomial_unitary, 0u);

  FtGroupCensus m3 = enumerate_ft_group(gf2, 3, 1 << 20);
  EXPECT_EQ(m3.unitary, 6u);  // the permutation matrices
  EXPECT_EQ(m3.non_monomial_unitary, 0u);

  FtAlgebra gf4 = FtAlgebra::two_dim(classify(1, 1, PrimeField(2)));
  FtGroupCensus u1 = enumerate_ft_group(gf4, 1, 1 << 20);
  EXPECT_EQ(u1.unitary, 3u);  // norm-one elements of the quartic field
  EXPECT_EQ(u1.non_monomial_unitary, 0u);

  EXPECT_THROW(enumerate_ft_group(gf2, 5, 1 << 20), ResourceError);
}

TEST(EnumerateFtGroup, FirstNonMonomialScalarBlockCountIsFour) {
  FtAlgebra gf2 = FtAlgebra::scalars(PrimeField(2));
  for (size_t m = 1; m <= 3; ++m) {
    EXPECT_EQ(enumerate_ft_group(gf2, m, 1 << 20).non_monomial_unitary, 0u) << "m=" << m;
  }
  EXPECT_TRUE(is_ft_unitary(all_ones_minus_identity(2, 4)));
  EXPECT_FALSE(is_monomial(all_ones_minus_identity(2, 4)));
}

TEST(PreservesCodePower, OffAlgebraSymplecticBreaksSomeLinearCode) {
  // A symplectic matrix outside the algebra image must fail invariance on
  // some algebra-linear code.
  PrimeField f2(2);
  TwoDimAlgebra gf4 = classify(1, 1, f2);
  GfMatrix shear = GfMatrix::from_rows(f2, 2, {{1, 1}, {0, 1}});
  ASSERT_TRUE(satisfies_j_condition(shear));
  // Not of the form a I + b X_hat: that family is {0, I, X_hat, I + X_hat}.
  for (uint32_t a = 0; a < 2; ++a) {
    for (uint32_t b = 0; b < 2; ++b) {
      FtMatrix t(FtAlgebra::two_dim(gf4), 1);
      t.set(0, 0, {a, b});
      EXPECT_NE(embed_symplectic(t), shear);
    }
  }
  Rng rng(101);
  bool violated = false;
  for (int trial = 0; trial < 200 && !violated; ++trial) {
    size_t n = 2 + rng() % 2;
    AlgVector v(n);
    for (auto& e : v) {
      e = {static_cast<uint32_t>(rng() % 2), static_cast<uint32_t>(rng() % 2)};
    }
    if (!hermitian_inner(v, v, gf4).is_zero()) continue;
    SympCode c = to_symplectic({v}, gf4);
    if (c.dim() == 0) continue;
    if (!preserves_power_raw(shear, c, 1)) violated = true;
  }
  EXPECT_TRUE(violated);
}

}  // namespace
}  // namespace qsymp
