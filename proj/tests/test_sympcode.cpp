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

#include "commands.hpp"
#include "qsymp/alinear.hpp"
#include "qsymp/enumerate.hpp"
#include "qsymp/errors.hpp"
#include "qsymp/quadring.hpp"
#include "qsymp/sympcode.hpp"
#include "testutil.hpp"

namespace qsymp {
namespace {

using testutil::Rng;

SympCode qr_code(uint32_t pprime, uint32_t p) {
  return reduce_mod_p(quadratic_residue_module(QuadRing(pprime)), PrimeField(p));
}

TEST(SympVector, WeightExamples) {
  EXPECT_EQ(symp_weight(SympVector::from_pairs(5, {{0, 0}, {1, 2}, {0, 3}})), 2);
  EXPECT_EQ(symp_weight(SympVector::from_pairs(5, {{0, 0}, {0, 0}})), 0);
  EXPECT_EQ(symp_weight(SympVector::from_pairs(3, {{1, 0}, {0, 1}, {2, 2}})), 3);
}

TEST(SympVector, InnerExamples) {
  auto e1 = SympVector::from_pairs(5, {{1, 0}});
  auto e2 = SympVector::from_pairs(5, {{0, 1}});
  EXPECT_EQ(symp_inner(e1, e2), 1u);
  auto v = SympVector::from_pairs(5, {{1, 2}, {3, 0}});
  EXPECT_EQ(symp_inner(v, v), 0u);
  auto w = SympVector::from_pairs(5, {{2, 1}, {1, 4}});
  EXPECT_EQ(symp_inner(v, w), 4u);  // (1*1 - 2*2) + (3*4 - 0*1) = 9 = 4 mod 5
  auto short_w = SympVector::from_pairs(5, {{2, 1}});
  EXPECT_THROW(symp_inner(v, short_w), std::invalid_argument);
}

TEST(SympVector, InnerBilinearAntisymmetric) {
  Rng rng(23);
  for (uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 25; ++trial) {
      size_t n = 1 + rng() % 4;
      auto u = SympVector::from_flat(p, testutil::random_vec(rng, p, 2 * n));
      auto v = SympVector::from_flat(p, testutil::random_vec(rng, p, 2 * n));
      auto w = SympVector::from_flat(p, testutil::random_vec(rng, p, 2 * n));
      EXPECT_EQ(symp_inner(u, v), f.neg(symp_inner(v, u)));
      uint32_t c = static_cast<uint32_t>(rng() % p);
      SympVector cv_plus_w = v;
      for (size_t j = 0; j < 2 * n; ++j) {
        cv_plus_w.flat[j] = f.add(f.mul(c, v.flat[j]), w.flat[j]);
      }
      EXPECT_EQ(symp_inner(u, cv_plus_w),
                f.add(f.mul(c, symp_inner(u, v)), symp_inner(u, w)));
    }
  }
}

TEST(SympCode, CanonicalFormEquality) {
  PrimeField f(3);
  auto a = SympCode::from_generators(f, 2, {{1, 0, 2, 1}, {0, 1, 1, 1}});
  auto b = SympCode::from_generators(f, 2, {{0, 1, 1, 1}, {1, 1, 0, 2}, {1, 0, 2, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
}

TEST(Dual, DimsAndBiduality) {
  PrimeField f3(3);
  SympCode zero(f3, 2);
  EXPECT_EQ(dual(zero).dim(), 4u);

  Rng rng(29);
  for (uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 20; ++trial) {
      size_t n = 1 + rng() % 4;
      SympCode c = testutil::random_symp_code(rng, f, n, n + 1);
      SympCode d = dual(c);
      EXPECT_EQ(d.dim(), 2 * n - c.dim());
      EXPECT_EQ(dual(d), c);
      for (size_t i = 0; i < c.dim(); ++i) {
        for (size_t j = 0; j < d.dim(); ++j) {
          EXPECT_EQ(symp_inner(c.generator_vector(i), d.generator_vector(j)), 0u);
        }
      }
    }
  }
}

TEST(Dual, QrCodeIsContainedInItsDual) {
  SympCode c = qr_code(5, 2);
  EXPECT_EQ(c.dim(), 4u);
  SympCode d = dual(c);
  EXPECT_EQ(d.dim(), 6u);
  EXPECT_TRUE(d.contains_code(c));
  EXPECT_TRUE(is_self_orthogonal(c));
}

TEST(SelfOrthogonal, Examples) {
  PrimeField f2(2);
  EXPECT_TRUE(is_self_orthogonal(SympCode(f2, 1)));
  auto full = SympCode::from_generators(f2, 1, {{1, 0}, {0, 1}});
  EXPECT_FALSE(is_self_orthogonal(full));
  size_t i, j;
  EXPECT_TRUE(find_non_orthogonal_pair(full, i, j));
  EXPECT_TRUE(is_self_orthogonal(qr_code(5, 7)));
}

TEST(MinWeightOutside, Examples) {
  PrimeField f2(2);
  auto d_code = SympCode::from_generators(f2, 2, {{1, 0, 1, 0}});
  EXPECT_EQ(min_weight_outside(d_code, SympCode(f2, 2)), 2);

  SympCode qr52 = qr_code(5, 2);
  EXPECT_EQ(min_weight_outside(dual(qr52), qr52), 3);

  SympCode qr55 = qr_code(5, 5);
  EXPECT_EQ(min_weight_outside(dual(qr55), qr55), 3);
  EXPECT_EQ(min_nonzero_weight(qr55), 4);

  EXPECT_THROW(min_weight_outside(qr52, qr52), std::invalid_argument);
  EXPECT_THROW(min_weight_outside(SympCode(f2, 2), d_code), std::invalid_argument);
}

TEST(MinWeightOutside, BothPathsAgree) {
  Rng rng(31);
  for (uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 15; ++trial) {
      size_t n = 2 + rng() % 3;
      SympCode c = testutil::random_self_orthogonal(rng, f, n, 1 + rng() % n);
      SympCode d = dual(c);
      if (d.dim() == c.dim()) continue;
      int by_enumeration = min_weight_outside(d, c, kDefaultBudget);
      int by_support = min_weight_outside(d, c, 1);  // budget 1 forces the support path
      EXPECT_EQ(by_enumeration, by_support);
    }
  }
  // Larger instance: the length-13 reduction at p = 2.
  SympCode qr = qr_code(13, 2);
  EXPECT_EQ(min_weight_outside(dual(qr), qr, kDefaultBudget),
            min_weight_outside(dual(qr), qr, 1));
}

TEST(Parameters, Examples) {
  CodeParams qr53 = parameters(qr_code(5, 3));
  EXPECT_EQ(qr53.n, 5u);
  EXPECT_EQ(qr53.k, 1u);
  EXPECT_EQ(qr53.d, 3);
  EXPECT_TRUE(qr53.is_pure);
  EXPECT_EQ(qr53.alphabet, 3u);

  PrimeField f2(2);
  CodeParams trivial = parameters(SympCode(f2, 3));
  EXPECT_EQ(trivial.k, 3u);
  EXPECT_EQ(trivial.d, 1);
  EXPECT_EQ(trivial.pure_to, 4);  // no nonzero words
  EXPECT_TRUE(trivial.is_pure);
  EXPECT_EQ(singleton_check(trivial), Singleton::mds);

  // Regression golden, established by full enumeration of the 2^14 dual
  // words and cross-checked by the support-set path.
  CodeParams qr13 = parameters(qr_code(13, 2));
  EXPECT_EQ(qr13.d, 5);
  EXPECT_TRUE(qr13.is_pure);

  auto full = SympCode::from_generators(f2, 1, {{1, 0}, {0, 1}});
  EXPECT_THROW(parameters(full), std::invalid_argument);
}

TEST(WeightDistribution, Examples) {
  PrimeField f3(3);
  WeightDist z = weight_distribution(SympCode(f3, 4));
  EXPECT_EQ(z.counts[0], 1);
  EXPECT_EQ(z.total(), 1);

  auto full1 = SympCode::from_generators(f3, 1, {{1, 0}, {0, 1}});
  WeightDist fd = weight_distribution(full1);
  EXPECT_EQ(fd.counts[0], 1);
  EXPECT_EQ(fd.counts[1], 8);

  WeightDist qr = weight_distribution(qr_code(5, 2));
  std::vector<BigInt> expect = {1, 0, 0, 0, 15, 0};
  EXPECT_EQ(qr.counts, expect);

  SympCode big = qr_code(13, 3);
  EXPECT_THROW(weight_distribution(dual(big), 1000), ResourceError);
}

TEST(WeightDistribution, MatchesBruteForce) {
  Rng rng(37);
  for (uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 10; ++trial) {
      size_t n = 1 + rng() % 3;
      SympCode c = testutil::random_symp_code(rng, f, n, n);
      WeightDist wd = weight_distribution(c);
      std::vector<BigInt> brute(n + 1, 0);
      for (const auto& w :
           testutil::brute_span(testutil::matrix_rows(c.generators()), p, 2 * n)) {
        ++brute[testutil::brute_pair_weight(w)];
      }
      EXPECT_EQ(wd.counts, brute);
    }
  }
}

TEST(MacWilliams, Examples) {
  // A of the zero code: B_j = C(n, j) (p^2 - 1)^j.
  WeightDist a0;
  a0.counts = {1, 0, 0};
  WeightDist b0 = macwilliams(a0, 1, 2, 2);
  EXPECT_EQ(b0.counts, (std::vector<BigInt>{1, 6, 9}));

  // A of the full space maps back to the zero-code distribution.
  WeightDist full;
  full.counts = {1, 6, 9};
  WeightDist bf = macwilliams(full, 16, 2, 2);
  EXPECT_EQ(bf.counts, (std::vector<BigInt>{1, 0, 0}));

  SympCode qr = qr_code(5, 2);
  WeightDist a = weight_distribution(qr);
  WeightDist b = macwilliams(a, 16, 2, 5);
  WeightDist dual_counts = weight_distribution(dual(qr));
  EXPECT_EQ(b, dual_counts);
  EXPECT_EQ(dual_counts.counts, (std::vector<BigInt>{1, 0, 0, 30, 15, 18}));
}

TEST(MacWilliams, EqualsEnumeratedDualOnRandomSubspaces) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    uint32_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 3 : 5);
    PrimeField f(p);
    size_t n = 1 + rng() % (p == 5 ? 3 : 4);
    SympCode c = testutil::random_symp_code(rng, f, n, n);
    WeightDist a = weight_distribution(c);
    BigInt size = 1;
    for (size_t i = 0; i < c.dim(); ++i) size *= p;
    EXPECT_EQ(macwilliams(a, size, p, n), weight_distribution(dual(c)));
  }
}

TEST(QuantumEnumerators, LowWeightRelation) {
  // B_i = K^{-1} A_i below the distance, for stabilizer codes.
  for (uint32_t p : {2u, 3u}) {
    SympCode c = qr_code(5, p);
    CodeParams cp = parameters(c);
    WeightDist a = quantum_a_dist(c), b = quantum_b_dist(c);
    BigInt k_val = 1;
    for (size_t i = 0; i < c.n() - c.dim(); ++i) k_val *= p;
    for (int i = 0; i < cp.d; ++i) {
      EXPECT_EQ(b.counts[i] * k_val, a.counts[i]) << "i=" << i << " p=" << p;
    }
  }
}

TEST(UnitaryEnumeratorCoeff, Basics) {
  WeightDist zero_dist;
  zero_dist.counts = {1, 0, 0, 0};
  EXPECT_EQ(unitary_enumerator_coeff(zero_dist, 3, 2, 3), BigRational(1));

  // j = 0 on a concrete instance: 2^{-2} (C(2,0) + C(0,0) * 9) = 10/4.
  WeightDist x;
  x.counts = {1, 0, 9};
  EXPECT_EQ(unitary_enumerator_coeff(x, 0, 2, 2), BigRational(10, 4));
}

TEST(UnitaryEnumeratorCoeff, TwoExpansionsAgreeOnTheQrCode) {
  SympCode c = qr_code(5, 2);
  CodeParams cp = parameters(c);
  WeightDist a = quantum_a_dist(c), b = quantum_b_dist(c);
  BigRational from_a = unitary_enumerator_coeff(a, cp.d - 1, 2, 5);
  BigRational from_b = unitary_enumerator_coeff(b, cp.n - cp.d + 1, 2, 5);
  EXPECT_EQ(from_a, from_b);
  EXPECT_EQ(from_a, BigRational(5));
}

TEST(UnitaryEnumeratorCoeff, SelfDualLowCoefficients) {
  // For a maximal isotropic code of distance d, the expansion collapses to
  // alpha^{-i} C(n, i) for 1 <= i <= d-1 (only the weight-0 term survives).
  auto code = cli::search_selfdual(6, 4, 2, 4000, 1, kDefaultBudget);
  ASSERT_TRUE(code.has_value());
  CodeParams cp = parameters(*code);
  EXPECT_EQ(cp.k, 0u);
  EXPECT_EQ(cp.d, 4);
  WeightDist a = quantum_a_dist(*code);
  EXPECT_EQ(a.total(), 64);
  for (int i = 1; i < cp.d; ++i) {
    BigInt denom = 1;
    for (int t = 0; t < i; ++t) denom *= 2;
    EXPECT_EQ(unitary_enumerator_coeff(a, 6 - i, 2, 6),
              BigRational(binomial(6, i)) / BigRational(denom));
  }
}

TEST(SingletonCheck, Examples) {
  EXPECT_EQ(singleton_check({5, 1, 3, 3, true, 7}), Singleton::mds);
  EXPECT_EQ(singleton_check({5, 1, 4, 4, true, 2}), Singleton::violated);
  EXPECT_EQ(singleton_check({4, 2, 2, 2, true, 2}), Singleton::mds);
  EXPECT_EQ(singleton_check({13, 1, 5, 5, true, 2}), Singleton::strict);
  // Maximal isotropic codes use the 2d <= n+2 form.
  EXPECT_EQ(singleton_check({6, 0, 4, 4, true, 2}), Singleton::mds);
  EXPECT_EQ(singleton_check({6, 0, 5, 5, true, 2}), Singleton::violated);
  EXPECT_EQ(singleton_check({6, 0, 3, 3, true, 2}), Singleton::strict);
}

TEST(ApplyEquivalence, ExamplesAndInvariance) {
  SympCode qr = qr_code(5, 2);
  std::vector<size_t> id_perm = {0, 1, 2, 3, 4};
  std::vector<std::array<uint32_t, 4>> id_locals(5, {1, 0, 0, 1});
  EXPECT_EQ(apply_equivalence(qr, id_perm, id_locals), qr);

  std::vector<size_t> swap_perm = {1, 0, 2, 3, 4};
  SympCode swapped = apply_equivalence(qr, swap_perm, id_locals);
  CodeParams cp0 = parameters(qr), cp1 = parameters(swapped);
  EXPECT_EQ(cp0.d, cp1.d);
  EXPECT_EQ(cp0.k, cp1.k);
  EXPECT_EQ(cp0.pure_to, cp1.pure_to);

  std::vector<std::array<uint32_t, 4>> bad(5, {1, 1, 0, 2});  // det 2
  EXPECT_THROW(apply_equivalence(qr, id_perm, bad), std::invalid_argument);

  Rng rng(43);
  for (uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 12; ++trial) {
      size_t n = 2 + rng() % 3;
      SympCode c = testutil::random_self_orthogonal(rng, f, n, 1 + rng() % n);
      std::vector<std::array<uint32_t, 4>> locals;
      for (size_t i = 0; i < n; ++i) locals.push_back(testutil::random_sl2(rng, f));
      SympCode moved = apply_equivalence(c, testutil::random_perm(rng, n), locals);
      EXPECT_EQ(moved.dim(), c.dim());
      EXPECT_TRUE(is_self_orthogonal(moved));
      EXPECT_EQ(weight_distribution(moved).counts, weight_distribution(c).counts);
    }
  }
}

TEST(ApplyEquivalence, FourierSwapKeepsCssSelfOrthogonal) {
  // Local [[0,1],[-1,0]] at every coordinate.
  PrimeField f2(2);
  auto c1 = ClassicalCode::from_rows(f2, 7, {{1, 0, 1, 0, 1, 0, 1},
                                             {0, 1, 1, 0, 0, 1, 1},
                                             {0, 0, 0, 1, 1, 1, 1}});
  SympCode css = css_build(c1, c1);
  std::vector<size_t> id_perm(7);
  for (size_t i = 0; i < 7; ++i) id_perm[i] = i;
  std::vector<std::array<uint32_t, 4>> fourier(7, {0, 1, 1, 0});  // det = -1 = 1 mod 2
  SympCode rotated = apply_equivalence(css, id_perm, fourier);
  EXPECT_TRUE(is_self_orthogonal(rotated));
  EXPECT_EQ(parameters(rotated).d, parameters(css).d);
}

TEST(SingletonNeverViolatedOnRealCodes, Sampled) {
  Rng rng(47);
  for (int trial = 0; trial < 120; ++trial) {
    uint32_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 3 : 5);
    PrimeField f(p);
    size_t n = 2 + rng() % 4;
    SympCode c = testutil::random_self_orthogonal(rng, f, n, 1 + rng() % n);
    CodeParams cp = parameters(c);
    Singleton s = singleton_check(cp);
    EXPECT_NE(s, Singleton::violated);
    if (s == Singleton::mds && cp.k >= 1) {
      EXPECT_GE(min_nonzero_weight(c), static_cast<int>(cp.n) - cp.d + 2);
    }
  }
}

}  // namespace
}  // namespace qsymp
