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

#include <numbers>

#include "qsymp/errors.hpp"
#include "qsymp/quadring.hpp"
#include "qsymp/statecheck.hpp"
#include "testutil.hpp"

namespace qsymp {
namespace {

using testutil::Rng;

SympCode qr_code(uint32_t pprime, uint32_t p) {
  return reduce_mod_p(quadratic_residue_module(QuadRing(pprime)), PrimeField(p));
}

DenseOperator dagger_op(const DenseOperator& a) {
  DenseOperator out(a.dim());
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) out.at(i, j) = std::conj(a.at(j, i));
  return out;
}

TEST(WeylOperator, IdentityAndUnitarity) {
  for (uint32_t p : {2u, 3u, 5u}) {
    auto zero = SympVector::from_pairs(p, {{0, 0}, {0, 0}});
    DenseOperator w = weyl_operator(zero);
    EXPECT_LT(max_abs_diff(w, dense_mul(w, w)), 1e-12);  // identity is idempotent
    EXPECT_NEAR(w.trace().real(), static_cast<double>(p * p), 1e-12);

    Rng rng(103 + p);
    for (int trial = 0; trial < 8; ++trial) {
      auto v = SympVector::from_flat(p, testutil::random_vec(rng, p, 4));
      DenseOperator wv = weyl_operator(v);
      DenseOperator prod = dense_mul(wv, dagger_op(wv));
      DenseOperator id(prod.dim());
      for (size_t i = 0; i < id.dim(); ++i) id.at(i, i) = 1;
      EXPECT_LT(max_abs_diff(prod, id), 1e-12);
    }
  }
}

TEST(WeylOperator, CommutatorPhase) {
  for (uint32_t p : {2u, 3u, 5u}) {
    auto x = SympVector::from_pairs(p, {{1, 0}});
    auto z = SympVector::from_pairs(p, {{0, 1}});
    DenseOperator wx = weyl_operator(x), wz = weyl_operator(z);
    DenseOperator lhs = dense_mul(wx, wz);
    DenseOperator rhs = dense_mul(wz, wx);
    // W(x) W(z) = omega^<x,z> W(z) W(x) with <x,z> = 1.
    std::complex<double> omega = std::polar(1.0, 2 * std::numbers::pi / p);
    DenseOperator scaled(rhs.dim());
    for (size_t i = 0; i < rhs.dim(); ++i)
      for (size_t j = 0; j < rhs.dim(); ++j) scaled.at(i, j) = omega * rhs.at(i, j);
    EXPECT_LT(max_abs_diff(lhs, scaled), 1e-12) << "p=" << p;
  }
}

TEST(Projector, TrivialCodeGivesIdentity) {
  PrimeField f3(3);
  DenseOperator p_op = projector(SympCode(f3, 2));
  EXPECT_EQ(p_op.dim(), 9u);
  EXPECT_NEAR(p_op.trace().real(), 9.0, 1e-12);
  EXPECT_LT(max_abs_diff(p_op, dense_mul(p_op, p_op)), 1e-12);
}

TEST(Projector, RequiresSelfOrthogonality) {
  PrimeField f2(2);
  auto full = SympCode::from_generators(f2, 1, {{1, 0}, {0, 1}});
  EXPECT_THROW(projector(full), std::invalid_argument);
  SympCode qr = qr_code(5, 5);
  EXPECT_THROW(projector(qr, 1024), ResourceError);  // 5^5 over the cap
}

TEST(Projector, QrProjectorsHaveExpectedRank) {
  struct Case {
    uint32_t p;
    double rank;
  };
  for (Case c : {Case{2, 2.0}, Case{3, 3.0}}) {
    SympCode code = qr_code(5, c.p);
    DenseOperator p_op = projector(code);
    EXPECT_NEAR(p_op.trace().real(), c.rank, 1e-9);
    EXPECT_LT(std::abs(p_op.trace().imag()), 1e-9);
    EXPECT_LT(max_abs_diff(dense_mul(p_op, p_op), p_op), 1e-9);
    EXPECT_LT(hermiticity_defect(p_op), 1e-9);
  }
}

TEST(Projector, RandomSelfOrthogonalCodes) {
  Rng rng(107);
  for (int trial = 0; trial < 6; ++trial) {
    uint32_t p = trial % 2 == 0 ? 2 : 3;
    PrimeField f(p);
    size_t n = 2 + rng() % 2;
    SympCode c = testutil::random_self_orthogonal(rng, f, n, 1 + rng() % n);
    DenseOperator p_op = projector(c);
    double k_val = 1;
    for (size_t i = 0; i < c.n() - c.dim(); ++i) k_val *= p;
    EXPECT_NEAR(p_op.trace().real(), k_val, 1e-9);
    EXPECT_LT(max_abs_diff(dense_mul(p_op, p_op), p_op), 1e-9);
    EXPECT_LT(hermiticity_defect(p_op), 1e-9);
  }
}

TEST(KlCheck, TrivialCode) {
  PrimeField f2(2);
  SympCode trivial(f2, 2);
  DenseOperator p_op = projector(trivial);
  KlReport r = kl_check(p_op, 2, 2, 1);
  EXPECT_TRUE(r.pass);  // no errors below weight 1
  EXPECT_TRUE(r.witness_found);
  EXPECT_EQ(testutil::brute_pair_weight(r.witness), 1);
}

TEST(KlCheck, QrCodesPassAtTheirDistance) {
  for (uint32_t p : {2u, 3u}) {
    SympCode code = qr_code(5, p);
    DenseOperator p_op = projector(code);
    KlReport r = kl_check(p_op, p, 5, 3);
    EXPECT_TRUE(r.pass) << "p=" << p;
    EXPECT_TRUE(r.pure_below) << "p=" << p;
    EXPECT_TRUE(r.witness_found) << "p=" << p;
    EXPECT_EQ(testutil::brute_pair_weight(r.witness), 3);
    EXPECT_LT(r.max_residual, 1e-9);
  }
}

TEST(KlCheck, QuinticReductionAtTheDesignCap) {
  // p = 5, n = 5 sits just inside the default dimension cap and exercises
  // the odd-prime phase conventions beyond p = 3.
  SympCode code = qr_code(5, 5);
  DenseOperator p_op = projector(code);
  EXPECT_NEAR(p_op.trace().real(), 5.0, 1e-9);
  EXPECT_LT(hermiticity_defect(p_op), 1e-9);
  KlReport r = kl_check(p_op, 5, 5, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.pure_below);
  EXPECT_TRUE(r.witness_found);
  EXPECT_EQ(testutil::brute_pair_weight(r.witness), 3);
}

TEST(KlCheck, DistanceMatchesClassicalComputation) {
  // Claiming one more than the true distance must fail the projector test.
  SympCode code = qr_code(5, 2);
  DenseOperator p_op = projector(code);
  KlReport wrong = kl_check(p_op, 2, 5, 4);
  EXPECT_FALSE(wrong.pass);
}

TEST(KlCheck, ImpureCodeKeepsProportionalityWithNonzeroConstants) {
  // The length-5 code padded with a weight-one stabilizer on a sixth
  // coordinate: distance stays 3 but purity drops to 1.
  PrimeField f2(2);
  SympCode qr = qr_code(5, 2);
  std::vector<std::vector<uint32_t>> rows;
  for (size_t r = 0; r < qr.dim(); ++r) {
    auto row = qr.generators().row_vec(r);
    row.push_back(0);
    row.push_back(0);
    rows.push_back(row);
  }
  std::vector<uint32_t> zpad(12, 0);
  zpad[11] = 1;  // (0,1) on the new coordinate
  rows.push_back(zpad);
  SympCode padded = SympCode::from_generators(f2, 6, rows);
  ASSERT_TRUE(is_self_orthogonal(padded));
  CodeParams cp = parameters(padded);
  EXPECT_EQ(cp.d, 3);
  EXPECT_EQ(cp.pure_to, 1);
  EXPECT_FALSE(cp.is_pure);

  DenseOperator p_op = projector(padded);
  KlReport r = kl_check(p_op, 2, 6, cp.d);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.pure_below);  // the padded stabilizer has lambda = +/- 1
  EXPECT_TRUE(r.witness_found);
}

}  // namespace
}  // namespace qsymp
