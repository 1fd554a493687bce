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

#include <benchmark/benchmark.h>

#include "qsymp/enumerate.hpp"
#include "qsymp/quadring.hpp"
#include "qsymp/statecheck.hpp"

namespace {

using namespace qsymp;

SympCode qr_code(uint32_t pprime, uint32_t p) {
  return reduce_mod_p(quadratic_residue_module(QuadRing(pprime)), PrimeField(p));
}

// Full enumeration of the dual span: p^6 words for the length-5 module.
void BM_DistanceEnumeration(benchmark::State& state) {
  uint32_t p = static_cast<uint32_t>(state.range(0));
  SympCode c = qr_code(5, p);
  SympCode d = dual(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weight_outside(d, c, kDefaultBudget));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pow_sat(p, d.dim())));
}
BENCHMARK(BM_DistanceEnumeration)->Arg(3)->Arg(7)->Arg(13);

// Support-set search on the length-13 module, where enumeration is out of
// reach.
void BM_DistanceSupportSearch(benchmark::State& state) {
  uint32_t p = static_cast<uint32_t>(state.range(0));
  SympCode c = qr_code(13, p);
  SympCode d = dual(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weight_outside(d, c, 1));
  }
}
BENCHMARK(BM_DistanceSupportSearch)->Arg(5)->Arg(13);

void BM_WeightDistribution(benchmark::State& state) {
  uint32_t p = static_cast<uint32_t>(state.range(0));
  SympCode c = dual(qr_code(5, p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weight_distribution(c, kDefaultBudget));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pow_sat(p, c.dim())));
}
BENCHMARK(BM_WeightDistribution)->Arg(3)->Arg(7);

void BM_ProjectorBuild(benchmark::State& state) {
  uint32_t p = static_cast<uint32_t>(state.range(0));
  SympCode c = qr_code(5, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(projector(c));
  }
}
BENCHMARK(BM_ProjectorBuild)->Arg(2)->Arg(3);

void BM_KnillLaflammeCheck(benchmark::State& state) {
  uint32_t p = static_cast<uint32_t>(state.range(0));
  SympCode c = qr_code(5, p);
  DenseOperator p_op = projector(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kl_check(p_op, p, 5, 3));
  }
}
BENCHMARK(BM_KnillLaflammeCheck)->Arg(2)->Arg(3);

void BM_BadPrimes13(benchmark::State& state) {
  OModuleCode m = quadratic_residue_module(QuadRing(13));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bad_primes(m, 7));
  }
}
BENCHMARK(BM_BadPrimes13);

}  // namespace

BENCHMARK_MAIN();
