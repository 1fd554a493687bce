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

#include <complex>
#include <cstdint>
#include <vector>

#include "qsymp/sympcode.hpp"

namespace qsymp {

constexpr size_t kDefaultDimCap = 4096;
constexpr double kDefaultEps = 1e-9;

/// Small dense complex operator on (C^p)^(tensor n). Basis states are
/// indexed by digit vectors x in Z_p^n with coordinate 0 least significant.
class DenseOperator {
 public:
  explicit DenseOperator(size_t dim) : dim_(dim), e_(dim * dim) {}

  size_t dim() const { return dim_; }
  std::complex<double> at(size_t r, size_t c) const { return e_[r * dim_ + c]; }
  std::complex<double>& at(size_t r, size_t c) { return e_[r * dim_ + c]; }

  std::complex<double> trace() const;

 private:
  size_t dim_;
  std::vector<std::complex<double>> e_;
};

DenseOperator dense_mul(const DenseOperator& a, const DenseOperator& b);
/// max |A_ij - B_ij|.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);
/// max |A_ij - conj(A_ji)|.
double hermiticity_defect(const DenseOperator& a);

/// The displacement operator W(v): a tensor product over coordinates of
/// phase-adjusted shift-and-clock operators, normalized so that
/// W(u) W(v) = tau^<u,v> W(u+v) with tau = zeta_2p^(p+1); in particular
/// W(u) W(v) = omega^<u,v> W(v) W(u). For p = 2 this is the usual
/// {I, X, Y = iXZ, Z} convention, where the product rule holds up to sign
/// but squares are +1.
DenseOperator weyl_operator(const SympVector& v, size_t cap = kDefaultDimCap);

/// Projector onto the joint fixed space of the lifted code group,
/// |C|^{-1} sum over the group. Requires a self-orthogonal code (the
/// operators commute exactly and the lift over a generator basis is sign
/// consistent, so the sum is a projector of rank p^(n-dim)).
DenseOperator projector(const SympCode& c, size_t cap = kDefaultDimCap);

struct KlReport {
  bool pass = false;             // every error of weight < d is proportional on the code space
  double max_residual = 0.0;     // largest proportionality defect seen below weight d
  bool pure_below = true;        // all those proportionality constants vanish
  bool witness_found = false;    // some weight-d error breaks proportionality
  std::vector<uint32_t> witness; // its flat pairs-vector (empty if none)
};

/// Error-correction conditions for the projector P of a length-n code over
/// GF(p): P W(e) P must be proportional to P for every error of weight at
/// most d-1, and some weight-d error must break proportionality. Residuals
/// inside [eps, 10 eps] are reported as indeterminate rather than forced
/// to either side.
KlReport kl_check(const DenseOperator& p_op, uint32_t p, size_t n, int d,
                  double eps = kDefaultEps);

}  // namespace qsymp
