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
#include <vector>

#include "qsymp/algebra.hpp"
#include "qsymp/classical.hpp"
#include "qsymp/sympcode.hpp"

namespace qsymp {

/// The ring Z[delta] with delta = (1 + sqrt(pp)) / 2 for a prime
/// pp = 1 (mod 4). delta has trace 1, norm (1 - pp)/4, and minimal
/// polynomial x^2 - x - (pp - 1)/4.
struct QuadRing {
  uint32_t pprime;

  explicit QuadRing(uint32_t pp);

  /// (pp - 1) / 4, the constant in delta^2 = delta + q.
  BigInt q() const { return BigInt(pprime - 1) / 4; }
};

/// Exact element a + b*delta. All arithmetic is arbitrary precision; no
/// rounding happens anywhere in this module.
struct QuadElem {
  BigInt a = 0, b = 0;

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

QuadElem quad_add(const QuadElem& x, const QuadElem& y);
QuadElem quad_sub(const QuadElem& x, const QuadElem& y);
QuadElem quad_mul(const QuadElem& x, const QuadElem& y, const QuadRing& ring);
/// conj(a + b delta) = (a + b) - b delta.
QuadElem quad_conj(const QuadElem& x);
/// x * conj(x) = a^2 + ab - b^2 (pp-1)/4, a rational integer.
BigInt quad_norm(const QuadElem& x, const QuadRing& ring);
/// x + conj(x) = 2a + b.
BigInt quad_trace(const QuadElem& x);
/// Exact quotient x / y; throws std::logic_error if y does not divide x.
QuadElem quad_exact_div(const QuadElem& x, const QuadElem& y, const QuadRing& ring);

/// Polynomial over the ring, coefficients lowest degree first.
struct OPoly {
  std::vector<QuadElem> coeffs;

  int degree() const;
  QuadElem coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : QuadElem{}; }
  bool operator==(const OPoly& o) const;
};

OPoly opoly_mul(const OPoly& x, const OPoly& y, const QuadRing& ring);
OPoly opoly_conj(const OPoly& x);

/// The degree-(pp-1)/2 factor nu(x) = prod_{r residue} (x - zeta^r) of
/// x^pp - 1, computed exactly in the cyclotomic ring and reassembled with
/// coefficients in Z[delta] (every coefficient is a residue-symmetric sum,
/// hence of the form a + b(delta - 1) with delta - 1 the residue Gauss
/// period). The factorization x^pp - 1 = (x - 1) nu(x) conj(nu(x)) is
/// verified exactly before returning.
OPoly quadratic_residue_factor(const QuadRing& ring);

/// Module of row generators over the ring.
struct OModuleCode {
  QuadRing ring;
  size_t n;
  std::vector<std::vector<QuadElem>> rows;
};

/// Cyclic module of rank (pp-1)/2 generated by (x - 1) nu(x) inside
/// O[x]/(x^pp - 1); row i holds the coefficients of x^i (x-1) nu(x).
OModuleCode quadratic_residue_module(const QuadRing& ring);

/// sum_i v_i conj(w_i) = 0 for all generator pairs, in exact arithmetic.
bool is_hermitian_self_orthogonal(const OModuleCode& m);

/// The two-dimensional algebra that multiplication by delta reduces to
/// mod p: t = 1, d = norm(delta) mod p. Its kind tracks how p splits in
/// the ring.
TwoDimAlgebra reduction_algebra(const QuadRing& ring, const PrimeField& f);

/// Reduce the module mod p: each generator g contributes the pair rows of
/// g mod p and of (delta g) mod p under a + b delta -> (a, b).
SympCode reduce_mod_p(const OModuleCode& m, const PrimeField& f);

/// Index [O : I] of the ideal generated by gens, via a normal form of the
/// integer lattice spanned by {g, delta g}. 0 encodes the zero ideal; 1
/// means the whole ring.
BigInt ideal_norm(const std::vector<QuadElem>& gens, const QuadRing& ring);

/// Primes p at which the reduced dual code acquires a word of weight below
/// d: the union over all (d-1)-column sets S of the prime divisors of the
/// norm of the minor ideal I_S. An S whose minors all vanish means weight
/// d is never attained; that is reported as a domain error.
std::vector<BigInt> bad_primes(const OModuleCode& m, int d);

/// Existence certificate for a composite alphabet: one ingredient per
/// prime factor, all with the same length and dimension; the distance is
/// the minimum of the ingredient distances.
CodeParams composite_alphabet(const std::vector<CodeParams>& parts);

}  // namespace qsymp
