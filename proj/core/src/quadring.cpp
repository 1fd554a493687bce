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

#include "qsymp/quadring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

namespace qsymp {

QuadRing::QuadRing(uint32_t pp) : pprime(pp) {
  if (!is_prime(pp) || pp % 4 != 1) {
    throw std::invalid_argument("ring needs a prime congruent to 1 mod 4");
  }
}

QuadElem quad_add(const QuadElem& x, const QuadElem& y) { return {x.a + y.a, x.b + y.b}; }
QuadElem quad_sub(const QuadElem& x, const QuadElem& y) { return {x.a - y.a, x.b - y.b}; }

QuadElem quad_mul(const QuadElem& x, const QuadElem& y, const QuadRing& ring) {
  // delta^2 = delta + q.
  BigInt bb = x.b * y.b;
  return {x.a * y.a + bb * ring.q(), x.a * y.b + x.b * y.a + bb};
}

QuadElem quad_conj(const QuadElem& x) { return {x.a + x.b, -x.b}; }

BigInt quad_norm(const QuadElem& x, const QuadRing& ring) {
  return x.a * x.a + x.a * x.b - x.b * x.b * ring.q();
}

BigInt quad_trace(const QuadElem& x) { return 2 * x.a + x.b; }

QuadElem quad_exact_div(const QuadElem& x, const QuadElem& y, const QuadRing& ring) {
  BigInt n = quad_norm(y, ring);
  if (n == 0) throw std::logic_error("division by zero in the quadratic ring");
  QuadElem num = quad_mul(x, quad_conj(y), ring);
  if (num.a % n != 0 || num.b % n != 0) {
    throw std::logic_error("inexact division in the quadratic ring");
  }
  return {num.a / n, num.b / n};
}

int OPoly::degree() const {
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (!coeffs[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

bool OPoly::operator==(const OPoly& o) const {
  size_t m = std::max(coeffs.size(), o.coeffs.size());
  for (size_t i = 0; i < m; ++i) {
    if (!(coeff(i) == o.coeff(i))) return false;
  }
  return true;
}

OPoly opoly_mul(const OPoly& x, const OPoly& y, const QuadRing& ring) {
  if (x.degree() < 0 || y.degree() < 0) return OPoly{};
  OPoly out;
  out.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, QuadElem{});
  for (size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (size_t j = 0; j < y.coeffs.size(); ++j) {
      out.coeffs[i + j] = quad_add(out.coeffs[i + j], quad_mul(x.coeffs[i], y.coeffs[j], ring));
    }
  }
  return out;
}

OPoly opoly_conj(const OPoly& x) {
  OPoly out = x;
  for (QuadElem& c : out.coeffs) c = quad_conj(c);
  return out;
}

namespace {

// Cyclotomic integers for prime conductor pp, stored as integer vectors
// indexed by exponents 0..pp-1 of zeta (so multiplication is cyclic
// convolution); the relation 1 + zeta + ... + zeta^(pp-1) = 0 is applied
// only when reading coefficients out.
using Cyc = std::vector<BigInt>;

Cyc cyc_zero(uint32_t pp) { return Cyc(pp, 0); }

void cyc_sub_scaled_power(Cyc& x, const BigInt& s, uint32_t e) { x[e] -= s; }

Cyc cyc_mul_by_power(const Cyc& x, uint32_t e, uint32_t pp) {
  Cyc out = cyc_zero(pp);
  for (uint32_t i = 0; i < pp; ++i) out[(i + e) % pp] = x[i];
  return out;
}

// Canonical coefficients over the power basis 1, zeta, ..., zeta^(pp-2).
std::vector<BigInt> cyc_canonical(const Cyc& x) {
  std::vector<BigInt> out(x.size() - 1);
  const BigInt& top = x.back();
  for (size_t i = 0; i + 1 < x.size(); ++i) out[i] = x[i] - top;
  return out;
}

std::vector<bool> residue_table(uint32_t pp) {
  std::vector<bool> is_qr(pp, false);
  for (uint64_t r = 1; r < pp; ++r) is_qr[r * r % pp] = true;
  return is_qr;
}

// Read a residue-symmetric cyclotomic integer as a + b (delta - 1), where
// delta - 1 = sum over residue exponents of zeta^r. In the power basis that
// period has constant term -1, coefficient 0 at residue exponents and -1
// at nonresidue exponents, which pins (a, b) down and gives a full
// consistency check of the reconstruction.
QuadElem cyc_to_quad(const Cyc& x, const QuadRing& ring) {
  const uint32_t pp = ring.pprime;
  auto canon = cyc_canonical(x);
  auto is_qr = residue_table(pp);
  uint32_t some_nonresidue = 0;
  for (uint32_t j = 1; j + 1 < pp; ++j) {
    if (!is_qr[j]) {
      some_nonresidue = j;
      break;
    }
  }
  BigInt b = -canon[some_nonresidue];
  BigInt a = canon[0] + b;
  for (uint32_t j = 1; j + 1 < pp; ++j) {
    BigInt expect = is_qr[j] ? BigInt(0) : -b;
    if (canon[j] != expect) {
      throw std::logic_error("cyclotomic coefficient is not residue-symmetric");
    }
  }
  if (canon[0] != a - b) throw std::logic_error("cyclotomic reconstruction failed");
  // a + b(delta - 1) = (a - b) + b delta.
  return {a - b, b};
}

}  // namespace

OPoly quadratic_residue_factor(const QuadRing& ring) {
  const uint32_t pp = ring.pprime;
  auto is_qr = residue_table(pp);
  // nu = prod over residues r of (x - zeta^r), coefficients cyclotomic.
  std::vector<Cyc> nu{cyc_zero(pp)};
  nu[0][0] = 1;
  for (uint32_t r = 1; r < pp; ++r) {
    if (!is_qr[r]) continue;
    std::vector<Cyc> next(nu.size() + 1, cyc_zero(pp));
    for (size_t i = 0; i < nu.size(); ++i) {
      for (uint32_t e = 0; e < pp; ++e) next[i + 1][e] += nu[i][e];
      Cyc shifted = cyc_mul_by_power(nu[i], r, pp);
      for (uint32_t e = 0; e < pp; ++e) cyc_sub_scaled_power(next[i], shifted[e], e);
    }
    nu = std::move(next);
  }
  OPoly out;
  out.coeffs.reserve(nu.size());
  for (const Cyc& c : nu) out.coeffs.push_back(cyc_to_quad(c, ring));

  // Exact check of (x - 1) nu conj(nu) = x^pp - 1.
  OPoly xm1;
  xm1.coeffs = {QuadElem{-1, 0}, QuadElem{1, 0}};
  OPoly prod = opoly_mul(opoly_mul(xm1, out, ring), opoly_conj(out), ring);
  OPoly target;
  target.coeffs.assign(pp + 1, QuadElem{});
  target.coeffs[0] = QuadElem{-1, 0};
  target.coeffs[pp] = QuadElem{1, 0};
  if (!(prod == target)) throw std::logic_error("residue factor failed the product identity");
  return out;
}

OModuleCode quadratic_residue_module(const QuadRing& ring) {
  const uint32_t pp = ring.pprime;
  OPoly nu = quadratic_residue_factor(ring);
  OPoly xm1;
  xm1.coeffs = {QuadElem{-1, 0}, QuadElem{1, 0}};
  OPoly gen = opoly_mul(xm1, nu, ring);
  OModuleCode m{ring, pp, {}};
  size_t rank = (pp - 1) / 2;
  for (size_t i = 0; i < rank; ++i) {
    std::vector<QuadElem> row(pp);
    for (size_t j = 0; j < gen.coeffs.size(); ++j) row[(i + j) % pp] = gen.coeff(j);
    m.rows.push_back(std::move(row));
  }
  return m;
}

bool is_hermitian_self_orthogonal(const OModuleCode& m) {
  for (size_t i = 0; i < m.rows.size(); ++i) {
    for (size_t j = i; j < m.rows.size(); ++j) {
      QuadElem acc;
      for (size_t c = 0; c < m.n; ++c) {
        acc = quad_add(acc, quad_mul(m.rows[i][c], quad_conj(m.rows[j][c]), m.ring));
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

TwoDimAlgebra reduction_algebra(const QuadRing& ring, const PrimeField& f) {
  // norm(delta) = -(pp - 1)/4.
  BigInt nd = -ring.q();
  uint32_t d = static_cast<uint32_t>(((nd % f.p()) + f.p()) % f.p());
  return classify(1, d, f);
}

SympCode reduce_mod_p(const OModuleCode& m, const PrimeField& f) {
  auto red = [&](const BigInt& x) {
    return static_cast<uint32_t>(((x % f.p()) + f.p()) % f.p());
  };
  std::vector<std::vector<uint32_t>> rows;
  for (const auto& g : m.rows) {
    std::vector<uint32_t> r1(2 * m.n), r2(2 * m.n);
    for (size_t j = 0; j < m.n; ++j) {
      QuadElem dg = quad_mul(QuadElem{0, 1}, g[j], m.ring);
      r1[2 * j] = red(g[j].a);
      r1[2 * j + 1] = red(g[j].b);
      r2[2 * j] = red(dg.a);
      r2[2 * j + 1] = red(dg.b);
    }
    rows.push_back(std::move(r1));
    rows.push_back(std::move(r2));
  }
  return SympCode::from_generators(f, m.n, rows);
}

BigInt ideal_norm(const std::vector<QuadElem>& gens, const QuadRing& ring) {
  // Integer lattice spanned by {g, delta g} in coordinates (a, b).
  std::vector<std::pair<BigInt, BigInt>> rows;
  for (const QuadElem& g : gens) {
    if (g.is_zero()) continue;
    QuadElem dg = quad_mul(QuadElem{0, 1}, g, ring);
    rows.push_back({g.a, g.b});
    rows.push_back({dg.a, dg.b});
  }
  if (rows.empty()) return 0;

  // Euclidean reduction to an upper-triangular two-row normal form.
  BigInt p00 = 0, p01 = 0;  // pivot row for the first coordinate
  BigInt p11 = 0;           // pivot for the second coordinate among rows with a = 0
  auto fold_second = [&](BigInt v) {
    v = abs(v);
    while (v != 0 && p11 != 0) {
      BigInt r = p11 % v;
      p11 = v;
      v = r;
    }
    if (p11 == 0) p11 = v;
  };
  for (auto& [a, b] : rows) {
    while (a != 0) {
      if (p00 == 0) {
        p00 = a;
        p01 = b;
        a = 0;
        b = 0;
        break;
      }
      if (abs(a) < abs(p00)) {
        std::swap(a, p00);
        std::swap(b, p01);
      }
      BigInt qq = a / p00;
      a -= qq * p00;
      b -= qq * p01;
    }
    if (b != 0) fold_second(b);
  }
  if (p00 == 0 || p11 == 0) {
    throw std::logic_error("nonzero ideal lattice had rank below 2");
  }
  return abs(p00) * p11;
}

namespace {

// Determinant over the ring by fraction-free (Bareiss) elimination; every
// division is exact in an integral domain.
QuadElem bareiss_det(std::vector<std::vector<QuadElem>> m, const QuadRing& ring) {
  const size_t n = m.size();
  if (n == 0) return {1, 0};
  QuadElem prev{1, 0};
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {0, 0};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        QuadElem num = quad_sub(quad_mul(m[i][j], m[k][k], ring),
                                quad_mul(m[i][k], m[k][j], ring));
        m[i][j] = quad_exact_div(num, prev, ring);
      }
      m[i][k] = {0, 0};
    }
    prev = m[k][k];
  }
  QuadElem det = m[n - 1][n - 1];
  if (sign < 0) det = quad_sub(QuadElem{0, 0}, det);
  return det;
}

void factor_into(const BigInt& value, std::set<BigInt>& primes) {
  BigInt v = value < 0 ? BigInt(-value) : value;
  if (v <= 1) return;
  for (BigInt d = 2; d * d <= v && d < 1000000; d == 2 ? d = 3 : d += 2) {
    while (v % d == 0) {
      primes.insert(d);
      v /= d;
    }
  }
  if (v == 1) return;
  if (boost::multiprecision::miller_rabin_test(v, 32)) {
    primes.insert(v);
    return;
  }
  // Pollard rho on the remaining composite cofactor.
  BigInt n = v;
  BigInt x = 2, y = 2, c = 1, divisor = n;
  while (true) {
    x = 2;
    y = 2;
    divisor = 1;
    while (divisor == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      divisor = boost::multiprecision::gcd(x >= y ? x - y : y - x, n);
    }
    if (divisor != n) break;
    ++c;
  }
  factor_into(divisor, primes);
  factor_into(n / divisor, primes);
}

}  // namespace

std::vector<BigInt> bad_primes(const OModuleCode& m, int d) {
  if (d < 2) throw std::invalid_argument("target distance must be at least 2");
  const size_t k = m.rows.size();
  const size_t need = static_cast<size_t>(d - 1);
  if (need > k) {
    throw std::invalid_argument("distance never attained: minors of that size do not exist");
  }
  std::set<BigInt> primes;

  std::vector<size_t> cols(need);
  for (size_t i = 0; i < need; ++i) cols[i] = i;
  while (true) {
    // All (d-1) x (d-1) minors over row choices for this column set.
    std::vector<QuadElem> minors;
    std::vector<size_t> rows_sel(need);
    for (size_t i = 0; i < need; ++i) rows_sel[i] = i;
    while (true) {
      std::vector<std::vector<QuadElem>> sub(need, std::vector<QuadElem>(need));
      for (size_t i = 0; i < need; ++i) {
        for (size_t j = 0; j < need; ++j) sub[i][j] = m.rows[rows_sel[i]][cols[j]];
      }
      minors.push_back(bareiss_det(std::move(sub), m.ring));
      size_t i = need;
      bool advanced = false;
      while (i-- > 0) {
        if (rows_sel[i] + (need - i) < k) {
          ++rows_sel[i];
          for (size_t j = i + 1; j < need; ++j) rows_sel[j] = rows_sel[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    BigInt norm = ideal_norm(minors, m.ring);
    if (norm == 0) {
      throw std::invalid_argument("distance never attained: a column-set minor ideal is zero");
    }
    factor_into(norm, primes);

    size_t i = need;
    bool advanced = false;
    while (i-- > 0) {
      if (cols[i] + (need - i) < m.n) {
        ++cols[i];
        for (size_t j = i + 1; j < need; ++j) cols[j] = cols[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return std::vector<BigInt>(primes.begin(), primes.end());
}

CodeParams composite_alphabet(const std::vector<CodeParams>& parts) {
  if (parts.empty()) throw std::invalid_argument("no component codes given");
  CodeParams out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) {
    const CodeParams& p = parts[i];
    if (p.n != out.n || p.k != out.k) {
      throw std::invalid_argument("component codes disagree on length or dimension");
    }
    out.alphabet *= p.alphabet;
    out.d = std::min(out.d, p.d);
    out.pure_to = std::min(out.pure_to, p.pure_to);
  }
  out.is_pure = out.pure_to >= out.d;
  return out;
}

}  // namespace qsymp
