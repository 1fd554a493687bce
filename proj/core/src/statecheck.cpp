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

#include "qsymp/statecheck.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsymp/enumerate.hpp"
#include "qsymp/errors.hpp"

namespace qsymp {

namespace {

// A displacement operator in normal form: |x> -> zeta^phase * omega^(z.x)
// |x + shift>, with zeta = exp(i pi / p) and omega = zeta^2. The class is
// closed under composition, which is all the projector build needs.
struct WeylForm {
  uint32_t p;
  uint32_t phase;                // exponent of zeta, mod 2p
  std::vector<uint32_t> shift;   // mod p
  std::vector<uint32_t> zmask;   // mod p

  static WeylForm identity(uint32_t p, size_t n) { return {p, 0, std::vector<uint32_t>(n, 0), std::vector<uint32_t>(n, 0)}; }

  static WeylForm from_vector(const SympVector& v) {
    const uint32_t p = v.f.p();
    WeylForm w = identity(p, v.length());
    for (size_t i = 0; i < v.length(); ++i) {
      uint32_t a = v.a(i), b = v.b(i);
      // Per coordinate: tau^(-ab) X^(-a) Z^b with tau = zeta^(p+1). The
      // same exponent works at p = 2, where it reduces to the i^(ab)
      // convention (Y = iXZ).
      uint64_t e = static_cast<uint64_t>(p + 1) * a % (2 * p) * b % (2 * p);
      w.phase = static_cast<uint32_t>((w.phase + 2ull * p - e) % (2 * p));
      w.shift[i] = (p - a) % p;
      w.zmask[i] = b;
    }
    return w;
  }

  // this := this * o (apply o first).
  void compose_right(const WeylForm& o) {
    uint64_t cross = 0;
    for (size_t i = 0; i < shift.size(); ++i) {
      cross = (cross + static_cast<uint64_t>(zmask[i]) * o.shift[i]) % p;
    }
    phase = static_cast<uint32_t>((phase + o.phase + 2 * cross) % (2 * p));
    PrimeField f(p);
    for (size_t i = 0; i < shift.size(); ++i) {
      shift[i] = f.add(shift[i], o.shift[i]);
      zmask[i] = f.add(zmask[i], o.zmask[i]);
    }
  }
};

size_t state_count(uint32_t p, size_t n, size_t cap) {
  uint64_t dim = pow_sat(p, n);
  if (dim > cap) {
    throw ResourceError("state space dimension " + std::to_string(dim) +
                        " exceeds the cap of " + std::to_string(cap));
  }
  return static_cast<size_t>(dim);
}

std::complex<double> zeta_power(uint32_t p, uint32_t e) {
  double angle = std::numbers::pi * e / p;
  return {std::cos(angle), std::sin(angle)};
}

// Apply a WeylForm to a dense vector.
void apply_weyl(const WeylForm& w, const std::vector<std::complex<double>>& in,
                std::vector<std::complex<double>>& out, uint32_t p, size_t n) {
  const size_t dim = in.size();
  std::fill(out.begin(), out.end(), std::complex<double>(0, 0));
  std::vector<uint32_t> x(n, 0);
  for (size_t idx = 0; idx < dim; ++idx) {
    if (in[idx] != std::complex<double>(0, 0)) {
      uint64_t zdot = 0, target = 0, mult = 1;
      for (size_t i = 0; i < n; ++i) {
        zdot += static_cast<uint64_t>(w.zmask[i]) * x[i];
        target += ((x[i] + w.shift[i]) % p) * mult;
        mult *= p;
      }
      out[target] += in[idx] * zeta_power(w.p, static_cast<uint32_t>((w.phase + 2 * (zdot % p)) % (2 * p)));
    }
    // increment digit vector
    for (size_t i = 0; i < n; ++i) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
  }
}

std::vector<std::vector<std::complex<double>>> range_basis(const DenseOperator& p_op,
                                                           size_t rank) {
  const size_t dim = p_op.dim();
  std::vector<std::vector<std::complex<double>>> basis;
  for (size_t col = 0; col < dim && basis.size() < rank; ++col) {
    std::vector<std::complex<double>> v(dim);
    for (size_t r = 0; r < dim; ++r) v[r] = p_op.at(r, col);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        std::complex<double> overlap(0, 0);
        for (size_t r = 0; r < dim; ++r) overlap += std::conj(b[r]) * v[r];
        for (size_t r = 0; r < dim; ++r) v[r] -= overlap * b[r];
      }
    }
    double norm2 = 0;
    for (const auto& c : v) norm2 += std::norm(c);
    if (norm2 > 1e-12) {
      double inv = 1.0 / std::sqrt(norm2);
      for (auto& c : v) c *= inv;
      basis.push_back(std::move(v));
    }
  }
  if (basis.size() != rank) throw std::logic_error("projector range has unexpected rank");
  return basis;
}

// Enumerate flat pairs-vectors of exactly the given weight in a fixed
// lexicographic order (supports ascending, then per-coordinate nonzero
// pair codes ascending). Stops early when the visitor returns false.
template <typename F>
void for_each_error(uint32_t p, size_t n, int weight, F&& visit) {
  if (weight == 0 || static_cast<size_t>(weight) > n) return;
  const size_t w = static_cast<size_t>(weight);
  const uint32_t patterns = p * p - 1;
  std::vector<size_t> supp(w);
  for (size_t i = 0; i < w; ++i) supp[i] = i;
  while (true) {
    std::vector<uint32_t> code(w, 0);
    while (true) {
      std::vector<uint32_t> flat(2 * n, 0);
      for (size_t i = 0; i < w; ++i) {
        uint32_t v = code[i] + 1;  // 1 .. p^2-1
        flat[2 * supp[i]] = v / p;
        flat[2 * supp[i] + 1] = v % p;
      }
      if (!visit(flat)) return;
      size_t i = w;
      bool more = false;
      while (i-- > 0) {
        if (++code[i] < patterns) {
          more = true;
          break;
        }
        code[i] = 0;
      }
      if (!more) break;
    }
    size_t i = w;
    bool more = false;
    while (i-- > 0) {
      if (supp[i] + (w - i) < n) {
        ++supp[i];
        for (size_t j = i + 1; j < w; ++j) supp[j] = supp[j - 1] + 1;
        more = true;
        break;
      }
    }
    if (!more) break;
  }
}

}  // namespace

std::complex<double> DenseOperator::trace() const {
  std::complex<double> acc(0, 0);
  for (size_t i = 0; i < dim_; ++i) acc += at(i, i);
  return acc;
}

DenseOperator dense_mul(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
  DenseOperator out(a.dim());
  for (size_t i = 0; i < a.dim(); ++i) {
    for (size_t k = 0; k < a.dim(); ++k) {
      std::complex<double> v = a.at(i, k);
      if (v == std::complex<double>(0, 0)) continue;
      for (size_t j = 0; j < a.dim(); ++j) out.at(i, j) += v * b.at(k, j);
    }
  }
  return out;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
  double m = 0;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
  return m;
}

double hermiticity_defect(const DenseOperator& a) {
  double m = 0;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      m = std::max(m, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
  return m;
}

DenseOperator weyl_operator(const SympVector& v, size_t cap) {
  const uint32_t p = v.f.p();
  const size_t n = v.length();
  const size_t dim = state_count(p, n, cap);
  WeylForm w = WeylForm::from_vector(v);
  DenseOperator out(dim);
  std::vector<uint32_t> x(n, 0);
  for (size_t idx = 0; idx < dim; ++idx) {
    uint64_t zdot = 0, target = 0, mult = 1;
    for (size_t i = 0; i < n; ++i) {
      zdot += static_cast<uint64_t>(w.zmask[i]) * x[i];
      target += ((x[i] + w.shift[i]) % p) * mult;
      mult *= p;
    }
    out.at(target, idx) = zeta_power(p, static_cast<uint32_t>((w.phase + 2 * (zdot % p)) % (2 * p)));
    for (size_t i = 0; i < n; ++i) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
  }
  return out;
}

DenseOperator projector(const SympCode& c, size_t cap) {
  if (!is_self_orthogonal(c)) {
    throw std::invalid_argument("projector needs a self-orthogonal code");
  }
  const uint32_t p = c.p();
  const size_t n = c.n();
  const size_t dim = state_count(p, n, cap);
  const size_t k = c.dim();
  double scale = 1.0;
  for (size_t i = 0; i < k; ++i) scale /= p;

  std::vector<WeylForm> gens;
  gens.reserve(k);
  for (size_t i = 0; i < k; ++i) gens.push_back(WeylForm::from_vector(c.generator_vector(i)));

  DenseOperator out(dim);
  WeylForm cur = WeylForm::identity(p, n);
  std::vector<uint32_t> digits(k, 0);
  std::vector<uint32_t> x(n, 0);
  while (true) {
    // accumulate scale * cur into the matrix
    std::fill(x.begin(), x.end(), 0);
    for (size_t idx = 0; idx < dim; ++idx) {
      uint64_t zdot = 0, target = 0, mult = 1;
      for (size_t i = 0; i < n; ++i) {
        zdot += static_cast<uint64_t>(cur.zmask[i]) * x[i];
        target += ((x[i] + cur.shift[i]) % p) * mult;
        mult *= p;
      }
      out.at(target, idx) +=
          scale * zeta_power(p, static_cast<uint32_t>((cur.phase + 2 * (zdot % p)) % (2 * p)));
      for (size_t i = 0; i < n; ++i) {
        if (++x[i] < p) break;
        x[i] = 0;
      }
    }
    if (k == 0) break;
    size_t i = 0;
    while (i < k) {
      cur.compose_right(gens[i]);
      if (++digits[i] < p) break;
      digits[i] = 0;  // p-fold product of a lifted generator is the identity
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

KlReport kl_check(const DenseOperator& p_op, uint32_t p, size_t n, int d, double eps) {
  const size_t dim = p_op.dim();
  if (pow_sat(p, n) != dim) throw std::invalid_argument("operator dimension is not p^n");
  double tr = p_op.trace().real();
  size_t rank = static_cast<size_t>(std::llround(tr));
  if (rank == 0 || std::abs(tr - static_cast<double>(rank)) > 1e-6) {
    throw std::invalid_argument("operator trace is not a positive integer rank");
  }
  auto basis = range_basis(p_op, rank);

  std::vector<std::complex<double>> image(dim);
  auto residual_of = [&](const std::vector<uint32_t>& flat, double& lambda_abs) {
    WeylForm w = WeylForm::from_vector(SympVector::from_flat(p, flat));
    // M = V^dagger W V; proportionality defect is max |M - (tr M / K) I|.
    std::vector<std::complex<double>> m(rank * rank);
    for (size_t j = 0; j < rank; ++j) {
      apply_weyl(w, basis[j], image, p, n);
      for (size_t i = 0; i < rank; ++i) {
        std::complex<double> acc(0, 0);
        for (size_t r = 0; r < dim; ++r) acc += std::conj(basis[i][r]) * image[r];
        m[i * rank + j] = acc;
      }
    }
    std::complex<double> lambda(0, 0);
    for (size_t i = 0; i < rank; ++i) lambda += m[i * rank + i];
    lambda /= static_cast<double>(rank);
    lambda_abs = std::abs(lambda);
    double res = 0;
    for (size_t i = 0; i < rank; ++i) {
      for (size_t j = 0; j < rank; ++j) {
        std::complex<double> want = i == j ? lambda : std::complex<double>(0, 0);
        res = std::max(res, std::abs(m[i * rank + j] - want));
      }
    }
    return res;
  };

  KlReport report;
  report.pass = true;
  for (int w = 1; w < d; ++w) {
    for_each_error(p, n, w, [&](const std::vector<uint32_t>& flat) {
      double lambda_abs = 0;
      double res = residual_of(flat, lambda_abs);
      report.max_residual = std::max(report.max_residual, res);
      if (res >= eps && res <= 10 * eps) {
        throw IndeterminateError("proportionality residual inside the ambiguity band");
      }
      if (res > 10 * eps) report.pass = false;
      if (lambda_abs > eps) report.pure_below = false;
      return report.pass;
    });
    if (!report.pass) break;
  }

  for_each_error(p, n, d, [&](const std::vector<uint32_t>& flat) {
    double lambda_abs = 0;
    double res = residual_of(flat, lambda_abs);
    if (res >= eps && res <= 10 * eps) {
      throw IndeterminateError("witness residual inside the ambiguity band");
    }
    if (res > 10 * eps) {
      report.witness_found = true;
      report.witness = flat;
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace qsymp
