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

#include "commands.hpp"

#include <random>
#include <sstream>

#include "qsymp/alinear.hpp"
#include "qsymp/enumerate.hpp"
#include "qsymp/errors.hpp"
#include "qsymp/formats.hpp"
#include "qsymp/ftops.hpp"
#include "qsymp/quadring.hpp"
#include "qsymp/statecheck.hpp"

namespace qsymp::cli {

namespace {

std::string singleton_str(Singleton s) {
  switch (s) {
    case Singleton::violated:
      return "violated";
    case Singleton::strict:
      return "strict";
    case Singleton::mds:
      return "mds";
  }
  return "?";
}

Json params_json(const CodeParams& cp) {
  Json j;
  j["n"] = cp.n;
  j["k"] = cp.k;
  j["d"] = cp.d;
  j["alphabet"] = cp.alphabet;
  j["pure"] = cp.is_pure;
  j["pure_to"] = cp.pure_to;
  Json::string_t s = singleton_str(singleton_check(cp));
  j["singleton"] = s;
  j["mds"] = (s == "mds");
  return j;
}

void require_self_orthogonal(const SympCode& c) {
  size_t i, j;
  if (find_non_orthogonal_pair(c, i, j)) {
    std::ostringstream msg;
    msg << "not self-orthogonal: generators " << i << " and " << j
        << " have nonzero symplectic product";
    throw std::invalid_argument(msg.str());
  }
}

void check_pprime_cap(uint32_t pprime, const Budgets& b) {
  if (pprime > b.pprime_cap) {
    throw ResourceError("module prime " + std::to_string(pprime) +
                        " is above the cap of " + std::to_string(b.pprime_cap) +
                        " (raise --pprime-cap to override)");
  }
}

// Exact decimal rendering of a + b*delta.
std::string quad_str(const QuadElem& e) {
  std::string out = e.a.str();
  out += e.b < 0 ? "-" : "+";
  BigInt mag = e.b < 0 ? BigInt(-e.b) : e.b;
  out += mag.str() + "*delta";
  return out;
}

Json module_json(const QuadRing& ring, const OModuleCode& module) {
  OPoly nu = quadratic_residue_factor(ring);
  Json nu_arr = Json::array();
  for (int i = 0; i <= nu.degree(); ++i) nu_arr.push_back(quad_str(nu.coeff(i)));
  Json rows = Json::array();
  for (const auto& row : module.rows) {
    Json r = Json::array();
    for (const QuadElem& e : row) r.push_back(quad_str(e));
    rows.push_back(r);
  }
  return Json{{"nu", nu_arr}, {"generators", rows}};
}

}  // namespace

Json cmd_qrcode(uint32_t pprime, uint32_t p, const std::string& out_path, const Budgets& b) {
  check_pprime_cap(pprime, b);
  QuadRing ring(pprime);
  PrimeField f(p);
  OModuleCode module = quadratic_residue_module(ring);
  SympCode code = reduce_mod_p(module, f);
  TwoDimAlgebra alg = reduction_algebra(ring, f);
  require_self_orthogonal(code);
  CodeParams cp = parameters(code, b.budget);

  Json j;
  j["command"] = "qrcode";
  j["inputs"] = Json{{"pprime", pprime}, {"p", p}};
  j["module"] = module_json(ring, module);
  j["kind"] = to_string(alg.kind);
  j["dim"] = code.dim();
  j["rank_preserved"] = (code.dim() == pprime - 1);
  j["self_orthogonal"] = true;
  j["params"] = params_json(cp);
  j["budget"] = b.budget;
  j["dual_span_words"] = pow_sat(p, 2 * code.n() - code.dim());
  j["distance_path"] =
      pow_sat(p, 2 * code.n() - code.dim()) <= b.budget ? "enumeration" : "support-search";
  if (!out_path.empty()) {
    write_text_file(out_path, write_symplectic_code(code));
    j["out"] = out_path;
  }
  return j;
}

Json cmd_analyze(const std::string& code_path, const Budgets& b) {
  SympCode code = read_symplectic_code_file(code_path);
  require_self_orthogonal(code);
  CodeParams cp = parameters(code, b.budget);

  Json j;
  j["command"] = "analyze";
  j["inputs"] = Json{{"file", code_path}};
  j["p"] = code.p();
  j["dim"] = code.dim();
  j["self_orthogonal"] = true;
  j["params"] = params_json(cp);
  j["budget"] = b.budget;

  if (pow_sat(code.p(), code.dim()) <= b.budget &&
      pow_sat(code.p(), 2 * code.n() - code.dim()) <= b.budget) {
    WeightDist a = weight_distribution(code, b.budget);
    WeightDist dual_dist = weight_distribution(dual(code), b.budget);
    BigInt size = 1;
    for (size_t i = 0; i < code.dim(); ++i) size *= code.p();
    WeightDist transformed = macwilliams(a, size, code.p(), code.n());
    Json wd = Json::array(), bd = Json::array();
    for (const BigInt& x : a.counts) wd.push_back(x.str());
    for (const BigInt& x : dual_dist.counts) bd.push_back(x.str());
    j["weight_distribution"] = wd;
    j["dual_weight_distribution"] = bd;
    j["macwilliams_consistent"] = (transformed == dual_dist);
  }
  return j;
}

Json cmd_badprimes(uint32_t pprime, int d, const Budgets& b) {
  check_pprime_cap(pprime, b);
  QuadRing ring(pprime);
  OModuleCode module = quadratic_residue_module(ring);
  std::vector<BigInt> primes = bad_primes(module, d);
  Json arr = Json::array();
  for (const BigInt& q : primes) arr.push_back(q.str());
  Json j;
  j["command"] = "badprimes";
  j["inputs"] = Json{{"pprime", pprime}, {"d", d}};
  j["module"] = module_json(ring, module);
  j["bad_primes"] = arr;
  return j;
}

Json cmd_ftcheck(const std::string& mat_path, const std::string& code_path, const Budgets& b) {
  (void)b;
  FtMatrix t = read_ft_matrix_file(mat_path);
  SympCode code = read_symplectic_code_file(code_path);
  if (t.algebra().p() != code.p()) {
    throw std::invalid_argument("matrix and code use different primes");
  }
  bool a_linear =
      t.algebra().is_scalar() ? true : is_a_linear(code, t.algebra().algebra());
  Json j;
  j["command"] = "ftcheck";
  j["inputs"] = Json{{"matrix", mat_path}, {"code", code_path}};
  j["m"] = t.m();
  j["algebra"] =
      t.algebra().is_scalar()
          ? Json{{"p", t.algebra().p()}, {"kind", "scalar"}}
          : Json{{"p", t.algebra().p()},
                 {"kind", to_string(t.algebra().algebra().kind)},
                 {"t", t.algebra().algebra().t},
                 {"d", t.algebra().algebra().d}};
  j["unitary"] = is_ft_unitary(t);
  j["monomial"] = is_monomial(t);
  j["a_linear"] = a_linear;
  j["preserves"] = preserves_code_power(t, code);
  return j;
}

Json cmd_css(const std::string& c1_path, const std::string& c2_path,
             const std::string& out_path, const Budgets& b) {
  ClassicalCode c1 = read_classical_code_file(c1_path);
  ClassicalCode c2 = read_classical_code_file(c2_path);
  SympCode code = css_build(c1, c2);
  CodeParams cp = parameters(code, b.budget);
  int formula_d = css_distance(c1, c2, b.budget);

  Json j;
  j["command"] = "css";
  j["inputs"] = Json{{"c1", c1_path}, {"c2", c2_path}};
  j["dim"] = code.dim();
  j["params"] = params_json(cp);
  j["formula_distance"] = formula_d;
  j["formula_matches"] = (formula_d == cp.d);
  j["budget"] = b.budget;
  if (!out_path.empty()) {
    write_text_file(out_path, write_symplectic_code(code));
    j["out"] = out_path;
  }
  return j;
}

Json cmd_puncture(const std::string& code_path, const std::vector<uint32_t>& word,
                  const std::string& out_path, const std::string& out_shortened,
                  const Budgets& b) {
  SympCode code = read_symplectic_code_file(code_path);
  ClassicalCode pc = puncture_code(code);
  Json j;
  j["command"] = "puncture";
  j["inputs"] = Json{{"file", code_path}};
  j["puncture_dim"] = pc.dim();
  j["puncture_n"] = pc.n();
  if (!out_path.empty()) {
    write_text_file(out_path, write_classical_code(pc));
    j["out"] = out_path;
  }
  if (!word.empty()) {
    SympCode shortened = shorten(code, word);
    require_self_orthogonal(shortened);
    CodeParams cp = parameters(shortened, b.budget);
    j["shortened"] = Json{{"r", shortened.n()}, {"params", params_json(cp)}};
    if (!out_shortened.empty()) {
      write_text_file(out_shortened, write_symplectic_code(shortened));
      j["out_shortened"] = out_shortened;
    }
  }
  return j;
}

Json cmd_statecheck(const std::string& code_path, std::optional<int> d_override,
                    const Budgets& b) {
  SympCode code = read_symplectic_code_file(code_path);
  require_self_orthogonal(code);
  CodeParams cp = parameters(code, b.budget);
  int d = d_override.value_or(cp.d);

  DenseOperator p_op = projector(code, b.cap);
  double herm = hermiticity_defect(p_op);
  double idem;
  if (p_op.dim() <= 512) {
    idem = max_abs_diff(dense_mul(p_op, p_op), p_op);
  } else {
    // Column-sampled idempotency: P (P e_x) vs P e_x on fixed columns.
    idem = 0;
    for (size_t x = 0; x < p_op.dim(); x += p_op.dim() / 16 + 1) {
      std::vector<std::complex<double>> v(p_op.dim()), w(p_op.dim(), {0, 0});
      for (size_t r = 0; r < p_op.dim(); ++r) v[r] = p_op.at(r, x);
      for (size_t r = 0; r < p_op.dim(); ++r) {
        std::complex<double> acc(0, 0);
        for (size_t k = 0; k < p_op.dim(); ++k) acc += p_op.at(r, k) * v[k];
        w[r] = acc;
      }
      for (size_t r = 0; r < p_op.dim(); ++r) idem = std::max(idem, std::abs(w[r] - v[r]));
    }
  }
  double tr = p_op.trace().real();
  uint64_t rank = pow_sat(code.p(), code.n() - code.dim());
  KlReport kl = kl_check(p_op, code.p(), code.n(), d, kDefaultEps);

  Json j;
  j["command"] = "statecheck";
  j["inputs"] = Json{{"file", code_path}};
  j["params"] = params_json(cp);
  j["d_checked"] = d;
  j["dim"] = p_op.dim();
  j["rank"] = rank;
  j["trace_residual"] = std::abs(tr - static_cast<double>(rank));
  j["projector_idempotency_residual"] = idem;
  j["projector_hermiticity_residual"] = herm;
  j["kl_pass"] = kl.pass;
  j["kl_max_residual"] = kl.max_residual;
  j["pure_below_d"] = kl.pure_below;
  j["witness_found"] = kl.witness_found;
  if (kl.witness_found) j["witness"] = kl.witness;
  return j;
}

std::optional<SympCode> search_selfdual(size_t n, int d, uint32_t p, uint64_t trials,
                                        uint64_t seed, uint64_t budget) {
  PrimeField f(p);
  if (2 * d > static_cast<int>(n) + 2) return std::nullopt;  // self-dual bound
  std::mt19937_64 rng(seed);
  auto random_dual_vector = [&](const SympCode& b, std::vector<uint32_t>& v) {
    SympCode dl = dual(b);
    v.assign(2 * n, 0);
    bool nonzero = false;
    for (size_t r = 0; r < dl.dim(); ++r) {
      uint32_t c = static_cast<uint32_t>(rng() % p);
      if (c == 0) continue;
      nonzero = true;
      for (size_t j = 0; j < 2 * n; ++j) {
        v[j] = f.add(v[j], f.mul(c, dl.generators().at(r, j)));
      }
    }
    return nonzero;
  };

  std::vector<uint32_t> v;
  for (uint64_t trial = 0; trial < trials; ++trial) {
    SympCode b(f, n);
    size_t stall = 0;
    while (b.dim() < n && stall < 64) {
      if (!random_dual_vector(b, v) || b.contains(v)) {
        ++stall;
        continue;
      }
      GfMatrix rows = b.generators();
      rows.append_row(v);
      SympCode cand = SympCode::from_matrix(n, rows);
      if (min_nonzero_weight(cand, budget) >= d) {
        b = cand;
        stall = 0;
      } else {
        ++stall;
      }
    }
    if (b.dim() == n) return b;
  }
  return std::nullopt;
}

std::optional<Json> cmd_search_selfdual(size_t n, int d, uint32_t p,
                                        const std::string& out_path, const Budgets& b) {
  auto code = search_selfdual(n, d, p, b.trials, b.seed, b.budget);
  if (!code) return std::nullopt;
  require_self_orthogonal(*code);
  CodeParams cp = parameters(*code, b.budget);
  if (cp.d < d) throw std::logic_error("search produced a code below the target distance");

  Json j;
  j["command"] = "search-selfdual";
  j["inputs"] = Json{{"n", n}, {"d", d}, {"p", p}};
  j["seed"] = b.seed;
  j["trials"] = b.trials;
  j["params"] = params_json(cp);
  if (!out_path.empty()) {
    write_text_file(out_path, write_symplectic_code(*code));
    j["out"] = out_path;
  }
  return j;
}

std::string summarize(const Json& report) {
  std::ostringstream out;
  out << report["command"].get<std::string>() << ":";
  if (report.contains("params")) {
    const Json& p = report["params"];
    out << " [[" << p["n"].get<size_t>() << "," << p["k"].get<size_t>() << ","
        << p["d"].get<int>() << "]]_" << p["alphabet"].get<uint64_t>();
    if (p["pure"].get<bool>()) out << " pure";
    out << " " << p["singleton"].get<std::string>();
  }
  if (report.contains("kind")) out << " kind=" << report["kind"].get<std::string>();
  if (report.contains("bad_primes")) {
    out << " bad_primes={";
    bool first = true;
    for (const auto& q : report["bad_primes"]) {
      if (!first) out << ",";
      out << q.get<std::string>();
      first = false;
    }
    out << "}";
  }
  if (report.contains("unitary")) {
    out << " unitary=" << (report["unitary"].get<bool>() ? "yes" : "no")
        << " monomial=" << (report["monomial"].get<bool>() ? "yes" : "no")
        << " preserves=" << (report["preserves"].get<bool>() ? "yes" : "no");
  }
  if (report.contains("kl_pass")) {
    out << " kl=" << (report["kl_pass"].get<bool>() ? "pass" : "fail")
        << " rank=" << report["rank"].get<uint64_t>();
  }
  if (report.contains("puncture_dim")) {
    out << " P(C) dim=" << report["puncture_dim"].get<size_t>();
    if (report.contains("shortened")) {
      const Json& s = report["shortened"]["params"];
      out << " shortened=[[" << s["n"].get<size_t>() << "," << s["k"].get<size_t>() << ","
          << s["d"].get<int>() << "]]_" << s["alphabet"].get<uint64_t>();
    }
  }
  return out.str();
}

}  // namespace qsymp::cli
