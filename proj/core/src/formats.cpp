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

#include "qsymp/formats.hpp"

#include <fstream>
#include <sstream>

namespace qsymp {

namespace {

struct LineReader {
  std::istream& in;
  size_t line_no = 0;

  std::string next(const std::string& what) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw ParseError(line_no + 1, "unexpected end of file, expected " + what);
  }
};

uint64_t parse_uint(const std::string& tok, size_t line_no, const std::string& what) {
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected " + what + ", got '" + tok + "'");
  }
}

uint64_t parse_keyed_uint(LineReader& r, const std::string& key) {
  std::string line = r.next("'" + key + " <value>'");
  std::istringstream ss(line);
  std::string k, v, extra;
  ss >> k >> v;
  if (k != key || v.empty() || (ss >> extra)) {
    throw ParseError(r.line_no, "expected '" + key + " <value>'");
  }
  return parse_uint(v, r.line_no, key);
}

std::vector<uint32_t> parse_row(LineReader& r, size_t count, uint32_t p) {
  std::string line = r.next("a generator row");
  std::istringstream ss(line);
  std::vector<uint32_t> row;
  std::string tok;
  while (ss >> tok) {
    uint64_t v = parse_uint(tok, r.line_no, "a field element");
    if (v >= p) throw ParseError(r.line_no, "entry " + tok + " not reduced mod p");
    row.push_back(static_cast<uint32_t>(v));
  }
  if (row.size() != count) {
    throw ParseError(r.line_no, "expected " + std::to_string(count) + " entries, got " +
                                    std::to_string(row.size()));
  }
  return row;
}

}  // namespace

SympCode read_symplectic_code(std::istream& in) {
  LineReader r{in};
  std::string magic = r.next("'symplectic'");
  if (magic != "symplectic") throw ParseError(r.line_no, "expected 'symplectic'");
  uint32_t p = static_cast<uint32_t>(parse_keyed_uint(r, "p"));
  PrimeField f = [&] {
    try {
      return PrimeField(p);
    } catch (const std::exception& e) {
      throw ParseError(r.line_no, e.what());
    }
  }();
  size_t n = parse_keyed_uint(r, "n");
  size_t dim = parse_keyed_uint(r, "dim");
  if (n == 0) throw ParseError(r.line_no, "length must be positive");
  std::vector<std::vector<uint32_t>> rows;
  for (size_t i = 0; i < dim; ++i) rows.push_back(parse_row(r, 2 * n, p));
  SympCode c = SympCode::from_generators(f, n, rows);
  if (c.dim() != dim) {
    throw ParseError(r.line_no, "generators are linearly dependent (dim " +
                                    std::to_string(c.dim()) + " < " + std::to_string(dim) + ")");
  }
  return c;
}

std::string write_symplectic_code(const SympCode& c) {
  std::ostringstream out;
  out << "symplectic\n";
  out << "p " << c.p() << "\n";
  out << "n " << c.n() << "\n";
  out << "dim " << c.dim() << "\n";
  for (size_t r = 0; r < c.dim(); ++r) {
    for (size_t j = 0; j < 2 * c.n(); ++j) {
      if (j) out << ' ';
      out << c.generators().at(r, j);
    }
    out << "\n";
  }
  return out.str();
}

ClassicalCode read_classical_code(std::istream& in) {
  LineReader r{in};
  std::string magic = r.next("'classical'");
  if (magic != "classical") throw ParseError(r.line_no, "expected 'classical'");
  uint32_t p = static_cast<uint32_t>(parse_keyed_uint(r, "p"));
  PrimeField f = [&] {
    try {
      return PrimeField(p);
    } catch (const std::exception& e) {
      throw ParseError(r.line_no, e.what());
    }
  }();
  size_t n = parse_keyed_uint(r, "n");
  size_t dim = parse_keyed_uint(r, "dim");
  if (n == 0) throw ParseError(r.line_no, "length must be positive");
  std::vector<std::vector<uint32_t>> rows;
  for (size_t i = 0; i < dim; ++i) rows.push_back(parse_row(r, n, p));
  ClassicalCode c = ClassicalCode::from_rows(f, n, rows);
  if (c.dim() != dim) {
    throw ParseError(r.line_no, "generators are linearly dependent (dim " +
                                    std::to_string(c.dim()) + " < " + std::to_string(dim) + ")");
  }
  return c;
}

std::string write_classical_code(const ClassicalCode& c) {
  std::ostringstream out;
  out << "classical\n";
  out << "p " << c.p() << "\n";
  out << "n " << c.n() << "\n";
  out << "dim " << c.dim() << "\n";
  for (size_t r = 0; r < c.dim(); ++r) {
    for (size_t j = 0; j < c.n(); ++j) {
      if (j) out << ' ';
      out << c.generators().at(r, j);
    }
    out << "\n";
  }
  return out.str();
}

FtMatrix read_ft_matrix(std::istream& in) {
  LineReader r{in};
  std::string header = r.next("'ftmat ...' header");
  std::istringstream ss(header);
  std::string tok;
  ss >> tok;
  if (tok != "ftmat") throw ParseError(r.line_no, "expected 'ftmat' header");
  ss >> tok;
  if (tok != "p") throw ParseError(r.line_no, "expected 'p <p>' in header");
  ss >> tok;
  uint32_t p = static_cast<uint32_t>(parse_uint(tok, r.line_no, "p"));
  PrimeField f = [&] {
    try {
      return PrimeField(p);
    } catch (const std::exception& e) {
      throw ParseError(r.line_no, e.what());
    }
  }();

  ss >> tok;
  bool scalar = false;
  uint32_t t = 0, d = 0;
  if (tok == "scalar") {
    scalar = true;
  } else if (tok == "t") {
    ss >> tok;
    t = static_cast<uint32_t>(parse_uint(tok, r.line_no, "t"));
    ss >> tok;
    if (tok != "d") throw ParseError(r.line_no, "expected 'd <d>' in header");
    ss >> tok;
    d = static_cast<uint32_t>(parse_uint(tok, r.line_no, "d"));
  } else {
    throw ParseError(r.line_no, "expected 't <t> d <d>' or 'scalar' in header");
  }
  ss >> tok;
  if (tok != "m") throw ParseError(r.line_no, "expected 'm <m>' in header");
  ss >> tok;
  size_t m = parse_uint(tok, r.line_no, "m");
  if (m == 0) throw ParseError(r.line_no, "block count must be positive");
  std::string trailing;
  if (ss >> trailing) throw ParseError(r.line_no, "unexpected token '" + trailing + "' in header");

  FtAlgebra alg = scalar ? FtAlgebra::scalars(f) : FtAlgebra::two_dim(classify(t, d, f));
  FtMatrix mat(alg, m);
  for (size_t i = 0; i < m; ++i) {
    std::string line = r.next("a matrix row");
    std::istringstream rs(line);
    for (size_t j = 0; j < m; ++j) {
      std::string entry;
      if (!(rs >> entry)) throw ParseError(r.line_no, "row has too few entries");
      size_t colon = entry.find(':');
      if (colon == std::string::npos) {
        throw ParseError(r.line_no, "entry '" + entry + "' is not of the form a:b");
      }
      uint32_t a = static_cast<uint32_t>(
          parse_uint(entry.substr(0, colon), r.line_no, "entry a-part"));
      uint32_t b = static_cast<uint32_t>(
          parse_uint(entry.substr(colon + 1), r.line_no, "entry b-part"));
      if (a >= p || b >= p) throw ParseError(r.line_no, "entry not reduced mod p");
      try {
        mat.set(i, j, {a, b});
      } catch (const std::exception& e) {
        throw ParseError(r.line_no, e.what());
      }
    }
    std::string extra;
    if (rs >> extra) throw ParseError(r.line_no, "row has too many entries");
  }
  return mat;
}

std::string write_ft_matrix(const FtMatrix& t) {
  std::ostringstream out;
  out << "ftmat p " << t.algebra().p();
  if (t.algebra().is_scalar()) {
    out << " scalar";
  } else {
    out << " t " << t.algebra().algebra().t << " d " << t.algebra().algebra().d;
  }
  out << " m " << t.m() << "\n";
  for (size_t i = 0; i < t.m(); ++i) {
    for (size_t j = 0; j < t.m(); ++j) {
      if (j) out << ' ';
      out << t.at(i, j).a << ':' << t.at(i, j).b;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

template <typename T, typename Fn>
T read_from_file(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return fn(in);
}

}  // namespace

SympCode read_symplectic_code_file(const std::string& path) {
  return read_from_file<SympCode>(path, [](std::istream& in) { return read_symplectic_code(in); });
}

ClassicalCode read_classical_code_file(const std::string& path) {
  return read_from_file<ClassicalCode>(path,
                                       [](std::istream& in) { return read_classical_code(in); });
}

FtMatrix read_ft_matrix_file(const std::string& path) {
  return read_from_file<FtMatrix>(path, [](std::istream& in) { return read_ft_matrix(in); });
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

}  // namespace qsymp
