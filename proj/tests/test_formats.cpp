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

#include <sstream>

#include "qsymp/formats.hpp"
#include "qsymp/quadring.hpp"
#include "testutil.hpp"

namespace qsymp {
namespace {

using testutil::Rng;

TEST(Formats, SymplecticRoundTrip) {
  Rng rng(109);
  for (uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 10; ++trial) {
      SympCode c = testutil::random_symp_code(rng, f, 1 + rng() % 4, 4);
      std::string text = write_symplectic_code(c);
      std::istringstream in(text);
      SympCode back = read_symplectic_code(in);
      EXPECT_EQ(back, c);
      EXPECT_EQ(write_symplectic_code(back), text);  // canonical, byte-stable
    }
  }
}

TEST(Formats, ClassicalRoundTrip) {
  Rng rng(113);
  PrimeField f(3);
  for (int trial = 0; trial < 10; ++trial) {
    ClassicalCode c = testutil::random_classical(rng, f, 2 + rng() % 4, 3);
    std::string text = write_classical_code(c);
    std::istringstream in(text);
    ClassicalCode back = read_classical_code(in);
    EXPECT_EQ(back, c);
    EXPECT_EQ(write_classical_code(back), text);
  }
}

TEST(Formats, FtMatrixRoundTrip) {
  PrimeField f2(2);
  FtAlgebra gf4 = FtAlgebra::two_dim(classify(1, 1, f2));
  FtMatrix t = FtMatrix::from_entries(gf4, 2, {{1, 0}, {0, 1}, {1, 1}, {0, 0}});
  std::string text = write_ft_matrix(t);
  std::istringstream in(text);
  FtMatrix back = read_ft_matrix(in);
  EXPECT_EQ(back, t);
  EXPECT_EQ(write_ft_matrix(back), text);

  FtMatrix scal = FtMatrix::identity(FtAlgebra::scalars(PrimeField(5)), 3);
  std::string stext = write_ft_matrix(scal);
  EXPECT_NE(stext.find("scalar"), std::string::npos);
  std::istringstream sin(stext);
  EXPECT_EQ(read_ft_matrix(sin), scal);
}

void expect_parse_error(const std::string& text, size_t line,
                        bool classical = false) {
  std::istringstream in(text);
  try {
    if (classical) {
      read_classical_code(in);
    } else {
      read_symplectic_code(in);
    }
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

TEST(Formats, ParseErrorsCarryLineNumbers) {
  expect_parse_error("classical\np 2\nn 2\ndim 1\n1 0\n", 1);  // wrong magic
  expect_parse_error("symplectic\np 4\nn 2\ndim 0\n", 2);      // composite modulus
  expect_parse_error("symplectic\np 2\nn x\ndim 0\n", 3);
  expect_parse_error("symplectic\np 2\nn 2\ndim 1\n1 0 1\n", 5);    // short row
  expect_parse_error("symplectic\np 2\nn 2\ndim 1\n1 0 1 2\n", 5);  // unreduced entry
  // Dependent generators are rejected with the final line.
  expect_parse_error("symplectic\np 2\nn 2\ndim 2\n1 0 1 0\n1 0 1 0\n", 6);
  expect_parse_error("classical\np 3\nn 2\ndim 1\n", 5, true);  // missing row

  std::istringstream bad_entry("ftmat p 2 t 1 d 1 m 1\n1;0\n");
  EXPECT_THROW(read_ft_matrix(bad_entry), ParseError);
  std::istringstream scalar_with_x("ftmat p 2 scalar m 1\n1:1\n");
  EXPECT_THROW(read_ft_matrix(scalar_with_x), ParseError);
  std::istringstream wide_row("ftmat p 2 scalar m 1\n1:0 1:0\n");
  EXPECT_THROW(read_ft_matrix(wide_row), ParseError);
}

TEST(Formats, QrCodeFileIsStable) {
  SympCode qr = reduce_mod_p(quadratic_residue_module(QuadRing(5)), PrimeField(2));
  std::string text = write_symplectic_code(qr);
  EXPECT_EQ(text.substr(0, 27), "symplectic\np 2\nn 5\ndim 4\n1 ");
  std::istringstream in(text);
  EXPECT_EQ(read_symplectic_code(in), qr);
}

}  // namespace
}  // namespace qsymp
