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

#include <iosfwd>
#include <string>

#include "qsymp/classical.hpp"
#include "qsymp/errors.hpp"
#include "qsymp/ftops.hpp"
#include "qsymp/sympcode.hpp"

namespace qsymp {

// Symplectic code files:
//   symplectic
//   p <p>
//   n <n>
//   dim <dim>
//   <dim rows of 2n integers, ordered a_1 b_1 ... a_n b_n>
//
// Classical code files swap the header keyword for `classical` and carry
// n-column rows. Block matrices use a single header line
//   ftmat p <p> t <t> d <d> m <m>    (or `ftmat p <p> scalar m <m>`)
// followed by m rows of m entries `a:b`.
//
// Writers emit codes in canonical form, so a written file parses back to
// an equal object byte for byte.

SympCode read_symplectic_code(std::istream& in);
SympCode read_symplectic_code_file(const std::string& path);
std::string write_symplectic_code(const SympCode& c);

ClassicalCode read_classical_code(std::istream& in);
ClassicalCode read_classical_code_file(const std::string& path);
std::string write_classical_code(const ClassicalCode& c);

FtMatrix read_ft_matrix(std::istream& in);
FtMatrix read_ft_matrix_file(const std::string& path);
std::string write_ft_matrix(const FtMatrix& t);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace qsymp
