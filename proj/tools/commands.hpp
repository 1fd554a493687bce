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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsymp/sympcode.hpp"

namespace qsymp::cli {

using Json = nlohmann::json;

struct Budgets {
  uint64_t budget = kDefaultBudget;  // enumeration word budget
  size_t cap = 4096;                 // dense state-space cap
  uint64_t seed = 1;                 // randomized search seed
  uint64_t trials = 4000;            // randomized search restarts
  uint32_t pprime_cap = 17;          // module prime cap (minor sets stay tractable)
};

/// Reports never carry wall-clock times; work is reported through
/// deterministic counters so identical inputs produce byte-identical
/// output.

Json cmd_qrcode(uint32_t pprime, uint32_t p, const std::string& out_path, const Budgets& b);
Json cmd_analyze(const std::string& code_path, const Budgets& b);
Json cmd_badprimes(uint32_t pprime, int d, const Budgets& b);
Json cmd_ftcheck(const std::string& mat_path, const std::string& code_path, const Budgets& b);
Json cmd_css(const std::string& c1_path, const std::string& c2_path,
             const std::string& out_path, const Budgets& b);
Json cmd_puncture(const std::string& code_path, const std::vector<uint32_t>& word,
                  const std::string& out_path, const std::string& out_shortened,
                  const Budgets& b);
Json cmd_statecheck(const std::string& code_path, std::optional<int> d_override,
                    const Budgets& b);

/// Randomized greedy growth of a maximal isotropic code with minimum
/// weight at least d; deterministic under a fixed seed. Returns nothing
/// when the trial budget runs out or the self-dual bound 2d <= n+2
/// already rules the target out.
std::optional<SympCode> search_selfdual(size_t n, int d, uint32_t p, uint64_t trials,
                                        uint64_t seed, uint64_t budget);

/// Wraps search_selfdual; empty optional means "not found".
std::optional<Json> cmd_search_selfdual(size_t n, int d, uint32_t p,
                                        const std::string& out_path, const Budgets& b);

/// One-line human summary of a report.
std::string summarize(const Json& report);

}  // namespace qsymp::cli
