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

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qsymp/errors.hpp"

namespace {

using qsymp::cli::Budgets;
using qsymp::cli::Json;

// Exit codes: 0 success, 1 domain/usage error, 2 resource or budget
// exhaustion, 3 target not found.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitResource = 2;
constexpr int kExitNotFound = 3;

void emit(const Json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << qsymp::cli::summarize(report) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and verify nonbinary stabilizer codes built on symplectic geometry"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json/--budget/... appear after the subcommand

  Budgets budgets;
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "print the full JSON report");
  app.add_option("--budget", budgets.budget, "enumeration word budget");
  app.add_option("--cap", budgets.cap, "dense state-space dimension cap");
  app.add_option("--seed", budgets.seed, "seed for randomized search");
  app.add_option("--pprime-cap", budgets.pprime_cap, "largest allowed module prime");
  app.add_option("--out", out_path, "write the constructed code file here");

  uint32_t pprime = 5, p = 2, search_p = 2;
  int d_target = 3;
  size_t search_n = 6;
  std::string code_path, mat_path, c1_path, c2_path;
  std::string word_str, out_shortened;
  std::optional<int> d_override;
  int d_opt = -1;

  auto* qrcode = app.add_subcommand("qrcode", "quadratic-residue code reduced mod p");
  qrcode->add_option("--pprime", pprime, "module prime, 1 mod 4")->required();
  qrcode->add_option("--p", p, "reduction prime")->required();

  auto* analyze = app.add_subcommand("analyze", "parameters and enumerators of a code file");
  analyze->add_option("code", code_path, "symplectic code file")->required();

  auto* badprimes = app.add_subcommand("badprimes", "primes where the reduced dual drops below d");
  badprimes->add_option("--pprime", pprime, "module prime, 1 mod 4")->required();
  badprimes->add_option("--d", d_target, "target dual distance")->required();

  auto* ftcheck = app.add_subcommand("ftcheck", "unitarity/monomiality of a block matrix and invariance of a code power");
  ftcheck->add_option("matrix", mat_path, "block matrix file")->required();
  ftcheck->add_option("code", code_path, "symplectic code file")->required();

  auto* css = app.add_subcommand("css", "build the split-linear code of two classical codes");
  css->add_option("c1", c1_path, "first classical code file")->required();
  css->add_option("c2", c2_path, "second classical code file")->required();

  auto* puncture = app.add_subcommand("puncture", "puncture code and optional shortening");
  puncture->add_option("code", code_path, "symplectic code file")->required();
  puncture->add_option("--word", word_str, "puncture-code word, n space-separated entries");
  puncture->add_option("--out-shortened", out_shortened, "write the shortened code here");

  auto* statecheck = app.add_subcommand("statecheck", "projector rank and error-correction conditions");
  statecheck->add_option("code", code_path, "symplectic code file")->required();
  statecheck->add_option("--d", d_opt, "override the checked distance");

  auto* search = app.add_subcommand("search-selfdual", "randomized search for a maximal isotropic code of minimum weight d");
  search->add_option("--n", search_n, "length")->required();
  search->add_option("--d", d_target, "minimum weight target")->required();
  search->add_option("--p", search_p, "field prime")->required();
  search->add_option("--trials", budgets.trials, "restart budget");

  CLI11_PARSE(app, argc, argv);

  try {
    Json report;
    if (app.got_subcommand(qrcode)) {
      report = qsymp::cli::cmd_qrcode(pprime, p, out_path, budgets);
    } else if (app.got_subcommand(analyze)) {
      report = qsymp::cli::cmd_analyze(code_path, budgets);
    } else if (app.got_subcommand(badprimes)) {
      report = qsymp::cli::cmd_badprimes(pprime, d_target, budgets);
    } else if (app.got_subcommand(ftcheck)) {
      report = qsymp::cli::cmd_ftcheck(mat_path, code_path, budgets);
    } else if (app.got_subcommand(css)) {
      report = qsymp::cli::cmd_css(c1_path, c2_path, out_path, budgets);
    } else if (app.got_subcommand(puncture)) {
      std::vector<uint32_t> word;
      if (!word_str.empty()) {
        std::istringstream ws(word_str);
        std::string tok;
        while (ws >> tok) word.push_back(static_cast<uint32_t>(std::stoul(tok)));
      }
      report = qsymp::cli::cmd_puncture(code_path, word, out_path, out_shortened, budgets);
    } else if (app.got_subcommand(statecheck)) {
      if (d_opt >= 0) d_override = d_opt;
      report = qsymp::cli::cmd_statecheck(code_path, d_override, budgets);
    } else if (app.got_subcommand(search)) {
      auto result = qsymp::cli::cmd_search_selfdual(search_n, d_target, search_p, out_path, budgets);
      if (!result) {
        std::cerr << "not found within " << budgets.trials << " trials\n";
        return kExitNotFound;
      }
      report = *result;
    }
    emit(report, as_json);
    return kExitOk;
  } catch (const qsymp::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const qsymp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const qsymp::IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
