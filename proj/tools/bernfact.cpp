// Copyright 2026 The bernfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bernfact: constants, tables and verification suites from the command line.
//
//   bernfact constant F_k --k 2 --digits 21
//   bernfact table b-constants --json
//   bernfact verify identities

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bernfact/cli.hpp"

namespace {

template <class T>
void copy_if_set(CLI::Option* opt, const T& value, std::optional<T>& target) {
  if (opt->count() > 0) target = value;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bernfact::cli;

  CLI::App app{"Constants and checks for products of factorials and Bernoulli numbers"};
  std::string command;
  std::string selector;
  int digits = kDefaultDigits;
  long k = 0, r = 0, n = 0, m = 0, prime_bound = 0;
  bool json = false;

  app.add_option("command", command, "constant | table | verify | ratio")->required();
  app.add_option("selector", selector, "what to compute, e.g. F_k, b-constants, identities")
      ->required();
  app.add_option("--digits", digits, "significant digits")->capture_default_str();
  CLI::Option* k_opt = app.add_option("--k", k, "k parameter");
  CLI::Option* r_opt = app.add_option("--r", r, "r parameter");
  CLI::Option* n_opt = app.add_option("--n", n, "n or N parameter");
  CLI::Option* m_opt = app.add_option("--m", m, "truncation index m");
  CLI::Option* p_opt = app.add_option("--prime-bound", prime_bound, "prime bound P");
  app.add_flag("--json", json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::optional<Command> parsed = parse_command(command);
  if (!parsed) {
    std::cerr << "usage error: unknown command '" << command << "'\n";
    return kExitUsage;
  }
  CommandRequest req;
  req.command = *parsed;
  req.selector = selector;
  req.digits = digits;
  copy_if_set(k_opt, k, req.k);
  copy_if_set(r_opt, r, req.r);
  copy_if_set(n_opt, n, req.n);
  copy_if_set(m_opt, m, req.m);
  copy_if_set(p_opt, prime_bound, req.prime_bound);
  req.format = json ? OutputFormat::structured : OutputFormat::text;
  return run(req, std::cout, std::cerr);
}
