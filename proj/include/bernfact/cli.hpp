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

#ifndef BERNFACT_CLI_HPP_
#define BERNFACT_CLI_HPP_

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernfact::cli {

enum class Command { constant, table, verify, ratio };

enum class OutputFormat { text, structured };

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

constexpr int kDefaultDigits = 20;
constexpr int kMaxDigits = 2000;

struct CommandRequest {
  Command command = Command::constant;
  std::string selector;
  int digits = kDefaultDigits;
  std::optional<long> k;
  std::optional<long> r;
  std::optional<long> n;
  std::optional<long> m;
  std::optional<long> prime_bound;
  OutputFormat format = OutputFormat::text;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::optional<Command> parse_command(const std::string& s);

/// Accepted selectors per command.
const std::vector<std::string>& selectors(Command c);

/// Throws UsageError on an unknown selector, digits outside [1, kMaxDigits]
/// or parameters out of range. Runs before any computation.
void validate(const CommandRequest& request);

/// Renders the result to `out` and diagnostics to `err`. Returns kExitPass
/// when every check passes, kExitCheckFailure on a failed check or a value
/// that cannot be certified, kExitUsage on an invalid request.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

}  // namespace bernfact::cli

#endif  // BERNFACT_CLI_HPP_
