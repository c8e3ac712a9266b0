// Copyright 2026 The bosonlab Authors
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

#ifndef BOSONLAB_CLI_HPP_
#define BOSONLAB_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace bosonlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAssertion = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything one invocation needs. The JSON form is flat and mirrors the
// command line: "subcommand", "seed", "threads", "out", "format", and one
// key per subcommand flag (without the leading dashes).
struct RunConfig {
  std::string subcommand;
  std::uint64_t seed = 1;
  std::optional<int> threads;
  std::string out;              // empty: standard output
  std::string format = "json";  // json or text; collision-ratio writes CSV
  nlohmann::json flags = nlohmann::json::object();

  bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

std::vector<std::string> subcommand_names();

// Parses argv (argv[0] is the program name). A --config file is read first
// and explicit flags override its values. Throws UsageError; --help is
// reported through the returned flag.
struct ParseResult {
  RunConfig config;
  bool help_requested = false;
  std::string help_text;
};
ParseResult parse_command_line(int argc, const char* const* argv);

// Runs a parsed configuration. Returns kExitPass or kExitAssertion; input
// errors propagate as exceptions.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse + run with exceptions mapped to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bosonlab::cli

#endif  // BOSONLAB_CLI_HPP_
