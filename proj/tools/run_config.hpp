// Copyright 2026 The discfuzz Authors
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

#ifndef DISCFUZZ_TOOLS_RUN_CONFIG_HPP_
#define DISCFUZZ_TOOLS_RUN_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace discfuzz::cli {

struct RunConfig {
  std::string seeds_path;
  std::string nsfw_list_path;
  std::string dir_lexicon_path;
  std::string dis_lexicon_path;
  std::string embeddings_path;

  std::string target_spec;
  std::string surrogate_spec;
  std::string generator_spec = "null";

  std::size_t budget = 60;
  std::size_t k = 1;
  std::size_t n = 1;
  double threshold = 0.5;
  double select_prob = 0.5;

  std::string output_path;
  std::size_t workers = 1;
  std::uint64_t global_seed = 0;
};

enum class ConfigErrorKind {
  kMissingRequired,
  kUnknownBackendKind,
  kFileNotFound,
  kInvalidValue,
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ConfigErrorKind kind() const { return kind_; }

 private:
  ConfigErrorKind kind_;
};

// Reads flags and, with --config, a flat JSON object keyed by flag names
// (without the leading dashes). Flags win over the file; unset values take
// the defaults above. Returns nullopt after printing help for --help.
// Throws ConfigError.
std::optional<RunConfig> ParseConfig(const std::vector<std::string>& args,
                                     std::ostream& help_out);

// Checks required fields, backend kinds and that referenced files exist.
void ValidateRunConfig(const RunConfig& config);

}  // namespace discfuzz::cli

#endif  // DISCFUZZ_TOOLS_RUN_CONFIG_HPP_
