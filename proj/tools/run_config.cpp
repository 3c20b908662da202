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

#include "run_config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string_view>

namespace discfuzz::cli {
namespace {

using nlohmann::json;

// Flag values before merging with the config file.
struct FlagValues {
  std::optional<std::string> config;
  std::optional<std::string> seeds, nsfw_list, dir_lexicon, dis_lexicon,
      embeddings, target, surrogate, generator, out;
  std::optional<std::size_t> budget, k, n, workers;
  std::optional<double> threshold, select_prob;
  std::optional<std::uint64_t> seed;
};

constexpr std::array<std::string_view, 16> kConfigKeys = {
    "seeds",     "nsfw-list", "dir-lexicon", "dis-lexicon",
    "embeddings", "target",   "surrogate",   "generator",
    "budget",    "k",         "n",           "threshold",
    "select-prob", "workers", "seed",        "out"};

json LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(ConfigErrorKind::kFileNotFound,
                      "cannot open config file: " + path);
  }
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ConfigError(ConfigErrorKind::kInvalidValue,
                      path + ": config must be a flat JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) ==
        kConfigKeys.end()) {
      throw ConfigError(ConfigErrorKind::kInvalidValue,
                        path + ": unknown config key '" + key + "'");
    }
  }
  return doc;
}

template <typename T>
void Merge(T& target, const std::optional<T>& flag, const json& file,
           const char* key) {
  if (flag.has_value()) {
    target = *flag;
    return;
  }
  auto it = file.find(key);
  if (it == file.end() || it->is_null()) return;
  bool ok;
  if constexpr (std::is_same_v<T, std::string>) {
    ok = it->is_string();
  } else if constexpr (std::is_floating_point_v<T>) {
    ok = it->is_number();
  } else {
    ok = it->is_number_unsigned();
  }
  if (!ok) {
    throw ConfigError(ConfigErrorKind::kInvalidValue,
                      std::string("config key '") + key +
                          "' has the wrong type");
  }
  target = it->template get<T>();
}

void RequireField(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw ConfigError(ConfigErrorKind::kMissingRequired,
                      std::string("missing required option --") + flag);
  }
}

void RequireFile(const std::string& path, const char* what) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw ConfigError(ConfigErrorKind::kFileNotFound,
                      std::string(what) + " not found: " + path);
  }
}

void ValidateBackend(const std::string& spec, bool generator) {
  std::size_t colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (generator) {
    if (kind == "null" || kind == "stub") return;
  } else if (kind == "wordlist" || kind == "linear" ||
             kind == "linear-sample") {
    if (arg.empty()) {
      throw ConfigError(ConfigErrorKind::kInvalidValue,
                        "backend '" + spec + "' needs a file path");
    }
    RequireFile(arg, "backend file");
    return;
  }
  if (kind == "remote") {
    if (arg.empty()) {
      throw ConfigError(ConfigErrorKind::kInvalidValue,
                        "backend '" + spec + "' needs a URL");
    }
    return;
  }
  throw ConfigError(ConfigErrorKind::kUnknownBackendKind,
                    "unknown backend kind '" + kind + "' in '" + spec + "'");
}

}  // namespace

std::optional<RunConfig> ParseConfig(const std::vector<std::string>& args,
                                     std::ostream& help_out) {
  CLI::App app{"Differential fuzzer for text-to-image safety checkers",
               "discfuzz"};
  FlagValues f;
  app.add_option("--config", f.config, "flat JSON config file");
  app.add_option("--seeds", f.seeds, "seed prompts, one per line");
  app.add_option("--nsfw-list", f.nsfw_list, "dirty-word list");
  app.add_option("--dir-lexicon", f.dir_lexicon,
                 "substitutes for dirty words");
  app.add_option("--dis-lexicon", f.dis_lexicon,
                 "substitutes for discrepant words");
  app.add_option("--embeddings", f.embeddings, "word vector text file");
  app.add_option("--target", f.target,
                 "target checker: wordlist:PATH|linear:PATH|"
                 "linear-sample:PATH|remote:URL");
  app.add_option("--surrogate", f.surrogate, "surrogate checker (as --target)");
  app.add_option("--generator", f.generator,
                 "generator: null|stub|remote:URL (default null)");
  app.add_option("--budget", f.budget, "iterations per seed (default 60)");
  app.add_option("--k", f.k, "discrepant words mutated (default 1)");
  app.add_option("--n", f.n, "candidates kept per mutation (default 1)");
  app.add_option("--threshold", f.threshold,
                 "decision threshold for both checkers (default 0.5)");
  app.add_option("--select-prob", f.select_prob,
                 "per-word selection probability (default 0.5)");
  app.add_option("--workers", f.workers, "concurrent campaigns (default 1)");
  app.add_option("--seed", f.seed, "global RNG seed (default 0)");
  app.add_option("--out", f.out, "JSONL report path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(ConfigErrorKind::kInvalidValue, e.what());
  }

  json file = json::object();
  if (f.config.has_value()) file = LoadConfigFile(*f.config);

  RunConfig config;
  Merge(config.seeds_path, f.seeds, file, "seeds");
  Merge(config.nsfw_list_path, f.nsfw_list, file, "nsfw-list");
  Merge(config.dir_lexicon_path, f.dir_lexicon, file, "dir-lexicon");
  Merge(config.dis_lexicon_path, f.dis_lexicon, file, "dis-lexicon");
  Merge(config.embeddings_path, f.embeddings, file, "embeddings");
  Merge(config.target_spec, f.target, file, "target");
  Merge(config.surrogate_spec, f.surrogate, file, "surrogate");
  Merge(config.generator_spec, f.generator, file, "generator");
  Merge(config.budget, f.budget, file, "budget");
  Merge(config.k, f.k, file, "k");
  Merge(config.n, f.n, file, "n");
  Merge(config.threshold, f.threshold, file, "threshold");
  Merge(config.select_prob, f.select_prob, file, "select-prob");
  Merge(config.workers, f.workers, file, "workers");
  Merge(config.global_seed, f.seed, file, "seed");
  Merge(config.output_path, f.out, file, "out");

  ValidateRunConfig(config);
  return config;
}

void ValidateRunConfig(const RunConfig& config) {
  RequireField(config.seeds_path, "seeds");
  RequireField(config.nsfw_list_path, "nsfw-list");
  RequireField(config.dir_lexicon_path, "dir-lexicon");
  RequireField(config.dis_lexicon_path, "dis-lexicon");
  RequireField(config.embeddings_path, "embeddings");
  RequireField(config.target_spec, "target");
  RequireField(config.surrogate_spec, "surrogate");
  RequireField(config.output_path, "out");

  ValidateBackend(config.target_spec, /*generator=*/false);
  ValidateBackend(config.surrogate_spec, /*generator=*/false);
  ValidateBackend(config.generator_spec, /*generator=*/true);

  RequireFile(config.seeds_path, "seed corpus");
  RequireFile(config.nsfw_list_path, "NSFW word list");
  RequireFile(config.dir_lexicon_path, "dirty-word lexicon");
  RequireFile(config.dis_lexicon_path, "discrepant-word lexicon");
  RequireFile(config.embeddings_path, "embeddings");

  if (config.budget < 1 || config.k < 1 || config.n < 1 ||
      config.workers < 1) {
    throw ConfigError(ConfigErrorKind::kInvalidValue,
                      "budget, k, n and workers must be at least 1");
  }
  if (!(config.threshold > 0.0 && config.threshold < 1.0)) {
    throw ConfigError(ConfigErrorKind::kInvalidValue,
                      "threshold must be in (0, 1)");
  }
  if (!(config.select_prob > 0.0 && config.select_prob <= 1.0)) {
    throw ConfigError(ConfigErrorKind::kInvalidValue,
                      "select-prob must be in (0, 1]");
  }
}

}  // namespace discfuzz::cli
