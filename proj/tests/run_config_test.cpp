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

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "test_support.hpp"

namespace discfuzz::cli {
namespace {

class RunConfigTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (const char* name :
         {"seeds.txt", "nsfw.txt", "dir.txt", "dis.txt", "vec.txt", "t.txt",
          "s.txt"}) {
      dir_.Write(name, "x\n");
    }
  }
  std::string P(const std::string& name) const {
    return (dir_.path() / name).string();
  }
  std::vector<std::string> Required() const {
    return {"--seeds",      P("seeds.txt"),         "--nsfw-list",
            P("nsfw.txt"),  "--dir-lexicon",        P("dir.txt"),
            "--dis-lexicon", P("dis.txt"),          "--embeddings",
            P("vec.txt"),   "--target",             "wordlist:" + P("t.txt"),
            "--surrogate",  "wordlist:" + P("s.txt"), "--out",
            P("out.jsonl")};
  }
  ConfigErrorKind KindOf(const std::vector<std::string>& args) {
    std::ostringstream help;
    try {
      ParseConfig(args, help);
    } catch (const ConfigError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no ConfigError";
    return ConfigErrorKind::kInvalidValue;
  }

  discfuzz::testing::TempDir dir_;
};

TEST_F(RunConfigTest, Defaults) {
  std::ostringstream help;
  RunConfig c = *ParseConfig(Required(), help);
  EXPECT_EQ(c.budget, 60u);
  EXPECT_EQ(c.k, 1u);
  EXPECT_EQ(c.n, 1u);
  EXPECT_EQ(c.threshold, 0.5);
  EXPECT_EQ(c.select_prob, 0.5);
  EXPECT_EQ(c.generator_spec, "null");
  EXPECT_EQ(c.workers, 1u);
  EXPECT_EQ(c.global_seed, 0u);
}

TEST_F(RunConfigTest, FlagsOverrideConfigFile) {
  auto config = dir_.Write("c.json", R"({"k": 1, "budget": 9, "seed": 5})");
  std::vector<std::string> args = Required();
  args.insert(args.end(), {"--config", config.string(), "--k", "3"});
  std::ostringstream help;
  RunConfig c = *ParseConfig(args, help);
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(c.budget, 9u);
  EXPECT_EQ(c.global_seed, 5u);
}

TEST_F(RunConfigTest, ConfigFileAloneSuppliesEverything) {
  nlohmann::json j = {{"seeds", P("seeds.txt")},
                      {"nsfw-list", P("nsfw.txt")},
                      {"dir-lexicon", P("dir.txt")},
                      {"dis-lexicon", P("dis.txt")},
                      {"embeddings", P("vec.txt")},
                      {"target", "wordlist:" + P("t.txt")},
                      {"surrogate", "remote:http://localhost:8000"},
                      {"generator", "stub"},
                      {"threshold", 0.7},
                      {"out", P("o.jsonl")}};
  auto config = dir_.Write("c.json", j.dump());
  std::ostringstream help;
  RunConfig c = *ParseConfig(std::vector<std::string>{"--config", config.string()}, help);
  EXPECT_EQ(c.threshold, 0.7);
  EXPECT_EQ(c.generator_spec, "stub");
}

TEST_F(RunConfigTest, Errors) {
  std::vector<std::string> args = Required();
  args[11] = "magic:xyz";  // --target value
  EXPECT_EQ(KindOf(args), ConfigErrorKind::kUnknownBackendKind);

  args = Required();
  args.resize(args.size() - 2);  // drop --out
  EXPECT_EQ(KindOf(args), ConfigErrorKind::kMissingRequired);

  args = Required();
  args[1] = P("missing.txt");
  EXPECT_EQ(KindOf(args), ConfigErrorKind::kFileNotFound);

  args = Required();
  args.insert(args.end(), {"--threshold", "1.5"});
  EXPECT_EQ(KindOf(args), ConfigErrorKind::kInvalidValue);

  args = Required();
  args.insert(args.end(), {"--budget", "lots"});
  EXPECT_EQ(KindOf(args), ConfigErrorKind::kInvalidValue);

  args = Required();
  args.insert(args.end(), {"--generator", "dalle"});
  EXPECT_EQ(KindOf(args), ConfigErrorKind::kUnknownBackendKind);

  auto bad_key = dir_.Write("bad.json", R"({"bugdet": 3})");
  args = Required();
  args.insert(args.end(), {"--config", bad_key.string()});
  EXPECT_EQ(KindOf(args), ConfigErrorKind::kInvalidValue);

  auto bad_type = dir_.Write("type.json", R"({"budget": "3"})");
  args = Required();
  args.insert(args.end(), {"--config", bad_type.string()});
  EXPECT_EQ(KindOf(args), ConfigErrorKind::kInvalidValue);
}

TEST_F(RunConfigTest, HelpReturnsNothing) {
  std::ostringstream help;
  EXPECT_FALSE(ParseConfig(std::vector<std::string>{"--help"}, help).has_value());
  EXPECT_NE(help.str().find("--budget"), std::string::npos);
}

}  // namespace
}  // namespace discfuzz::cli
