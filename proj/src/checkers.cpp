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

#include "checkers.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "error.hpp"

namespace discfuzz {
namespace {

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// Mean of in-vocabulary token vectors; empty if no token has one.
Vector MeanEmbedding(const EmbeddingStore& store, const Prompt& prompt) {
  Vector sum;
  std::size_t count = 0;
  for (const Token& t : prompt.words()) {
    const Vector* v = store.Find(t.normalized);
    if (v == nullptr) continue;
    if (sum.empty()) sum.assign(v->size(), 0.0);
    for (std::size_t i = 0; i < v->size(); ++i) sum[i] += (*v)[i];
    ++count;
  }
  for (double& x : sum) x /= static_cast<double>(count);
  return sum;
}

std::pair<std::string_view, std::string_view> SplitDescriptor(
    std::string_view descriptor) {
  std::size_t colon = descriptor.find(':');
  if (colon == std::string_view::npos) return {descriptor, {}};
  return {descriptor.substr(0, colon), descriptor.substr(colon + 1)};
}

void RequireArgument(std::string_view kind, std::string_view arg) {
  if (arg.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "backend '" + std::string(kind) + "' needs an argument");
  }
}

void RequireStore(std::string_view kind,
                  const std::shared_ptr<const EmbeddingStore>& store) {
  if (store == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "backend '" + std::string(kind) + "' needs embeddings");
  }
}

}  // namespace

SafetyScore::SafetyScore(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kOutOfRangeScore,
                "safety score " + std::to_string(value) + " outside [0, 1]");
  }
}

GeneratedSample GeneratedSample::FeatureVector(Vector features) {
  GeneratedSample s;
  s.payload_ = std::move(features);
  return s;
}

GeneratedSample GeneratedSample::ImageBytes(std::string bytes) {
  GeneratedSample s;
  s.payload_ = std::move(bytes);
  return s;
}

SampleKind GeneratedSample::kind() const {
  switch (payload_.index()) {
    case 1: return SampleKind::kFeatureVector;
    case 2: return SampleKind::kImageBytes;
    default: return SampleKind::kNone;
  }
}

const Vector& GeneratedSample::features() const {
  if (const auto* v = std::get_if<Vector>(&payload_)) return *v;
  throw Error(ErrorCode::kIncompatibleSample, "sample is not a feature vector");
}

const std::string& GeneratedSample::bytes() const {
  if (const auto* b = std::get_if<std::string>(&payload_)) return *b;
  throw Error(ErrorCode::kIncompatibleSample, "sample is not image bytes");
}

SafetyScore ScoreMetered(const Checker& checker, CheckerRole role,
                         const Prompt& prompt, const GeneratedSample& sample,
                         QueryLedger& ledger) {
  if (role == CheckerRole::kTarget) {
    ++ledger.target_queries;
  } else {
    ++ledger.surrogate_queries;
  }
  return checker.Score(prompt, sample);
}

GeneratedSample GenerateMetered(const Generator& generator,
                                const Prompt& prompt, QueryLedger& ledger) {
  ++ledger.generator_queries;
  return generator.Generate(prompt);
}

const GeneratedSample& SampleCache::Get(const Prompt& prompt) {
  std::string key = prompt.Text();
  auto it = samples_.find(key);
  if (it != samples_.end()) return it->second;
  GeneratedSample sample = GenerateMetered(generator_, prompt, ledger_);
  return samples_.emplace(std::move(key), std::move(sample)).first->second;
}

SafetyScore WordListScore(const WordSet& list, const Prompt& prompt) {
  for (const Token& t : prompt.words()) {
    if (list.Contains(t.normalized)) return SafetyScore(1.0);
  }
  return SafetyScore(0.0);
}

SafetyScore WordListChecker::Score(const Prompt& prompt,
                                   const GeneratedSample& /*sample*/) const {
  return WordListScore(list_, prompt);
}

std::string WordListChecker::Describe() const {
  return "wordlist(" + std::to_string(list_.size()) + " words)";
}

LinearModel LoadLinearModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound,
                "cannot open linear model: " + path.string());
  }
  std::string dim_line, bias_line, weight_line;
  if (!std::getline(in, dim_line) || !std::getline(in, bias_line) ||
      !std::getline(in, weight_line)) {
    throw Error(ErrorCode::kParseError,
                path.string() + ": expected dim, bias and weight lines");
  }
  long long dim = 0;
  LinearModel model;
  {
    std::istringstream s(dim_line);
    if (!(s >> dim) || dim <= 0) {
      throw Error(ErrorCode::kParseError, path.string() + ":1: bad dimension");
    }
  }
  {
    std::istringstream s(bias_line);
    if (!(s >> model.bias) || !std::isfinite(model.bias)) {
      throw Error(ErrorCode::kParseError, path.string() + ":2: bad bias");
    }
  }
  std::istringstream s(weight_line);
  double w;
  while (s >> w) {
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::kParseError, path.string() + ":3: bad weight");
    }
    model.weights.push_back(w);
  }
  if (!s.eof()) {
    throw Error(ErrorCode::kParseError, path.string() + ":3: bad weight");
  }
  if (model.weights.size() != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::kDimensionMismatch,
                path.string() + ": declared dim " + std::to_string(dim) +
                    " but found " + std::to_string(model.weights.size()) +
                    " weights");
  }
  return model;
}

SafetyScore LinearEmbeddingScore(const LinearModel& model,
                                 const EmbeddingStore& store,
                                 const Prompt& prompt,
                                 const GeneratedSample& sample,
                                 LinearInput input) {
  Vector features;
  if (input == LinearInput::kPromptEmbedding) {
    if (!store.empty() && store.dim() != model.weights.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "linear weights have " +
                      std::to_string(model.weights.size()) +
                      " components, embeddings have " +
                      std::to_string(store.dim()));
    }
    features = MeanEmbedding(store, prompt);
    if (features.empty()) return SafetyScore(0.5);
  } else {
    features = sample.features();
    if (features.size() != model.weights.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "sample has " + std::to_string(features.size()) +
                      " features, linear weights have " +
                      std::to_string(model.weights.size()));
    }
  }
  double z = model.bias;
  for (std::size_t i = 0; i < features.size(); ++i) {
    z += features[i] * model.weights[i];
  }
  return SafetyScore(Sigmoid(z));
}

LinearChecker::LinearChecker(LinearModel model,
                             std::shared_ptr<const EmbeddingStore> store,
                             LinearInput input)
    : model_(std::move(model)), store_(std::move(store)), input_(input) {
  if (store_ == nullptr) store_ = std::make_shared<EmbeddingStore>();
  if (input_ == LinearInput::kPromptEmbedding && !store_->empty() &&
      store_->dim() != model_.weights.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "linear weights have " + std::to_string(model_.weights.size()) +
                    " components, embeddings have " +
                    std::to_string(store_->dim()));
  }
}

SafetyScore LinearChecker::Score(const Prompt& prompt,
                                 const GeneratedSample& sample) const {
  return LinearEmbeddingScore(model_, *store_, prompt, sample, input_);
}

Modality LinearChecker::modality() const {
  return input_ == LinearInput::kPromptEmbedding ? Modality::kText
                                                 : Modality::kImage;
}

std::string LinearChecker::Describe() const {
  return input_ == LinearInput::kPromptEmbedding ? "linear" : "linear-sample";
}

GeneratedSample NullGenerator::Generate(const Prompt& /*prompt*/) const {
  return GeneratedSample::None();
}

StubGenerator::StubGenerator(std::shared_ptr<const EmbeddingStore> store)
    : store_(std::move(store)) {
  if (store_ == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "stub generator needs embeddings");
  }
}

GeneratedSample StubGenerator::Generate(const Prompt& prompt) const {
  Vector mean = MeanEmbedding(*store_, prompt);
  if (mean.empty()) mean.assign(store_->dim(), 0.0);
  return GeneratedSample::FeatureVector(std::move(mean));
}

std::unique_ptr<Checker> MakeChecker(
    std::string_view descriptor, std::shared_ptr<const EmbeddingStore> store) {
  auto [kind, arg] = SplitDescriptor(descriptor);
  if (kind == "wordlist") {
    RequireArgument(kind, arg);
    std::vector<std::string> words = LoadWordList(std::string(arg));
    return std::make_unique<WordListChecker>(WordSet(words));
  }
  if (kind == "linear" || kind == "linear-sample") {
    RequireArgument(kind, arg);
    LinearInput input = kind == "linear" ? LinearInput::kPromptEmbedding
                                         : LinearInput::kSampleFeatures;
    if (input == LinearInput::kPromptEmbedding) RequireStore(kind, store);
    return std::make_unique<LinearChecker>(
        LoadLinearModel(std::string(arg)), std::move(store), input);
  }
  if (kind == "remote") {
    RequireArgument(kind, arg);
    return std::make_unique<RemoteChecker>(std::string(arg));
  }
  throw Error(ErrorCode::kUnknownBackendKind,
              "unknown checker kind '" + std::string(kind) + "'");
}

std::unique_ptr<Generator> MakeGenerator(
    std::string_view descriptor, std::shared_ptr<const EmbeddingStore> store) {
  auto [kind, arg] = SplitDescriptor(descriptor);
  if (kind == "null") return std::make_unique<NullGenerator>();
  if (kind == "stub") {
    RequireStore(kind, store);
    return std::make_unique<StubGenerator>(std::move(store));
  }
  if (kind == "remote") {
    RequireArgument(kind, arg);
    std::string url(arg);
    std::int64_t seed = 0;
    if (std::size_t hash = url.find("#seed="); hash != std::string::npos) {
      try {
        std::size_t used = 0;
        std::string digits = url.substr(hash + 6);
        seed = std::stoll(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(digits);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidArgument,
                    "bad generator seed in '" + url + "'");
      }
      url.resize(hash);
    }
    return std::make_unique<RemoteGenerator>(std::move(url), seed);
  }
  throw Error(ErrorCode::kUnknownBackendKind,
              "unknown generator kind '" + std::string(kind) + "'");
}

}  // namespace discfuzz
