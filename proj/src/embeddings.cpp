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

#include "embeddings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <utility>

#include "error.hpp"

namespace discfuzz {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool ParseDouble(std::string_view text, double& out) {
  // from_chars rejects a leading '+', which some exporters emit.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

double Norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

}  // namespace

void EmbeddingStore::Insert(std::string word, Vector vec) {
  if (vec.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty vector for '" + word + "'");
  }
  for (double x : vec) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite component for '" + word + "'");
    }
  }
  if (dim_ == 0) {
    dim_ = vec.size();
  } else if (vec.size() != dim_) {
    throw Error(ErrorCode::kInconsistentDimension,
                "vector for '" + word + "' has " + std::to_string(vec.size()) +
                    " components, expected " + std::to_string(dim_));
  }
  table_.try_emplace(std::move(word), std::move(vec));
}

bool EmbeddingStore::Contains(std::string_view word) const {
  return Find(word) != nullptr;
}

const Vector* EmbeddingStore::Find(std::string_view word) const {
  auto it = table_.find(std::string(word));
  return it == table_.end() ? nullptr : &it->second;
}

EmbeddingStore LoadEmbeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound,
                "cannot open embeddings: " + path.string());
  }
  EmbeddingStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string_view> fields = SplitFields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2) {
      throw Error(ErrorCode::kParseError,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected a word followed by components");
    }
    Vector vec(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!ParseDouble(fields[i], vec[i - 1]) || !std::isfinite(vec[i - 1])) {
        throw Error(ErrorCode::kParseError,
                    path.string() + ":" + std::to_string(line_no) +
                        ": bad component '" + std::string(fields[i]) + "'");
      }
    }
    if (store.dim() != 0 && vec.size() != store.dim()) {
      throw Error(ErrorCode::kInconsistentDimension,
                  path.string() + ":" + std::to_string(line_no) + ": " +
                      std::to_string(vec.size()) + " components, expected " +
                      std::to_string(store.dim()));
    }
    store.Insert(std::string(fields[0]), std::move(vec));
  }
  return store;
}

double CosineSimilarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cosine similarity of vectors with lengths " +
                    std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  double na = Norm(a);
  double nb = Norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw Error(ErrorCode::kZeroVector, "cosine similarity of a zero vector");
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::clamp(dot / (na * nb), -1.0, 1.0);
}

std::vector<std::string> RankBySimilarity(const EmbeddingStore& store,
                                          std::string_view word,
                                          std::span<const std::string> lexicon,
                                          SimilarityOrder order,
                                          std::size_t limit) {
  if (store.empty()) {
    throw Error(ErrorCode::kEmptyStore, "embedding store is empty");
  }
  const Vector* query = store.Find(word);
  if (query == nullptr) {
    throw Error(ErrorCode::kUnknownWord,
                "no embedding for '" + std::string(word) + "'");
  }
  std::set<std::string_view> seen;
  std::vector<std::pair<double, std::string_view>> scored;
  for (const std::string& candidate : lexicon) {
    const Vector* vec = store.Find(candidate);
    if (vec == nullptr || !seen.insert(candidate).second) continue;
    double sim;
    try {
      sim = CosineSimilarity(*query, *vec);
    } catch (const Error& e) {
      // Zero vectors have no direction; treat them like missing entries.
      if (e.code() == ErrorCode::kZeroVector) continue;
      throw;
    }
    scored.emplace_back(sim, candidate);
  }
  if (scored.empty()) {
    throw Error(ErrorCode::kNoEmbeddable,
                "no lexicon word has an embedding");
  }
  auto better = [order](const auto& a, const auto& b) {
    if (a.first != b.first) {
      return order == SimilarityOrder::kMostSimilar ? a.first > b.first
                                                    : a.first < b.first;
    }
    return a.second < b.second;
  };
  std::size_t n = std::min(limit, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<long>(n),
                    scored.end(), better);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(scored[i].second);
  return out;
}

std::string MostSimilar(const EmbeddingStore& store, std::string_view word,
                        std::span<const std::string> lexicon) {
  return RankBySimilarity(store, word, lexicon, SimilarityOrder::kMostSimilar,
                          1)
      .front();
}

std::string LeastSimilar(const EmbeddingStore& store, std::string_view word,
                         std::span<const std::string> lexicon) {
  return RankBySimilarity(store, word, lexicon, SimilarityOrder::kLeastSimilar,
                          1)
      .front();
}

}  // namespace discfuzz
