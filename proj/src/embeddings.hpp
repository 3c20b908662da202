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

#ifndef DISCFUZZ_EMBEDDINGS_HPP_
#define DISCFUZZ_EMBEDDINGS_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace discfuzz {

using Vector = std::vector<double>;

// Static word vectors, immutable after load. Keys are stored exactly as they
// appear in the file; callers look words up by their normalized form.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;

  // Throws kInconsistentDimension on a length mismatch, kInvalidArgument on
  // empty or non-finite vectors. Duplicate words keep the first vector.
  void Insert(std::string word, Vector vec);

  // 0 until the first insert.
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return table_.size(); }
  bool empty() const { return table_.empty(); }

  bool Contains(std::string_view word) const;
  // nullptr when absent.
  const Vector* Find(std::string_view word) const;

 private:
  std::size_t dim_ = 0;
  std::unordered_map<std::string, Vector> table_;
};

// Text vector file: "word v1 ... vd" per line, no header. Throws
// kFileNotFound, kParseError (with line number) or kInconsistentDimension.
EmbeddingStore LoadEmbeddings(const std::filesystem::path& path);

// dot(a,b) / (|a||b|), clamped to [-1, 1]. Throws kDimensionMismatch or
// kZeroVector.
double CosineSimilarity(std::span<const double> a, std::span<const double> b);

enum class SimilarityOrder { kMostSimilar, kLeastSimilar };

// Lexicon words with embeddings ordered by similarity to `word` (descending
// for kMostSimilar, ascending for kLeastSimilar), ties broken by the
// lexicographically smaller word. At most `limit` entries; duplicates in the
// lexicon are collapsed. Throws kEmptyStore, kUnknownWord if `word` has no
// vector, kNoEmbeddable if no lexicon word has one.
std::vector<std::string> RankBySimilarity(const EmbeddingStore& store,
                                          std::string_view word,
                                          std::span<const std::string> lexicon,
                                          SimilarityOrder order,
                                          std::size_t limit);

std::string MostSimilar(const EmbeddingStore& store, std::string_view word,
                        std::span<const std::string> lexicon);
std::string LeastSimilar(const EmbeddingStore& store, std::string_view word,
                         std::span<const std::string> lexicon);

}  // namespace discfuzz

#endif  // DISCFUZZ_EMBEDDINGS_HPP_
