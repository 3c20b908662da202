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

#ifndef DISCFUZZ_WORD_LIST_HPP_
#define DISCFUZZ_WORD_LIST_HPP_

#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace discfuzz {

// Normalized word set used for dirtiness and word-list checkers.
class WordSet {
 public:
  WordSet() = default;
  WordSet(std::initializer_list<std::string_view> words);
  explicit WordSet(std::span<const std::string> words);

  void Add(std::string_view word);
  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

 private:
  std::unordered_set<std::string> words_;
};

// One word per line; '#' starts a comment line; blank lines are skipped.
// Words are normalized and de-duplicated, first occurrence order is kept.
// Throws kFileNotFound.
std::vector<std::string> LoadWordList(const std::filesystem::path& path);

}  // namespace discfuzz

#endif  // DISCFUZZ_WORD_LIST_HPP_
