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

#include "word_list.hpp"

#include <fstream>

#include "error.hpp"
#include "prompt.hpp"

namespace discfuzz {
namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

WordSet::WordSet(std::initializer_list<std::string_view> words) {
  for (std::string_view w : words) Add(w);
}

WordSet::WordSet(std::span<const std::string> words) {
  for (const std::string& w : words) Add(w);
}

void WordSet::Add(std::string_view word) { words_.insert(NormalizeWord(word)); }

bool WordSet::Contains(std::string_view word) const {
  return words_.count(NormalizeWord(word)) > 0;
}

std::vector<std::string> LoadWordList(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound,
                "cannot open word list: " + path.string());
  }
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view word = Trim(line);
    if (word.empty() || word.front() == '#') continue;
    std::string normalized = NormalizeWord(word);
    if (seen.insert(normalized).second) words.push_back(std::move(normalized));
  }
  return words;
}

}  // namespace discfuzz
