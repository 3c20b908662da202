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

#include "prompt.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <utility>

#include "error.hpp"

namespace discfuzz {
namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiPunct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

std::string_view StripPunct(std::string_view word) {
  while (!word.empty() && IsAsciiPunct(word.front())) word.remove_prefix(1);
  while (!word.empty() && IsAsciiPunct(word.back())) word.remove_suffix(1);
  return word;
}

}  // namespace

std::string NormalizeWord(std::string_view word) {
  std::string out(word);
  // Bytes >= 0x80 (UTF-8 continuation/lead bytes) are left untouched.
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

Token MakeToken(std::string_view surface) {
  return Token{std::string(surface), NormalizeWord(surface)};
}

Prompt::Prompt(std::vector<Token> words, std::string origin)
    : words_(std::move(words)), origin_(std::move(origin)) {}

std::string Prompt::Text() const {
  std::string out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words_[i].surface;
  }
  return out;
}

std::vector<std::string> Prompt::NormalizedWords() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (const Token& t : words_) out.push_back(t.normalized);
  return out;
}

Prompt Tokenize(std::string_view text) {
  return Tokenize(text, std::string(text));
}

Prompt Tokenize(std::string_view text, std::string origin) {
  std::vector<Token> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    std::string_view word = StripPunct(text.substr(start, i - start));
    if (!word.empty()) words.push_back(MakeToken(word));
  }
  if (words.empty()) {
    throw Error(ErrorCode::kEmptyPrompt, "prompt has no word tokens");
  }
  return Prompt(std::move(words), std::move(origin));
}

Prompt ReplaceAt(const Prompt& prompt, std::span<const Substitution> subs) {
  std::vector<Token> words = prompt.words();
  std::set<std::size_t> seen;
  for (const Substitution& s : subs) {
    if (s.index >= words.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "substitution index " + std::to_string(s.index) +
                      " out of range for prompt of length " +
                      std::to_string(words.size()));
    }
    if (!seen.insert(s.index).second) {
      throw Error(ErrorCode::kDuplicateIndex,
                  "duplicate substitution index " + std::to_string(s.index));
    }
    words[s.index] = MakeToken(s.replacement);
  }
  return Prompt(std::move(words), prompt.origin());
}

Prompt RemoveWord(const Prompt& prompt, std::size_t index) {
  if (index >= prompt.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "remove index " + std::to_string(index) + " out of range");
  }
  if (prompt.size() < 2) {
    throw Error(ErrorCode::kWouldBeEmpty,
                "removing the only word would empty the prompt");
  }
  std::vector<Token> words = prompt.words();
  words.erase(words.begin() + static_cast<std::ptrdiff_t>(index));
  return Prompt(std::move(words), prompt.origin());
}

std::vector<std::string> LoadSeedCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound,
                "cannot open seed corpus: " + path.string());
  }
  std::vector<std::string> seeds;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::all_of(line.begin(), line.end(), IsAsciiSpace)) continue;
    seeds.push_back(line);
  }
  return seeds;
}

}  // namespace discfuzz
