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

#ifndef DISCFUZZ_PROMPT_HPP_
#define DISCFUZZ_PROMPT_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace discfuzz {

// A word as it appeared in the text plus the lowercased form used for list
// membership and embedding lookup.
struct Token {
  std::string surface;
  std::string normalized;

  friend bool operator==(const Token&, const Token&) = default;
};

// Builds a token whose normalized form is the ASCII-lowercased surface.
Token MakeToken(std::string_view surface);

std::string NormalizeWord(std::string_view word);

// Ordered word sequence. Positions are stable: replacement never changes the
// length, so an index taken on the seed prompt addresses the same slot in every
// prompt derived from it.
class Prompt {
 public:
  Prompt() = default;
  Prompt(std::vector<Token> words, std::string origin);

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const Token& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<Token>& words() const { return words_; }
  const std::string& origin() const { return origin_; }

  // Surface forms joined by single spaces.
  std::string Text() const;
  std::vector<std::string> NormalizedWords() const;

  friend bool operator==(const Prompt& a, const Prompt& b) {
    return a.words_ == b.words_;
  }

 private:
  std::vector<Token> words_;
  std::string origin_;
};

// `index` addresses the seed prompt, not the current one.
struct Substitution {
  std::size_t index = 0;
  std::string replacement;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

// Splits on whitespace and strips leading/trailing ASCII punctuation from each
// token. Tokens that are pure punctuation vanish. Throws kEmptyPrompt if
// nothing survives. `origin` defaults to the input text.
Prompt Tokenize(std::string_view text);
Prompt Tokenize(std::string_view text, std::string origin);

// Returns a copy with the given slots replaced. Throws kIndexOutOfRange or
// kDuplicateIndex.
Prompt ReplaceAt(const Prompt& prompt, std::span<const Substitution> subs);

// Returns a copy without the word at `index` (p\w). Throws kIndexOutOfRange,
// or kWouldBeEmpty for single-word prompts.
Prompt RemoveWord(const Prompt& prompt, std::size_t index);

// One prompt per line, blank lines ignored. Returns raw lines; callers
// tokenize so a bad line can be reported per seed.
std::vector<std::string> LoadSeedCorpus(const std::filesystem::path& path);

}  // namespace discfuzz

#endif  // DISCFUZZ_PROMPT_HPP_
