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

#ifndef DISCFUZZ_SENSITIVITY_HPP_
#define DISCFUZZ_SENSITIVITY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "evaluator.hpp"
#include "prompt.hpp"
#include "word_list.hpp"

namespace discfuzz {

// Word-level sensitivity of a seed prompt, computed once per campaign.
struct SensitivityReport {
  // Seed indices whose word is on the NSFW list, ascending.
  std::vector<std::size_t> dirty_indices;
  // Dc for every non-dirty index. -inf marks a word whose evaluation failed
  // in the backend; such words are never selected.
  std::map<std::size_t, double> discrepancy;
  // Up to K non-dirty indices by descending Dc, ties by ascending index.
  std::vector<std::size_t> top_k_discrepant;
  // Queries charged while building the report.
  std::uint64_t checker_queries = 0;
  std::uint64_t generator_queries = 0;
};

// 1 if the normalized word is on the list, else 0. Never queries a checker.
int Dirtiness(std::string_view word, const WordSet& nsfw_list);

// Dc(w) = SC_r(p\w, I) - SC_t(p\w, I) for the word at `index`. Two checker
// queries; backend errors propagate.
double Discrepancy(const Prompt& prompt, std::size_t index,
                   Evaluator& evaluator);

// Builds the dirty set and the top-K discrepant set. Only non-dirty words are
// scored (2 queries each). Throws kWouldBeEmpty for single-word prompts and
// kInvalidArgument if k == 0.
SensitivityReport AnalyzeSensitivity(const Prompt& seed,
                                     const WordSet& nsfw_list, std::size_t k,
                                     Evaluator& evaluator);

}  // namespace discfuzz

#endif  // DISCFUZZ_SENSITIVITY_HPP_
