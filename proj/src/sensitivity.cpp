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

#include "sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace discfuzz {

int Dirtiness(std::string_view word, const WordSet& nsfw_list) {
  return nsfw_list.Contains(word) ? 1 : 0;
}

double Discrepancy(const Prompt& prompt, std::size_t index,
                   Evaluator& evaluator) {
  Prompt reduced = RemoveWord(prompt, index);
  return evaluator.Evaluate(reduced).fitness();
}

SensitivityReport AnalyzeSensitivity(const Prompt& seed,
                                     const WordSet& nsfw_list, std::size_t k,
                                     Evaluator& evaluator) {
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "K must be at least 1");
  }
  if (seed.size() < 2) {
    throw Error(ErrorCode::kWouldBeEmpty,
                "sensitivity analysis needs at least two words");
  }
  const QueryLedger before = evaluator.ledger();
  SensitivityReport report;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (Dirtiness(seed[i].normalized, nsfw_list) == 1) {
      report.dirty_indices.push_back(i);
      continue;
    }
    double dc;
    try {
      dc = Discrepancy(seed, i, evaluator);
    } catch (const Error& e) {
      if (!IsBackendError(e.code())) throw;
      dc = -std::numeric_limits<double>::infinity();
    }
    report.discrepancy.emplace(i, dc);
  }

  std::vector<std::pair<double, std::size_t>> ranked;
  for (const auto& [index, dc] : report.discrepancy) {
    if (std::isfinite(dc)) ranked.emplace_back(dc, index);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::size_t n = std::min(k, ranked.size());
  for (std::size_t i = 0; i < n; ++i) {
    report.top_k_discrepant.push_back(ranked[i].second);
  }

  const QueryLedger& after = evaluator.ledger();
  report.checker_queries = after.checker_queries() - before.checker_queries();
  report.generator_queries =
      after.generator_queries - before.generator_queries;
  return report;
}

}  // namespace discfuzz
