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

#include <cmath>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "checkers.hpp"
#include "discfuzz/discfuzz.h"
#include "embeddings.hpp"
#include "error.hpp"
#include "fuzzer.hpp"
#include "prompt.hpp"
#include "report.hpp"
#include "word_list.hpp"

struct df_embeddings {
  std::shared_ptr<const discfuzz::EmbeddingStore> store;
};

struct df_word_list {
  std::vector<std::string> words;
  discfuzz::WordSet set;
};

struct df_checker {
  std::unique_ptr<discfuzz::Checker> checker;
};

struct df_generator {
  std::unique_ptr<discfuzz::Generator> generator;
};

struct df_seeds {
  std::vector<std::string> prompts;
};

struct df_campaign_result {
  discfuzz::CampaignResult result;
  std::string final_prompt;
  std::string json;
};

struct df_corpus_report {
  discfuzz::CorpusReport report;
  std::string jsonl;
};

namespace {

using discfuzz::Error;
using discfuzz::ErrorCode;

thread_local std::string last_error;

df_status Fail(df_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
df_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return DF_OK;
  } catch (const Error& e) {
    return Fail(static_cast<df_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DF_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DF_INTERNAL, e.what());
  } catch (...) {
    return Fail(DF_INTERNAL, "unknown error");
  }
}

#define DF_REQUIRE(cond, what)                                         \
  do {                                                                 \
    if (!(cond)) return Fail(DF_INVALID_ARGUMENT, what " is required"); \
  } while (0)

df_status BuildCampaignConfig(const df_engine_inputs* inputs,
                              const df_campaign_params* params,
                              discfuzz::CampaignConfig& config) {
  DF_REQUIRE(inputs != nullptr, "inputs");
  DF_REQUIRE(params != nullptr, "params");
  DF_REQUIRE(inputs->target != nullptr, "target checker");
  DF_REQUIRE(inputs->surrogate != nullptr, "surrogate checker");
  DF_REQUIRE(inputs->generator != nullptr, "generator");
  DF_REQUIRE(inputs->nsfw_list != nullptr, "NSFW word list");
  DF_REQUIRE(inputs->dir_lexicon != nullptr, "dirty-word lexicon");
  DF_REQUIRE(inputs->dis_lexicon != nullptr, "discrepant-word lexicon");
  DF_REQUIRE(inputs->embeddings != nullptr, "embeddings");
  config.budget = params->budget;
  config.k_discrepant = params->k_discrepant;
  config.candidate_fanout = params->candidate_fanout;
  config.target_threshold = params->target_threshold;
  config.surrogate_threshold = params->surrogate_threshold;
  config.mutation.dir_lexicon = inputs->dir_lexicon->words;
  config.mutation.dis_lexicon = inputs->dis_lexicon->words;
  config.mutation.select_probability = params->select_probability;
  config.mutation.rng_seed = params->rng_seed;
  return DF_OK;
}

}  // namespace

extern "C" {

const char* df_version(void) { return DF_VERSION_STRING; }

const char* df_status_name(df_status status) {
  // ErrorCodeName returns views over string literals.
  return discfuzz::ErrorCodeName(static_cast<ErrorCode>(status)).data();
}

const char* df_last_error(void) { return last_error.c_str(); }

df_status df_embeddings_load(const char* path, df_embeddings** out) {
  DF_REQUIRE(path != nullptr, "path");
  DF_REQUIRE(out != nullptr, "out");
  return Guard([&] {
    auto store = std::make_shared<const discfuzz::EmbeddingStore>(
        discfuzz::LoadEmbeddings(path));
    *out = new df_embeddings{std::move(store)};
  });
}

size_t df_embeddings_dim(const df_embeddings* store) {
  return store == nullptr ? 0 : store->store->dim();
}

size_t df_embeddings_size(const df_embeddings* store) {
  return store == nullptr ? 0 : store->store->size();
}

void df_embeddings_free(df_embeddings* store) { delete store; }

df_status df_cosine_similarity(const double* a, const double* b, size_t length,
                               double* out) {
  DF_REQUIRE(out != nullptr, "out");
  DF_REQUIRE(length == 0 || (a != nullptr && b != nullptr), "vector");
  return Guard([&] {
    *out = discfuzz::CosineSimilarity(std::span(a, length),
                                      std::span(b, length));
  });
}

df_status df_word_list_load(const char* path, df_word_list** out) {
  DF_REQUIRE(path != nullptr, "path");
  DF_REQUIRE(out != nullptr, "out");
  return Guard([&] {
    auto list = std::make_unique<df_word_list>();
    list->words = discfuzz::LoadWordList(path);
    list->set = discfuzz::WordSet(list->words);
    *out = list.release();
  });
}

df_status df_word_list_create(const char* const* words, size_t count,
                              df_word_list** out) {
  DF_REQUIRE(out != nullptr, "out");
  DF_REQUIRE(count == 0 || words != nullptr, "words");
  return Guard([&] {
    auto list = std::make_unique<df_word_list>();
    for (size_t i = 0; i < count; ++i) {
      if (words[i] == nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "null word");
      }
      std::string w = discfuzz::NormalizeWord(words[i]);
      if (w.empty() || list->set.Contains(w)) continue;
      list->set.Add(w);
      list->words.push_back(std::move(w));
    }
    *out = list.release();
  });
}

size_t df_word_list_size(const df_word_list* list) {
  return list == nullptr ? 0 : list->words.size();
}

void df_word_list_free(df_word_list* list) { delete list; }

df_status df_checker_create(const char* descriptor,
                            const df_embeddings* embeddings,
                            df_checker** out) {
  DF_REQUIRE(descriptor != nullptr, "descriptor");
  DF_REQUIRE(out != nullptr, "out");
  return Guard([&] {
    auto checker = discfuzz::MakeChecker(
        descriptor, embeddings == nullptr ? nullptr : embeddings->store);
    *out = new df_checker{std::move(checker)};
  });
}

df_status df_checker_score_text(const df_checker* checker, const char* prompt,
                                double* out) {
  DF_REQUIRE(checker != nullptr, "checker");
  DF_REQUIRE(prompt != nullptr, "prompt");
  DF_REQUIRE(out != nullptr, "out");
  return Guard([&] {
    *out = checker->checker
               ->Score(discfuzz::Tokenize(prompt),
                       discfuzz::GeneratedSample::None())
               .value();
  });
}

void df_checker_free(df_checker* checker) { delete checker; }

df_status df_generator_create(const char* descriptor,
                              const df_embeddings* embeddings,
                              df_generator** out) {
  DF_REQUIRE(descriptor != nullptr, "descriptor");
  DF_REQUIRE(out != nullptr, "out");
  return Guard([&] {
    auto generator = discfuzz::MakeGenerator(
        descriptor, embeddings == nullptr ? nullptr : embeddings->store);
    *out = new df_generator{std::move(generator)};
  });
}

void df_generator_free(df_generator* generator) { delete generator; }

df_status df_seeds_load(const char* path, df_seeds** out) {
  DF_REQUIRE(path != nullptr, "path");
  DF_REQUIRE(out != nullptr, "out");
  return Guard([&] {
    *out = new df_seeds{discfuzz::LoadSeedCorpus(path)};
  });
}

df_status df_seeds_create(const char* const* prompts, size_t count,
                          df_seeds** out) {
  DF_REQUIRE(out != nullptr, "out");
  DF_REQUIRE(count == 0 || prompts != nullptr, "prompts");
  return Guard([&] {
    auto seeds = std::make_unique<df_seeds>();
    for (size_t i = 0; i < count; ++i) {
      if (prompts[i] == nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "null prompt");
      }
      seeds->prompts.emplace_back(prompts[i]);
    }
    *out = seeds.release();
  });
}

size_t df_seeds_count(const df_seeds* seeds) {
  return seeds == nullptr ? 0 : seeds->prompts.size();
}

const char* df_seeds_at(const df_seeds* seeds, size_t index) {
  if (seeds == nullptr || index >= seeds->prompts.size()) return nullptr;
  return seeds->prompts[index].c_str();
}

void df_seeds_free(df_seeds* seeds) { delete seeds; }

void df_campaign_params_init(df_campaign_params* params) {
  if (params == nullptr) return;
  discfuzz::CampaignConfig defaults;
  params->budget = defaults.budget;
  params->k_discrepant = defaults.k_discrepant;
  params->candidate_fanout = defaults.candidate_fanout;
  params->target_threshold = defaults.target_threshold;
  params->surrogate_threshold = defaults.surrogate_threshold;
  params->select_probability = defaults.mutation.select_probability;
  params->rng_seed = defaults.mutation.rng_seed;
}

df_status df_campaign_run(const char* seed_prompt,
                          const df_engine_inputs* inputs,
                          const df_campaign_params* params,
                          df_campaign_result** out) {
  DF_REQUIRE(seed_prompt != nullptr, "seed prompt");
  DF_REQUIRE(out != nullptr, "out");
  discfuzz::CampaignConfig config;
  if (df_status s = BuildCampaignConfig(inputs, params, config); s != DF_OK) {
    return s;
  }
  return Guard([&] {
    auto handle = std::make_unique<df_campaign_result>();
    handle->result = discfuzz::RunCampaign(
        discfuzz::Tokenize(seed_prompt), *inputs->target->checker,
        *inputs->surrogate->checker, *inputs->generator->generator,
        inputs->nsfw_list->set, *inputs->embeddings->store, config);
    handle->final_prompt = handle->result.final_prompt.Text();
    handle->json = discfuzz::CampaignResultJson(handle->result).dump();
    *out = handle.release();
  });
}

int df_campaign_result_found(const df_campaign_result* result) {
  return result != nullptr &&
         result->result.status == discfuzz::CampaignStatus::kAdversarialFound;
}

const char* df_campaign_result_final_prompt(const df_campaign_result* result) {
  return result == nullptr ? nullptr : result->final_prompt.c_str();
}

size_t df_campaign_result_iterations(const df_campaign_result* result) {
  return result == nullptr ? 0 : result->result.iterations_used;
}

uint64_t df_campaign_result_checker_queries(const df_campaign_result* result) {
  return result == nullptr ? 0 : result->result.ledger.checker_queries();
}

uint64_t df_campaign_result_generator_queries(
    const df_campaign_result* result) {
  return result == nullptr ? 0 : result->result.ledger.generator_queries;
}

double df_campaign_result_wall_time(const df_campaign_result* result) {
  return result == nullptr ? 0.0 : result->result.wall_time_s;
}

const char* df_campaign_result_json(const df_campaign_result* result) {
  return result == nullptr ? nullptr : result->json.c_str();
}

void df_campaign_result_free(df_campaign_result* result) { delete result; }

df_status df_corpus_run(const df_seeds* seeds, const df_engine_inputs* inputs,
                        const df_campaign_params* params, uint64_t global_seed,
                        size_t workers, df_corpus_report** out) {
  DF_REQUIRE(seeds != nullptr, "seeds");
  DF_REQUIRE(out != nullptr, "out");
  discfuzz::CampaignConfig config;
  if (df_status s = BuildCampaignConfig(inputs, params, config); s != DF_OK) {
    return s;
  }
  return Guard([&] {
    discfuzz::CorpusBackends backends{
        *inputs->target->checker, *inputs->surrogate->checker,
        *inputs->generator->generator, inputs->nsfw_list->set,
        *inputs->embeddings->store};
    auto handle = std::make_unique<df_corpus_report>();
    handle->report = discfuzz::RunCorpus(seeds->prompts, backends, config,
                                         global_seed, workers);
    handle->jsonl = discfuzz::CorpusReportToJsonl(handle->report);
    *out = handle.release();
  });
}

size_t df_corpus_report_seed_count(const df_corpus_report* report) {
  return report == nullptr ? 0 : report->report.seeds.size();
}

size_t df_corpus_report_found_count(const df_corpus_report* report) {
  if (report == nullptr) return 0;
  size_t found = 0;
  for (const auto& seed : report->report.seeds) found += seed.found() ? 1 : 0;
  return found;
}

double df_corpus_report_bypass_rate(const df_corpus_report* report) {
  return report == nullptr ? 0.0 : report->report.bypass_rate;
}

double df_corpus_report_mean_queries_success(const df_corpus_report* report) {
  if (report == nullptr || !report->report.mean_queries_success) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return *report->report.mean_queries_success;
}

double df_corpus_report_mean_time_success(const df_corpus_report* report) {
  if (report == nullptr || !report->report.mean_time_success) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return *report->report.mean_time_success;
}

const char* df_corpus_report_jsonl(const df_corpus_report* report) {
  return report == nullptr ? nullptr : report->jsonl.c_str();
}

df_status df_corpus_report_write(const df_corpus_report* report,
                                 const char* path) {
  DF_REQUIRE(report != nullptr, "report");
  DF_REQUIRE(path != nullptr, "path");
  return Guard([&] { discfuzz::WriteCorpusReport(report->report, path); });
}

void df_corpus_report_free(df_corpus_report* report) { delete report; }

}  // extern "C"
