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

// discfuzz command-line driver. Talks to the engine only through the C API.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "discfuzz/discfuzz.h"
#include "run_config.hpp"

namespace {

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using Embeddings = Handle<df_embeddings, df_embeddings_free>;
using WordList = Handle<df_word_list, df_word_list_free>;
using Checker = Handle<df_checker, df_checker_free>;
using GeneratorHandle = Handle<df_generator, df_generator_free>;
using Seeds = Handle<df_seeds, df_seeds_free>;
using Report = Handle<df_corpus_report, df_corpus_report_free>;

bool Check(df_status status, const std::string& what) {
  if (status == DF_OK) return true;
  std::cerr << "discfuzz: " << what << ": " << df_status_name(status) << ": "
            << df_last_error() << "\n";
  return false;
}

template <typename H, typename Fn>
bool Open(H& handle, const std::string& what, Fn&& create) {
  typename H::pointer raw = nullptr;
  if (!Check(create(&raw), what)) return false;
  handle.reset(raw);
  return true;
}

std::string FormatMean(double value) {
  if (std::isnan(value)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

int Run(const discfuzz::cli::RunConfig& cfg) {
  Embeddings embeddings;
  WordList nsfw, dir_lexicon, dis_lexicon;
  Checker target, surrogate;
  GeneratorHandle generator;
  Seeds seeds;

  bool ok =
      Open(embeddings, "loading embeddings",
           [&](df_embeddings** out) {
             return df_embeddings_load(cfg.embeddings_path.c_str(), out);
           }) &&
      Open(nsfw, "loading NSFW word list",
           [&](df_word_list** out) {
             return df_word_list_load(cfg.nsfw_list_path.c_str(), out);
           }) &&
      Open(dir_lexicon, "loading dirty-word lexicon",
           [&](df_word_list** out) {
             return df_word_list_load(cfg.dir_lexicon_path.c_str(), out);
           }) &&
      Open(dis_lexicon, "loading discrepant-word lexicon",
           [&](df_word_list** out) {
             return df_word_list_load(cfg.dis_lexicon_path.c_str(), out);
           }) &&
      Open(target, "creating target checker",
           [&](df_checker** out) {
             return df_checker_create(cfg.target_spec.c_str(),
                                      embeddings.get(), out);
           }) &&
      Open(surrogate, "creating surrogate checker",
           [&](df_checker** out) {
             return df_checker_create(cfg.surrogate_spec.c_str(),
                                      embeddings.get(), out);
           }) &&
      Open(generator, "creating generator",
           [&](df_generator** out) {
             return df_generator_create(cfg.generator_spec.c_str(),
                                        embeddings.get(), out);
           }) &&
      Open(seeds, "loading seed corpus", [&](df_seeds** out) {
        return df_seeds_load(cfg.seeds_path.c_str(), out);
      });
  if (!ok) return 1;

  df_campaign_params params;
  df_campaign_params_init(&params);
  params.budget = cfg.budget;
  params.k_discrepant = cfg.k;
  params.candidate_fanout = cfg.n;
  params.target_threshold = cfg.threshold;
  params.surrogate_threshold = cfg.threshold;
  params.select_probability = cfg.select_prob;

  df_engine_inputs inputs{target.get(),      surrogate.get(),
                          generator.get(),   nsfw.get(),
                          dir_lexicon.get(), dis_lexicon.get(),
                          embeddings.get()};

  Report report;
  if (!Open(report, "running corpus", [&](df_corpus_report** out) {
        return df_corpus_run(seeds.get(), &inputs, &params, cfg.global_seed,
                             cfg.workers, out);
      })) {
    return 1;
  }
  if (!Check(df_corpus_report_write(report.get(), cfg.output_path.c_str()),
             "writing report")) {
    return 1;
  }

  std::cout << "bypass_rate=" << FormatMean(df_corpus_report_bypass_rate(report.get()))
            << " found=" << df_corpus_report_found_count(report.get()) << "/"
            << df_corpus_report_seed_count(report.get())
            << " mean_queries_success="
            << FormatMean(df_corpus_report_mean_queries_success(report.get()))
            << " mean_time_success_s="
            << FormatMean(df_corpus_report_mean_time_success(report.get()))
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    std::optional<discfuzz::cli::RunConfig> cfg =
        discfuzz::cli::ParseConfig(args, std::cout);
    if (!cfg.has_value()) return 0;
    return Run(*cfg);
  } catch (const discfuzz::cli::ConfigError& e) {
    std::cerr << "discfuzz: " << e.what() << "\n";
    return 2;
  }
}
