// Copyright 2026 The hfaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <memory>

#include "commands.hpp"
#include "hfaug/corpus.hpp"
#include "hfaug/error.hpp"
#include "hfaug/moore_lewis.hpp"
#include "hfaug/ngram_lm.hpp"
#include "hfaug/text.hpp"

namespace augment {
namespace {

namespace fs = std::filesystem;

struct FilterArgs {
  fs::path pool, in_domain, output;
  int order = 4;
  std::size_t min_count = 2;
  std::size_t select = 0;
  std::size_t general_sample = 400000;
  std::uint64_t seed = 17;
};

void run_filter(const FilterArgs& a) {
  const auto pool = hfaug::read_sentences(a.pool);
  const auto in_domain = hfaug::read_sentences(a.in_domain);
  const auto in_lm = hfaug::NGramLM::train(in_domain, a.order, a.min_count);
  // The contrast model sees a seeded sample of the pool itself.
  const auto sample = hfaug::sample_sentences(pool, a.general_sample, a.seed);
  const auto gen_lm = hfaug::NGramLM::train(sample, a.order, a.min_count);
  log("filter: in-domain LM on {} sentences, general LM on {} of {} pool sentences (order {})",
      in_domain.size(), sample.size(), pool.size(), a.order);

  const auto sel = hfaug::moore_lewis_select(pool, in_lm, gen_lm, a.select);
  if (sel.k_exceeded_pool) {
    log("filter: warning: --select {} exceeds the pool of {}; keeping everything", a.select, pool.size());
  }
  std::vector<std::string> lines;
  lines.reserve(sel.selected.size());
  for (auto i : sel.selected) lines.push_back(hfaug::join(pool[i]));
  hfaug::write_lines(a.output, lines);

  auto scores_path = a.output;
  scores_path += ".scores";
  auto scores = hfaug::open_output(scores_path);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    scores << fmt::format("{:.6f}\t{}\n", sel.scores[i], hfaug::join(pool[i]));
  }
  if (!scores) throw hfaug::Error(hfaug::ErrorCode::Io, "failed writing " + scores_path.string());
  log("filter: selected {} of {}", sel.selected.size(), pool.size());
}

}  // namespace

void register_filter_command(CLI::App& app) {
  auto a = std::make_shared<FilterArgs>();
  auto* cmd = app.add_subcommand("filter", "Select in-domain-like sentences by cross-entropy difference");
  cmd->add_option("--pool", a->pool, "General-domain sentences")->required();
  cmd->add_option("--in-domain", a->in_domain, "In-domain sentences for the in-domain LM")->required();
  cmd->add_option("--order", a->order, "n-gram order")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--min-count", a->min_count, "Frequency below which words become <unk>")
      ->capture_default_str();
  cmd->add_option("--select", a->select, "Number of sentences to keep")->required();
  cmd->add_option("--general-sample", a->general_sample, "Pool sentences used for the general LM")
      ->capture_default_str();
  cmd->add_option("--seed", a->seed, "Seed for the general LM sample")->capture_default_str();
  cmd->add_option("-o,--output", a->output, "Selected sentences; scores go to <output>.scores")
      ->required();
  cmd->callback([a] { run_filter(*a); });
}

}  // namespace augment
