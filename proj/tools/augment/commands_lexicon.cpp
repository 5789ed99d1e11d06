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
#include <set>
#include <unordered_set>

#include "commands.hpp"
#include "hfaug/corpus.hpp"
#include "hfaug/embedding.hpp"
#include "hfaug/error.hpp"
#include "hfaug/ibm1.hpp"
#include "hfaug/lexicon.hpp"
#include "hfaug/text.hpp"

namespace augment {
namespace {

namespace fs = std::filesystem;

void write_table(const fs::path& path, const hfaug::TranslationTable& table) {
  auto out = hfaug::open_output(path);
  table.write_tsv(out);
  if (!out) throw hfaug::Error(hfaug::ErrorCode::Io, "failed writing " + path.string());
}

struct AlignArgs {
  fs::path parallel, output, reverse_output, dict;
  int iters = 5;
  unsigned threads = 1;
  std::size_t min_count = 2;
};

void log_likelihoods(const char* label, const hfaug::Ibm1Model& m) {
  for (std::size_t k = 0; k < m.log_likelihood.size(); ++k) {
    log("align: {} iteration {} log-likelihood {:.6f}", label, k, m.log_likelihood[k]);
  }
}

void run_align(const AlignArgs& a) {
  const auto corpus = hfaug::read_parallel_tsv(a.parallel);
  const hfaug::Ibm1Options opts{a.iters, a.threads};
  const auto forward = hfaug::train_ibm1(corpus, opts);
  log_likelihoods("t(source|target)", forward);
  write_table(a.output, forward.table);
  if (a.reverse_output.empty() && a.dict.empty()) return;

  const auto backward = hfaug::train_ibm1(hfaug::swap_sides(corpus), opts);
  log_likelihoods("t(target|source)", backward);
  if (!a.reverse_output.empty()) write_table(a.reverse_output, backward.table);
  if (!a.dict.empty()) {
    const auto links = hfaug::intersected_alignments(corpus, forward.table, backward.table);
    const auto dict = hfaug::extract_dictionary(corpus, links, a.min_count);
    hfaug::write_dictionary(a.dict, dict);
    log("align: {} dictionary entries at min count {}", dict.size(), a.min_count);
  }
}

struct InduceArgs {
  fs::path src_emb, tgt_emb, vocab, exclude, output;
  std::string method = "csls";
  std::size_t k = 10;
};

void run_induce(const InduceArgs& a) {
  hfaug::InduceOptions opts;
  if (a.method == "csls") opts.method = hfaug::SimilarityMethod::Csls;
  else if (a.method == "cosine") opts.method = hfaug::SimilarityMethod::Cosine;
  else throw hfaug::Error(hfaug::ErrorCode::InvalidArgument, "unknown method '" + a.method + "'");
  opts.csls_k = a.k;

  const auto candidates = hfaug::read_embeddings(a.src_emb);
  const auto queries = hfaug::read_embeddings(a.tgt_emb);
  hfaug::Dictionary skip;
  if (!a.exclude.empty()) skip = hfaug::read_dictionary(a.exclude);

  std::vector<std::string> vocab;
  std::unordered_set<std::string> seen;
  auto consider = [&](const std::string& w) {
    if (!skip.contains(w) && seen.insert(w).second) vocab.push_back(w);
  };
  if (a.vocab.empty()) {
    for (const auto& w : queries.words()) consider(w);
  } else {
    for (const auto& line : hfaug::read_lines(a.vocab))
      for (const auto& w : hfaug::split_whitespace(line)) consider(w);
  }
  const auto dict = hfaug::induce_embedding_dict(candidates, queries, vocab, opts);
  hfaug::write_dictionary(a.output, dict);
  log("induce-dict: {} of {} query words translated ({}, k={})", dict.size(), vocab.size(), a.method, a.k);
}

struct TranslateArgs {
  fs::path sentences, align_dict, emb_dict, output;
  std::string markers = "<sbj>,<obj>";
};

void run_translate(const TranslateArgs& a) {
  hfaug::Dictionary align, emb;
  if (!a.align_dict.empty()) align = hfaug::read_dictionary(a.align_dict);
  if (!a.emb_dict.empty()) emb = hfaug::read_dictionary(a.emb_dict);
  const hfaug::CascadeLexicon lexicon(std::move(align), std::move(emb));
  std::set<std::string, std::less<>> markers;
  for (auto& m : split_list(a.markers)) markers.insert(std::move(m));

  std::size_t tiers[3] = {0, 0, 0};
  std::vector<std::string> out_lines;
  for (const auto& line : hfaug::read_lines(a.sentences)) {
    const auto tokens = hfaug::split_whitespace(line);
    for (const auto& t : tokens) {
      if (!markers.contains(t)) ++tiers[static_cast<int>(lexicon.tier_of(t))];
    }
    out_lines.push_back(hfaug::join(hfaug::translate_sentence(tokens, lexicon, markers)));
  }
  hfaug::write_lines(a.output, out_lines);
  log("translate: {} sentences; tokens by tier: alignment {}, embedding {}, copied {}", out_lines.size(),
      tiers[0], tiers[1], tiers[2]);
}

}  // namespace

void register_lexicon_commands(CLI::App& app) {
  {
    auto a = std::make_shared<AlignArgs>();
    auto* cmd = app.add_subcommand("align", "Train IBM Model 1 and extract an alignment dictionary");
    cmd->add_option("--parallel", a->parallel, "Parallel TSV (source<TAB>target)")->required();
    cmd->add_option("--iters", a->iters, "EM iterations")->capture_default_str()->check(CLI::NonNegativeNumber);
    cmd->add_option("--threads", a->threads, "E-step worker threads")->capture_default_str();
    cmd->add_option("-o,--output", a->output, "t(source|target) table TSV")->required();
    cmd->add_option("--reverse-output", a->reverse_output, "t(target|source) table TSV");
    cmd->add_option("--dict", a->dict, "Dictionary from intersected alignments (target -> source)");
    cmd->add_option("--min-count", a->min_count, "Minimum link count for dictionary entries")
        ->capture_default_str();
    cmd->callback([a] { run_align(*a); });
  }
  {
    auto a = std::make_shared<InduceArgs>();
    auto* cmd = app.add_subcommand("induce-dict", "Induce a dictionary from aligned embedding spaces");
    cmd->add_option("--src-emb", a->src_emb, "Candidate (source language) embeddings")->required();
    cmd->add_option("--tgt-emb", a->tgt_emb, "Query (target language) embeddings")->required();
    cmd->add_option("--method", a->method, "csls or cosine")->capture_default_str();
    cmd->add_option("--k", a->k, "CSLS neighbourhood size")->capture_default_str();
    cmd->add_option("--vocab", a->vocab, "Query words, whitespace separated (default: all)");
    cmd->add_option("--exclude", a->exclude, "Dictionary whose keys are not queried");
    cmd->add_option("-o,--output", a->output, "Output dictionary TSV")->required();
    cmd->callback([a] { run_induce(*a); });
  }
  {
    auto a = std::make_shared<TranslateArgs>();
    auto* cmd = app.add_subcommand("translate", "Translate sentences word by word through the cascade");
    cmd->add_option("--sentences", a->sentences, "One tokenized sentence per line")->required();
    cmd->add_option("--align-dict", a->align_dict, "Alignment-derived dictionary (first tier)");
    cmd->add_option("--emb-dict", a->emb_dict, "Embedding-induced dictionary (second tier)");
    cmd->add_option("--markers", a->markers, "Comma-separated tokens passed through")->capture_default_str();
    cmd->add_option("-o,--output", a->output, "Output sentences")->required();
    cmd->callback([a] { run_translate(*a); });
  }
}

}  // namespace augment
