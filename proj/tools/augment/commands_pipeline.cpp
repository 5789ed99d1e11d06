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

#include <chrono>
#include <fstream>
#include <memory>

#include "commands.hpp"
#include "hfaug/corpus.hpp"
#include "hfaug/error.hpp"
#include "hfaug/head_rules.hpp"
#include "hfaug/pipeline.hpp"
#include "hfaug/reorder.hpp"
#include "hfaug/text.hpp"
#include "hfaug/treebank.hpp"

namespace augment {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ReorderArgs {
  fs::path trees, head_rules, output;
  ReorderFlags flags;
};

void run_reorder(const ReorderArgs& a) {
  const auto start = Clock::now();
  const auto cfg = a.flags.config();
  const auto rules = hfaug::HeadRuleTable::load(a.head_rules);
  auto in = hfaug::open_input(a.trees);
  auto out = hfaug::open_output(a.output);
  std::vector<hfaug::SkipEntry> skipped;
  std::size_t written = 0;
  hfaug::reorder_stream(
      in, cfg, rules,
      [&](hfaug::ReorderedSentence&& s) {
        out << hfaug::join(s.tokens) << '\n';
        ++written;
      },
      [&](hfaug::SkipEntry&& e) { skipped.push_back(std::move(e)); });
  if (!out) throw hfaug::Error(hfaug::ErrorCode::Io, "failed writing " + a.output.string());
  write_skip_report(a.output, skipped);
  log("reorder: {} sentences written, {} skipped, {:.2f}s", written, skipped.size(), seconds_since(start));
}

struct BuildPseudoArgs {
  fs::path trees, head_rules, align_dict, emb_dict, output;
  bool lowercase = false;
  ReorderFlags flags;
};

void run_build_pseudo(const BuildPseudoArgs& a) {
  const auto start = Clock::now();
  hfaug::PseudoOptions opts;
  opts.reorder = a.flags.config();
  opts.lowercase = a.lowercase;
  const auto rules = hfaug::HeadRuleTable::load(a.head_rules);
  hfaug::Dictionary align, emb;
  if (!a.align_dict.empty()) align = hfaug::read_dictionary(a.align_dict);
  if (!a.emb_dict.empty()) emb = hfaug::read_dictionary(a.emb_dict);
  const hfaug::CascadeLexicon lexicon(std::move(align), std::move(emb));
  auto in = hfaug::open_input(a.trees);
  const auto pseudo = hfaug::build_pseudo_corpus(in, rules, opts, lexicon);
  hfaug::write_parallel_tsv(a.output, pseudo.corpus);
  write_skip_report(a.output, pseudo.skipped);
  log("build-pseudo: {} pairs written, {} skipped, lexicon {} alignment + {} embedding entries, {:.2f}s",
      pseudo.corpus.size(), pseudo.skipped.size(), lexicon.alignment_tier().size(),
      lexicon.embedding_tier().size(), seconds_since(start));
}

struct AssembleArgs {
  fs::path real, pseudo, output;
  std::size_t dup = 5;
  std::uint64_t seed = 17;
};

void run_assemble(const AssembleArgs& a) {
  const auto real = hfaug::read_parallel_tsv(a.real, hfaug::Provenance::Real);
  hfaug::ParallelCorpus pseudo;
  if (!a.pseudo.empty()) pseudo = hfaug::read_parallel_tsv(a.pseudo, hfaug::Provenance::Pseudo);
  const auto train = hfaug::assemble_training_set(real, pseudo, a.dup, a.seed);
  hfaug::write_parallel_tsv(a.output, train);
  log("assemble: {} = {} x {} real + {} pseudo pairs", train.size(), a.dup, real.size(), pseudo.size());
}

struct CapVocabArgs {
  fs::path corpus, output, emit_vocabs;
  std::size_t src_max = 10000, tgt_max = 10000;
  std::string unk = "<unk>";
  std::string protect = "<sbj>,<obj>";
};

void run_cap_vocab(const CapVocabArgs& a) {
  const auto corpus = hfaug::read_parallel_tsv(a.corpus);
  hfaug::VocabSpec src{a.src_max, a.unk, {}};
  for (auto& t : split_list(a.protect)) src.protected_tokens.insert(std::move(t));
  const hfaug::VocabSpec tgt{a.tgt_max, a.unk, {}};
  const auto capped = hfaug::cap_vocabulary(corpus, src, tgt);
  hfaug::write_parallel_tsv(a.output, capped.corpus);
  if (!a.emit_vocabs.empty()) {
    fs::create_directories(a.emit_vocabs);
    hfaug::write_lines(a.emit_vocabs / "vocab.src", capped.source_vocab);
    hfaug::write_lines(a.emit_vocabs / "vocab.tgt", capped.target_vocab);
  }
  log("cap-vocab: {} pairs, source vocabulary {}, target vocabulary {}", capped.corpus.size(),
      capped.source_vocab.size(), capped.target_vocab.size());
}

struct SubsampleArgs {
  fs::path corpus, output, remainder, trees, remainder_trees;
  std::size_t n = 0;
  std::uint64_t seed = 17;
};

void run_subsample(const SubsampleArgs& a) {
  const auto corpus = hfaug::read_parallel_tsv(a.corpus);
  const auto sub = hfaug::subsample_parallel(corpus, a.n, a.seed);
  hfaug::write_parallel_tsv(a.output, sub.selected);
  if (!a.remainder.empty()) hfaug::write_sentences(a.remainder, sub.remainder);
  if (!a.trees.empty()) {
    if (a.remainder_trees.empty()) {
      throw hfaug::Error(hfaug::ErrorCode::InvalidArgument, "--trees requires --remainder-trees");
    }
    // The tree file is line-aligned with the corpus, one tree per pair.
    auto in = hfaug::open_input(a.trees);
    std::vector<std::string> trees;
    std::size_t line_no = 0;
    hfaug::TreeLine tl;
    while (hfaug::next_tree_line(in, line_no, tl)) trees.push_back(std::move(tl.text));
    if (trees.size() != corpus.size()) {
      throw hfaug::Error(hfaug::ErrorCode::InvalidArgument,
                         a.trees.string() + " has " + std::to_string(trees.size()) +
                             " trees but the corpus has " + std::to_string(corpus.size()) + " pairs");
    }
    std::vector<std::string> kept;
    kept.reserve(sub.remainder_indices.size());
    for (auto i : sub.remainder_indices) kept.push_back(trees[i]);
    hfaug::write_lines(a.remainder_trees, kept);
  }
  log("subsample: {} selected, {} remaining", sub.selected.size(), sub.remainder.size());
}

}  // namespace

void register_pipeline_commands(CLI::App& app) {
  {
    auto a = std::make_shared<ReorderArgs>();
    auto* cmd = app.add_subcommand("reorder", "Head-finalize bracketed trees into reordered sentences");
    cmd->add_option("--trees", a->trees, "Tree file, one bracketed tree per line")->required();
    cmd->add_option("--head-rules", a->head_rules, "Head rule table")->required();
    cmd->add_option("-o,--output", a->output, "Output sentences")->required();
    a->flags.add_to(*cmd);
    cmd->callback([a] { run_reorder(*a); });
  }
  {
    auto a = std::make_shared<BuildPseudoArgs>();
    auto* cmd = app.add_subcommand("build-pseudo", "Reorder and translate trees into pseudo pairs");
    cmd->add_option("--trees", a->trees, "Tree file, one bracketed tree per line")->required();
    cmd->add_option("--head-rules", a->head_rules, "Head rule table")->required();
    cmd->add_option("--align-dict", a->align_dict, "Alignment-derived dictionary (first tier)");
    cmd->add_option("--emb-dict", a->emb_dict, "Embedding-induced dictionary (second tier)");
    cmd->add_flag("--lowercase", a->lowercase, "Lowercase tree leaves first");
    cmd->add_option("-o,--output", a->output, "Output pseudo-parallel TSV")->required();
    a->flags.add_to(*cmd);
    cmd->callback([a] { run_build_pseudo(*a); });
  }
  {
    auto a = std::make_shared<AssembleArgs>();
    auto* cmd = app.add_subcommand("assemble", "Mix duplicated real pairs with pseudo pairs");
    cmd->add_option("--real", a->real, "Real parallel TSV")->required();
    cmd->add_option("--pseudo", a->pseudo, "Pseudo-parallel TSV");
    cmd->add_option("--dup", a->dup, "Copies of each real pair")->capture_default_str();
    cmd->add_option("--seed", a->seed, "Shuffle seed")->capture_default_str();
    cmd->add_option("-o,--output", a->output, "Output training TSV")->required();
    cmd->callback([a] { run_assemble(*a); });
  }
  {
    auto a = std::make_shared<CapVocabArgs>();
    auto* cmd = app.add_subcommand("cap-vocab", "Replace rare tokens with an unknown-word token");
    cmd->add_option("--corpus", a->corpus, "Parallel TSV")->required();
    cmd->add_option("--src-max", a->src_max, "Source vocabulary budget")->capture_default_str();
    cmd->add_option("--tgt-max", a->tgt_max, "Target vocabulary budget")->capture_default_str();
    cmd->add_option("--unk", a->unk, "Unknown-word token")->capture_default_str();
    cmd->add_option("--protect", a->protect, "Comma-separated protected source tokens")
        ->capture_default_str();
    cmd->add_option("-o,--output", a->output, "Output TSV")->required();
    cmd->add_option("--emit-vocabs", a->emit_vocabs, "Directory for vocab.src and vocab.tgt");
    cmd->callback([a] { run_cap_vocab(*a); });
  }
  {
    auto a = std::make_shared<SubsampleArgs>();
    auto* cmd = app.add_subcommand("subsample", "Draw a seeded sample of parallel pairs");
    cmd->add_option("--corpus", a->corpus, "Parallel TSV")->required();
    cmd->add_option("--n", a->n, "Number of pairs to select")->required();
    cmd->add_option("--seed", a->seed, "Sampling seed")->capture_default_str();
    cmd->add_option("-o,--output", a->output, "Selected pairs TSV")->required();
    cmd->add_option("--remainder", a->remainder, "Target sides of the unselected pairs");
    cmd->add_option("--trees", a->trees, "Tree file line-aligned with the corpus");
    cmd->add_option("--remainder-trees", a->remainder_trees, "Trees of the unselected pairs");
    cmd->callback([a] { run_subsample(*a); });
  }
}

}  // namespace augment
