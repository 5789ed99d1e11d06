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

// Acceptance gate. Prints one line per criterion and exits nonzero if any
// criterion fails. Tolerances and runtime budgets are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>
#include <unistd.h>

#include "hfaug/corpus.hpp"
#include "hfaug/error.hpp"
#include "hfaug/head_rules.hpp"
#include "hfaug/ibm1.hpp"
#include "hfaug/lexicon.hpp"
#include "hfaug/metrics.hpp"
#include "hfaug/moore_lewis.hpp"
#include "hfaug/ngram_lm.hpp"
#include "hfaug/pipeline.hpp"
#include "hfaug/random.hpp"
#include "hfaug/reorder.hpp"
#include "hfaug/treebank.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using namespace hfaug;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

const HeadRuleTable& rules() {
  static const HeadRuleTable t = HeadRuleTable::load(fs::path(HFAUG_DATA_DIR) / "head_rules.ptb.tsv");
  return t;
}

std::vector<std::string> fixture_treebank() {
  std::vector<std::string> lines;
  std::ifstream in(fs::path(HFAUG_TEST_DATA_DIR) / "sample.mrg");
  std::size_t line_no = 0;
  TreeLine tl;
  while (next_tree_line(in, line_no, tl)) lines.push_back(tl.text);
  testing::TreeGenerator gen(2718);
  for (const auto& t : gen.sentences(250)) lines.push_back(t.bracketed);
  return lines;
}

std::map<std::string, int> multiset(const Sentence& s) {
  std::map<std::string, int> m;
  for (const auto& w : s) ++m[w];
  return m;
}

Outcome head_final_invariants() {
  const ReorderConfig cfg;
  const auto lines = fixture_treebank();
  std::size_t ok_final = 0, ok_conserve = 0, ok_determinism = 0;
  for (const auto& line : lines) {
    auto tree = resolve_heads(parse_bracketed(line), rules());
    auto transformed = head_finalize_tree(tree, cfg);
    if (transformed && is_head_final(*transformed)) ++ok_final;

    auto out = head_finalize(tree, cfg).tokens;
    std::map<std::string, int> expected;
    for (const auto& tok : yield_tokens(tree)) {
      if (!tok.pos || !cfg.drop_determiner_labels.contains(*tok.pos)) ++expected[tok.surface];
    }
    auto got = multiset(out);
    got.erase(cfg.subject_marker);
    got.erase(cfg.object_marker);
    if (got == expected) ++ok_conserve;

    auto again = head_finalize(resolve_heads(parse_bracketed(line), rules()), cfg).tokens;
    if (again == out) ++ok_determinism;
  }
  const std::size_t n = lines.size();
  return {n >= 200 && ok_final == n && ok_conserve == n && ok_determinism == n,
          fmt::format("{} trees; head-final {}/{}, conserved {}/{}, deterministic {}/{}", n, ok_final,
                      n, ok_conserve, n, ok_determinism, n)};
}

Outcome worked_reorder_example() {
  auto tree = resolve_heads(
      parse_bracketed("(S (NP (DT the) (NN boy)) (VP (VBD ate) (NP (DT an) (NN apple))))"), rules());
  const auto got = head_finalize(tree, {}).tokens;
  const Sentence want{"boy", "<sbj>", "apple", "<obj>", "ate"};
  return {got == want, "got [" + join(got, " ") + "]"};
}

Outcome ibm1_toy() {
  ParallelCorpus c;
  c.pairs.push_back({{"das", "haus"}, {"the", "house"}});
  c.pairs.push_back({{"das", "buch"}, {"the", "book"}});
  c.pairs.push_back({{"ein", "buch"}, {"a", "book"}});
  const auto model = train_ibm1(c, {10, 1});
  std::string best;
  double best_p = -1;
  for (const auto& [f, p] : model.table.row("the")) {
    if (p > best_p) {
      best_p = p;
      best = f;
    }
  }
  bool monotone = model.log_likelihood.size() == 11;
  for (std::size_t i = 1; i < model.log_likelihood.size(); ++i) {
    monotone = monotone && model.log_likelihood[i] >= model.log_likelihood[i - 1] - 1e-9;
  }
  double worst_row = std::abs(model.table.row_sum(kNullWord) - 1.0);
  for (const auto& e : model.table.given_words()) {
    worst_row = std::max(worst_row, std::abs(model.table.row_sum(e) - 1.0));
  }
  const bool haus = model.table.prob("haus", "house") > model.table.prob("das", "house");
  return {best == "das" && haus && monotone && worst_row <= 1e-6,
          fmt::format("argmax t(.|the)={} t(haus|house)={:.4f} t(das|house)={:.4f} LL {:.4f}->{:.4f} "
                      "max row error {:.1e}",
                      best, model.table.prob("haus", "house"), model.table.prob("das", "house"),
                      model.log_likelihood.front(), model.log_likelihood.back(), worst_row)};
}

Outcome cascade_contract() {
  const CascadeLexicon lex({{"house", "haus"}}, {{"house", "heim"}, {"dog", "hund"}});
  struct Case {
    const char* word;
    const char* want;
  };
  const Case cases[] = {{"house", "haus"}, {"dog", "hund"}, {"zebra", "zebra"}};
  int ok = 0;
  for (const auto& c : cases) ok += translate_word(c.word, lex) == c.want;
  return {ok == 3, fmt::format("{}/3 cases", ok)};
}

Outcome kendall_oracle() {
  double worst = 0;
  std::size_t perms = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
      long conc = 0, disc = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) (p[i] < p[j] ? conc : disc) += 1;
      const double brute = static_cast<double>(conc - disc) / static_cast<double>(n * (n - 1) / 2);
      worst = std::max(worst, std::abs(kendall_tau(p) - brute));
      ++perms;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return {worst <= 1e-12, fmt::format("{} permutations, max abs error {:.1e}", perms, worst)};
}

Outcome ribes_checks() {
  const auto abc = split_whitespace("a b c");
  const double identity = ribes_sentence(abc, abc);
  const double reversed = ribes_sentence(split_whitespace("b a"), split_whitespace("a b"));
  const double one_swap = ribes_sentence(split_whitespace("a c b"), abc);
  bool maximal = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    Sentence ref;
    for (std::size_t i = 0; i < n; ++i) ref.push_back("w" + std::to_string(i));
    const double top = ribes_sentence(ref, ref);
    Sentence hyp = ref;
    do {
      if (ribes_sentence(hyp, ref) > top) maximal = false;
    } while (std::next_permutation(hyp.begin(), hyp.end()));
  }
  return {identity == 1.0 && reversed == 0.0 && std::abs(one_swap - 2.0 / 3.0) <= 1e-9 && maximal,
          fmt::format("identity {} reversed {} [0,2,1] {:.10f} identity-max {}", identity, reversed,
                      one_swap, maximal ? "yes" : "no")};
}

Outcome bleu_checks() {
  testing::TreeGenerator gen(99);
  std::vector<EvalPair> same;
  for (const auto& t : gen.sentences(20)) same.push_back({t.english, t.english});
  const double identical = corpus_bleu(same);
  std::vector<EvalPair> single{{split_whitespace("a b c d"), split_whitespace("a b c d e")}};
  const double hand = corpus_bleu(single);

  // 50-pair fixture: hypotheses are corrupted copies of references.
  SeededRng rng(7);
  std::vector<EvalPair> pairs;
  for (const auto& t : gen.sentences(50)) {
    EvalPair p{t.english, t.english};
    for (auto& w : p.hypothesis) {
      if (rng.below(4) == 0) w = "noise";
    }
    if (rng.below(3) == 0) p.hypothesis.pop_back();
    pairs.push_back(p);
  }
  const std::vector<std::size_t> bounds{5, 8, 12};
  const auto buckets = bucket_bleu(pairs, bounds);
  std::vector<EvalPair> pooled;
  std::size_t counted = 0;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    counted += buckets[b].count;
    for (const auto& p : pairs) {
      if (bucket_index(p.reference.size(), bounds) == b) pooled.push_back(p);
    }
  }
  const bool union_ok = counted == pairs.size() && corpus_bleu(pooled) == corpus_bleu(pairs);
  return {identical == 100.0 && std::abs(hand - 77.88) <= 0.01 && union_ok,
          fmt::format("identical {} single-pair {:.4f} union {} (corpus {:.4f})", identical, hand,
                      union_ok ? "exact" : "mismatch", corpus_bleu(pairs))};
}

Outcome moore_lewis_recovery() {
  testing::DomainGenerator in_gen(101, true), gen_gen(202, false);
  const auto in_train = in_gen.sentences(100);
  const auto gen_train = gen_gen.sentences(100);
  const auto in_lm = NGramLM::train(in_train, 4, 2);
  const auto gen_lm = NGramLM::train(gen_train, 4, 2);

  std::vector<Sentence> pool;
  std::vector<bool> is_in;
  for (auto& s : in_gen.sentences(50)) {
    pool.push_back(s);
    is_in.push_back(true);
  }
  for (auto& s : gen_gen.sentences(50)) {
    pool.push_back(s);
    is_in.push_back(false);
  }
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  SeededRng rng(303);
  rng.shuffle(std::span<std::size_t>(order));
  std::vector<Sentence> shuffled;
  std::vector<bool> shuffled_in;
  for (auto i : order) {
    shuffled.push_back(pool[i]);
    shuffled_in.push_back(is_in[i]);
  }

  const auto sel = moore_lewis_select(shuffled, in_lm, gen_lm, 50);
  std::vector<bool> picked(shuffled.size());
  std::size_t recovered = 0;
  for (auto i : sel.selected) {
    picked[i] = true;
    recovered += shuffled_in[i];
  }
  double max_sel = -INFINITY, min_rej = INFINITY;
  for (std::size_t i = 0; i < shuffled.size(); ++i) {
    if (picked[i]) max_sel = std::max(max_sel, sel.scores[i]);
    else min_rej = std::min(min_rej, sel.scores[i]);
  }
  const double rate = static_cast<double>(recovered) / 50.0;
  return {sel.selected.size() == 50 && rate >= 0.90 && max_sel <= min_rej,
          fmt::format("recovered {}/50 ({:.0f}%), max selected {:.4f} <= min rejected {:.4f}", recovered,
                      100 * rate, max_sel, min_rej)};
}

Outcome lm_properties() {
  SeededRng rng(55);
  std::vector<Sentence> corpus;
  for (int k = 0; k < 200; ++k) {
    Sentence s;
    for (std::size_t n = 1 + rng.below(12); n > 0; --n) s.push_back("w" + std::to_string(rng.below(60)));
    corpus.push_back(s);
  }
  const auto lm = NGramLM::train(corpus, 4, 2);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> ctx;
    for (std::size_t n = rng.below(5); n > 0; --n) ctx.push_back("w" + std::to_string(rng.below(70)));
    double sum = 0;
    for (const auto& w : lm.vocabulary()) sum += lm.prob(ctx, w);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  // One training word: N = 2 events, T = 2 types, |V| = 3, so P(a) = P(</s>) = 5/12.
  const auto uni = NGramLM::train(std::vector<Sentence>{{"a"}}, 1, 1);
  const Sentence a{"a"};
  const double h = cross_entropy(uni, a);
  const double closed = -std::log2(5.0 / 12.0);
  return {worst <= 1e-6 && std::abs(h - closed) <= 1e-9,
          fmt::format("max |sum-1| {:.1e}; H {:.12f} vs closed form {:.12f}", worst, h, closed)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct PipelineRun {
  std::size_t train = 0;
  std::size_t real = 0;
  std::size_t pseudo = 0;
  std::size_t skipped = 0;
};

PipelineRun run_pipeline(const fs::path& inputs, const fs::path& out) {
  fs::create_directories(out);
  const auto corpus = read_parallel_tsv(inputs / "corpus.tsv");
  std::vector<std::string> trees;
  {
    std::ifstream in(inputs / "trees.mrg");
    std::size_t line_no = 0;
    TreeLine tl;
    while (next_tree_line(in, line_no, tl)) trees.push_back(tl.text);
  }
  const auto sub = subsample_parallel(corpus, 100, 17);
  write_parallel_tsv(out / "selected.tsv", sub.selected);
  write_sentences(out / "remainder.txt", sub.remainder);
  std::ostringstream remainder_trees;
  for (auto i : sub.remainder_indices) remainder_trees << trees[i] << '\n';

  const auto s_given_t = train_ibm1(sub.selected, {5, 1});
  const auto t_given_s = train_ibm1(swap_sides(sub.selected), {5, 1});
  const auto links = intersected_alignments(sub.selected, s_given_t.table, t_given_s.table);
  const auto dict = extract_dictionary(sub.selected, links, 1);
  write_dictionary(out / "align.dict", dict);

  std::istringstream tree_stream(remainder_trees.str());
  const auto pseudo = build_pseudo_corpus(tree_stream, rules(), {}, CascadeLexicon(dict, {}));
  write_parallel_tsv(out / "pseudo.tsv", pseudo.corpus);

  const auto train = assemble_training_set(sub.selected, pseudo.corpus, 5, 17);
  VocabSpec src{10000, "<unk>", {"<sbj>", "<obj>"}};
  VocabSpec tgt{10000, "<unk>", {}};
  const auto capped = cap_vocabulary(train, src, tgt);
  write_parallel_tsv(out / "train.tsv", capped.corpus);
  write_lines(out / "vocab.src", capped.source_vocab);
  write_lines(out / "vocab.tgt", capped.target_vocab);
  return {capped.corpus.size(), sub.selected.size(), pseudo.corpus.size(), pseudo.skipped.size()};
}

Outcome end_to_end() {
  const fs::path root = fs::temp_directory_path() / fmt::format("hfaug_acceptance_{}", ::getpid());
  fs::remove_all(root);
  fs::create_directories(root / "inputs");
  {
    testing::TreeGenerator gen(1000);
    std::ofstream corpus(root / "inputs" / "corpus.tsv"), trees(root / "inputs" / "trees.mrg");
    for (const auto& t : gen.sentences(1000)) {
      corpus << join(t.foreign, " ") << '\t' << join(t.english, " ") << '\n';
      trees << t.bracketed << '\n';
    }
  }
  const auto a = run_pipeline(root / "inputs", root / "run1");
  const auto b = run_pipeline(root / "inputs", root / "run2");
  std::size_t identical = 0, files = 0;
  for (const char* name : {"selected.tsv", "remainder.txt", "align.dict", "pseudo.tsv", "train.tsv",
                           "vocab.src", "vocab.tgt"}) {
    ++files;
    identical += slurp(root / "run1" / name) == slurp(root / "run2" / name);
  }
  fs::remove_all(root);
  const bool sizes = a.train == 5 * a.real + a.pseudo && a.real == 100 && a.pseudo + a.skipped == 900;
  return {identical == files && sizes && a.train == b.train,
          fmt::format("{}/{} files byte-identical; |train| {} = 5*{} + {} ({} skipped)", identical, files,
                      a.train, a.real, a.pseudo, a.skipped)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "head-final invariants on fixture treebank", 5.0, head_final_invariants},
      {2, "worked reorder example", 0.0, worked_reorder_example},
      {3, "IBM Model 1 toy corpus", 1.0, ibm1_toy},
      {4, "cascade lexicon contract", 0.0, cascade_contract},
      {5, "Kendall tau exhaustive oracle", 10.0, kendall_oracle},
      {6, "RIBES examples and identity maximality", 0.0, ribes_checks},
      {7, "BLEU examples and bucket union", 0.0, bleu_checks},
      {8, "Moore-Lewis in-domain recovery", 5.0, moore_lewis_recovery},
      {9, "LM normalization and cross-entropy", 0.0, lm_properties},
      {10, "end-to-end reproducibility", 30.0, end_to_end},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_seconds == 0.0 || secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::string timing = fmt::format("{:.3f}s", secs);
    if (c.budget_seconds > 0.0) timing += fmt::format(" of {:.0f}s", c.budget_seconds);
    fmt::print("criterion {:>2}: {} {} ({}; {})\n", c.id, pass ? "PASS" : "FAIL", c.name, o.detail, timing);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
             criteria.size());
  return failures == 0 ? 0 : 1;
}
