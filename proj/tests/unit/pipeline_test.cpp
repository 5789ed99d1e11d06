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

#include "hfaug/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "hfaug/error.hpp"
#include "synthetic.hpp"

namespace hfaug {
namespace {

const HeadRuleTable& rules() {
  static const HeadRuleTable table =
      HeadRuleTable::load(std::filesystem::path(HFAUG_DATA_DIR) / "head_rules.ptb.tsv");
  return table;
}

CascadeLexicon boy_lexicon() {
  return CascadeLexicon({{"boy", "shounen"}, {"apple", "ringo"}, {"ate", "tabeta"}}, {});
}

ParallelCorpus numbered(std::size_t n, const std::string& tag = "r") {
  ParallelCorpus c;
  for (std::size_t i = 0; i < n; ++i) {
    c.pairs.push_back({{tag + "s" + std::to_string(i)}, {tag + "t" + std::to_string(i)}});
  }
  return c;
}

TEST(MakePseudoPair, BoyApple) {
  auto tree = resolve_heads(
      parse_bracketed("(S (NP (DT the) (NN boy)) (VP (VBD ate) (NP (DT an) (NN apple))))"), rules());
  auto p = make_pseudo_pair(tree, {}, boy_lexicon());
  EXPECT_EQ(p.source, (Sentence{"shounen", "<sbj>", "ringo", "<obj>", "tabeta"}));
  EXPECT_EQ(p.target, (Sentence{"the", "boy", "ate", "an", "apple"}));
  EXPECT_EQ(p.provenance, Provenance::Pseudo);
}

TEST(MakePseudoPair, LowercaseOption) {
  auto tree = resolve_heads(parse_bracketed("(S (NP (NNP John)) (VP (VBD Ate)))"), rules());
  PseudoOptions opts;
  opts.lowercase = true;
  auto p = make_pseudo_pair(tree, opts, boy_lexicon());
  EXPECT_EQ(p.target, (Sentence{"john", "ate"}));
  EXPECT_EQ(p.source, (Sentence{"john", "<sbj>", "tabeta"}));
}

TEST(MakePseudoPair, DeterminerOnlyTreeIsRejected) {
  auto tree = resolve_heads(parse_bracketed("(NP (DT the))"), rules());
  EXPECT_THROW(make_pseudo_pair(tree, {}, boy_lexicon()), Error);
}

TEST(BuildPseudoCorpus, SkipsBadLinesAndKeepsOrder) {
  std::istringstream in(
      "(S (NP (DT the) (NN boy)) (VP (VBD ate) (NP (DT an) (NN apple))))\n"
      "(S (NP (NN boy)\n"
      "\n"
      "(S (NP (NN apple)) (VP (VBD ate)))\n");
  auto out = build_pseudo_corpus(in, rules(), {}, boy_lexicon());
  ASSERT_EQ(out.corpus.size(), 2u);
  EXPECT_EQ(out.corpus.pairs[1].source, (Sentence{"ringo", "<sbj>", "tabeta"}));
  ASSERT_EQ(out.skipped.size(), 1u);
  EXPECT_EQ(out.skipped[0].line, 2u);
}

TEST(BuildPseudoCorpus, EmptyInput) {
  std::istringstream in("");
  auto out = build_pseudo_corpus(in, rules(), {}, boy_lexicon());
  EXPECT_TRUE(out.corpus.empty());
  EXPECT_TRUE(out.skipped.empty());
}

TEST(AssembleTrainingSet, SizeAndComposition) {
  auto real = numbered(7);
  auto pseudo = numbered(4, "p");
  for (auto& p : pseudo.pairs) p.provenance = Provenance::Pseudo;
  auto out = assemble_training_set(real, pseudo, 5, 1);
  EXPECT_EQ(out.size(), 5 * 7 + 4u);
  EXPECT_EQ(out.count(Provenance::Real), 35u);
  std::map<Sentence, int> seen;
  for (const auto& p : out.pairs) ++seen[p.source];
  for (const auto& p : real.pairs) EXPECT_EQ(seen[p.source], 5);
  for (const auto& p : pseudo.pairs) EXPECT_EQ(seen[p.source], 1);
}

TEST(AssembleTrainingSet, SeedDeterminism) {
  auto real = numbered(10);
  auto pseudo = numbered(10, "p");
  EXPECT_EQ(assemble_training_set(real, pseudo, 3, 9), assemble_training_set(real, pseudo, 3, 9));
  EXPECT_NE(assemble_training_set(real, pseudo, 3, 9), assemble_training_set(real, pseudo, 3, 10));
}

TEST(AssembleTrainingSet, Errors) {
  try {
    assemble_training_set({}, numbered(3), 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyRealCorpus);
  }
  EXPECT_THROW(assemble_training_set(numbered(2), {}, 0, 0), Error);
  EXPECT_EQ(assemble_training_set(numbered(2), {}, 1, 0).size(), 2u);
}

ParallelCorpus freq_corpus() {
  ParallelCorpus c;
  c.pairs.push_back({split_whitespace("a a a b b c <sbj>"), split_whitespace("x y")});
  c.pairs.push_back({split_whitespace("d a b"), split_whitespace("x z")});
  return c;
}

TEST(CapVocabulary, KeepsMostFrequentAndProtected) {
  VocabSpec src{2, "<unk>", {"<sbj>"}};
  VocabSpec tgt{10, "<unk>", {}};
  auto out = cap_vocabulary(freq_corpus(), src, tgt);
  EXPECT_EQ(out.corpus.pairs[0].source, split_whitespace("a a a b b <unk> <sbj>"));
  EXPECT_EQ(out.corpus.pairs[1].source, split_whitespace("<unk> a b"));
  EXPECT_EQ(out.source_vocab, (std::vector<std::string>{"a", "b", "<sbj>", "<unk>"}));
  EXPECT_EQ(out.corpus.pairs[1].target, split_whitespace("x z"));
  EXPECT_EQ(out.target_vocab, (std::vector<std::string>{"x", "y", "z", "<unk>"}));
}

TEST(CapVocabulary, IdempotentAndNoOpWhenLarge) {
  VocabSpec src{2, "<unk>", {"<sbj>"}};
  VocabSpec tgt{1, "<unk>", {}};
  auto once = cap_vocabulary(freq_corpus(), src, tgt);
  auto twice = cap_vocabulary(once.corpus, src, tgt);
  EXPECT_EQ(once.corpus, twice.corpus);
  // <unk> gains frequency on the second pass, so only the membership is stable.
  EXPECT_EQ(std::set<std::string>(once.source_vocab.begin(), once.source_vocab.end()),
            std::set<std::string>(twice.source_vocab.begin(), twice.source_vocab.end()));
  VocabSpec big{100, "<unk>", {}};
  EXPECT_EQ(cap_vocabulary(freq_corpus(), big, big).corpus, freq_corpus());
}

TEST(CapVocabulary, RejectsZeroBudget) {
  VocabSpec zero{0, "<unk>", {}};
  EXPECT_THROW(cap_vocabulary(freq_corpus(), zero, VocabSpec{}), Error);
}

TEST(SubsampleParallel, PartitionAndOrder) {
  auto c = numbered(30);
  auto s = subsample_parallel(c, 12, 4);
  ASSERT_EQ(s.selected.size(), 12u);
  ASSERT_EQ(s.remainder.size(), 18u);
  EXPECT_TRUE(std::is_sorted(s.selected_indices.begin(), s.selected_indices.end()));
  EXPECT_TRUE(std::is_sorted(s.remainder_indices.begin(), s.remainder_indices.end()));
  std::vector<std::size_t> all = s.selected_indices;
  all.insert(all.end(), s.remainder_indices.begin(), s.remainder_indices.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
  for (std::size_t k = 0; k < s.remainder.size(); ++k) {
    EXPECT_EQ(s.remainder[k], c.pairs[s.remainder_indices[k]].target);
  }
}

TEST(SubsampleParallel, EdgesAndDeterminism) {
  auto c = numbered(10);
  EXPECT_EQ(subsample_parallel(c, 10, 1).selected, c);
  EXPECT_TRUE(subsample_parallel(c, 0, 1).selected.empty());
  EXPECT_EQ(subsample_parallel(c, 4, 2).selected_indices, subsample_parallel(c, 4, 2).selected_indices);
  try {
    subsample_parallel(c, 11, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SampleTooLarge);
  }
}

TEST(PipelineProperty, SyntheticTreesReorderToForeignOrder) {
  testing::TreeGenerator gen(31);
  std::ostringstream trees;
  Dictionary dict;
  std::vector<testing::SyntheticTree> items = gen.sentences(50);
  for (const auto& t : items) {
    trees << t.bracketed << "\n";
    for (const auto& w : t.english) dict.emplace(w, testing::TreeGenerator::foreign_word(w));
  }
  std::istringstream in(trees.str());
  auto out = build_pseudo_corpus(in, rules(), {}, CascadeLexicon(dict, {}));
  ASSERT_EQ(out.corpus.size(), items.size());
  EXPECT_TRUE(out.skipped.empty());
  for (std::size_t i = 0; i < items.size(); ++i) {
    EXPECT_EQ(out.corpus.pairs[i].target, items[i].english);
  }
}

}  // namespace
}  // namespace hfaug
