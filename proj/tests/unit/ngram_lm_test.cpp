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

#include "hfaug/ngram_lm.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "hfaug/error.hpp"
#include "hfaug/random.hpp"

namespace hfaug {
namespace {

std::vector<Sentence> sents(std::initializer_list<const char*> lines) {
  std::vector<Sentence> out;
  for (const char* l : lines) out.push_back(split_whitespace(l));
  return out;
}

// Plain recursive interpolated Witten-Bell over string n-gram maps.
struct OracleLm {
  int order;
  std::set<std::string> vocab;  // predictable words
  std::map<std::vector<std::string>, std::map<std::string, double>> follow;

  OracleLm(const std::vector<Sentence>& corpus, int n) : order(n) {
    vocab = {"</s>", "<unk>"};
    for (const auto& s : corpus) vocab.insert(s.begin(), s.end());
    for (const auto& s : corpus) {
      std::vector<std::string> seq(static_cast<std::size_t>(n - 1), "<s>");
      seq.insert(seq.end(), s.begin(), s.end());
      seq.push_back("</s>");
      for (std::size_t i = static_cast<std::size_t>(n - 1); i < seq.size(); ++i) {
        for (int k = 0; k < n; ++k) {
          std::vector<std::string> h(seq.begin() + static_cast<std::ptrdiff_t>(i) - k,
                                     seq.begin() + static_cast<std::ptrdiff_t>(i));
          follow[h][seq[i]] += 1;
        }
      }
    }
  }

  double p(const std::vector<std::string>& h, const std::string& w) const {
    if (h.empty()) return interp(h, w, 1.0 / static_cast<double>(vocab.size()));
    std::vector<std::string> shorter(h.begin() + 1, h.end());
    return interp(h, w, p(shorter, w));
  }

  double interp(const std::vector<std::string>& h, const std::string& w, double lower) const {
    auto it = follow.find(h);
    if (it == follow.end()) return lower;
    double total = 0;
    for (const auto& [_, c] : it->second) total += c;
    double types = static_cast<double>(it->second.size());
    double c = it->second.contains(w) ? it->second.at(w) : 0.0;
    return (c + types * lower) / (total + types);
  }
};

TEST(NGramLM, CountsWithPadding) {
  auto lm = NGramLM::train(sents({"a b"}), 2, 1);
  std::vector<std::string> bos{"<s>"}, a{"a"}, b{"b"};
  EXPECT_EQ(lm.count(bos, "a"), 1u);
  EXPECT_EQ(lm.count(a, "b"), 1u);
  EXPECT_EQ(lm.count(b, "</s>"), 1u);
  EXPECT_EQ(lm.count(a, "a"), 0u);
  EXPECT_EQ(lm.count({}, "a"), 1u);
  EXPECT_EQ(lm.count({}, "<s>"), 0u);
}

TEST(NGramLM, UnigramClosedForm) {
  // N = 4 predicted tokens, T = 4 types, |V| = 5.
  auto lm = NGramLM::train(sents({"a b c"}), 1, 1);
  EXPECT_NEAR(lm.prob({}, "a"), 0.225, 1e-12);
  EXPECT_NEAR(lm.prob({}, "<unk>"), 0.1, 1e-12);
  EXPECT_NEAR(lm.prob({}, "never-seen"), 0.1, 1e-12);
  EXPECT_EQ(lm.prob({}, "<s>"), 0.0);
}

TEST(NGramLM, MatchesOracleAtHigherOrders) {
  auto corpus = sents({"the cat sat", "the dog sat down", "a cat ran", "the cat ran down the hill"});
  for (int order = 1; order <= 4; ++order) {
    auto lm = NGramLM::train(corpus, order, 1);
    OracleLm oracle(corpus, order);
    std::vector<std::vector<std::string>> contexts{
        {}, {"the"}, {"sat"}, {"the", "cat"}, {"cat", "ran", "down"}, {"zz", "the"}};
    for (auto ctx : contexts) {
      for (const auto& w : lm.vocabulary()) {
        // The oracle wants a context of exactly order-1 words, padded with <s>.
        std::vector<std::string> h(ctx);
        for (auto& x : h) if (!oracle.vocab.contains(x)) x = "<unk>";
        while (h.size() < static_cast<std::size_t>(order - 1)) h.insert(h.begin(), "<s>");
        while (h.size() > static_cast<std::size_t>(order - 1)) h.erase(h.begin());
        EXPECT_NEAR(lm.prob(ctx, w), oracle.p(h, w), 1e-12) << order << " " << w;
      }
    }
  }
}

TEST(NGramLM, MinCountMapsRareWordsToUnk) {
  auto lm = NGramLM::train(sents({"a b c"}), 2, 2);
  EXPECT_EQ(lm.vocabulary(), (std::vector<std::string>{"</s>", "<unk>"}));
  EXPECT_FALSE(lm.contains("a"));
  EXPECT_DOUBLE_EQ(lm.prob({}, "a"), lm.prob({}, "<unk>"));
}

TEST(NGramLM, Errors) {
  EXPECT_THROW(NGramLM::train({}, 3, 1), Error);
  EXPECT_THROW(NGramLM::train(sents({"a"}), 0, 1), Error);
  auto lm = NGramLM::train(sents({"a"}), 2, 1);
  EXPECT_THROW(cross_entropy(lm, {}), Error);
}

TEST(NGramLMProperty, DistributionSumsToOne) {
  SeededRng rng(77);
  std::vector<Sentence> corpus;
  for (int k = 0; k < 80; ++k) {
    Sentence s;
    for (std::size_t n = rng.below(10); n > 0; --n) s.push_back("w" + std::to_string(rng.below(30)));
    corpus.push_back(s);
  }
  auto lm = NGramLM::train(corpus, 3, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> ctx;
    for (std::size_t n = rng.below(4); n > 0; --n) ctx.push_back("w" + std::to_string(rng.below(35)));
    double sum = 0.0;
    for (const auto& w : lm.vocabulary()) sum += lm.prob(ctx, w);
    ASSERT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(CrossEntropy, ClosedFormSingleWord) {
  auto lm = NGramLM::train(sents({"a"}), 1, 1);
  // N = 2, T = 2, |V| = 3: P(a) = P(</s>) = (1 + 2/3) / 4 = 5/12.
  std::vector<std::string> a{"a"};
  EXPECT_NEAR(cross_entropy(lm, a), -std::log2(5.0 / 12.0), 1e-12);
}

TEST(CrossEntropy, MatchesOracleSum) {
  auto corpus = sents({"the cat sat", "the dog sat down", "a cat ran"});
  auto lm = NGramLM::train(corpus, 3, 1);
  OracleLm oracle(corpus, 3);
  Sentence s = split_whitespace("the cat sat down fast");
  std::vector<std::string> seq{"<s>", "<s>"};
  for (auto w : s) seq.push_back(oracle.vocab.contains(w) ? w : "<unk>");
  seq.push_back("</s>");
  double bits = 0;
  for (std::size_t i = 2; i < seq.size(); ++i) bits -= std::log2(oracle.p({seq[i - 2], seq[i - 1]}, seq[i]));
  EXPECT_NEAR(cross_entropy(lm, s), bits / 6.0, 1e-12);
}

TEST(CrossEntropy, DeterministicAndSeenBeatsUnseen) {
  auto corpus = sents({"the cat sat", "the cat sat", "the dog ran"});
  auto a = NGramLM::train(corpus, 3, 1);
  auto b = NGramLM::train(corpus, 3, 1);
  Sentence seen = split_whitespace("the cat sat");
  Sentence unseen = split_whitespace("zz yy xx");
  EXPECT_EQ(cross_entropy(a, seen), cross_entropy(b, seen));
  EXPECT_LT(cross_entropy(a, seen), cross_entropy(a, unseen));
}

}  // namespace
}  // namespace hfaug
