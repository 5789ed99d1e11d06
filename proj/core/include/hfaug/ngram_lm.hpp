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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hfaug/text.hpp"

namespace hfaug {

inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";
inline constexpr std::string_view kUnk = "<unk>";

// Count-based n-gram model with interpolated Witten-Bell smoothing:
//
//   P(w | h) = (c(h, w) + T(h) * P(w | h')) / (c(h) + T(h))
//
// where h' drops the oldest word of h, c(h) counts events after h and T(h)
// the distinct word types seen after h. Contexts never seen fall through to
// the shorter context; the recursion bottoms out in a uniform distribution
// over the predictable vocabulary (training words, </s> and <unk>; <s> is
// context-only and never predicted).
class NGramLM {
 public:
  // Words rarer than min_count become <unk>. Each sentence is padded with
  // order-1 <s> and a single </s>. Throws Error{EmptyCorpus} when there is
  // no sentence, Error{InvalidArgument} when order < 1.
  static NGramLM train(std::span<const Sentence> corpus, int order, std::size_t min_count);

  int order() const noexcept { return order_; }

  // Predictable vocabulary, sorted: every word w for which prob() sums to one.
  const std::vector<std::string>& vocabulary() const noexcept { return predictable_; }
  bool contains(std::string_view word) const;

  // Raw count of `word` after `context` (most recent word last; context is
  // interpreted as given, without <unk> mapping or padding).
  std::uint64_t count(std::span<const std::string> context, std::string_view word) const;

  // Smoothed P(word | context). Out-of-vocabulary words are scored as <unk>;
  // context is truncated to order-1 words and left-padded with <s>.
  double prob(std::span<const std::string> context, std::string_view word) const;

 private:
  using WordId = std::uint32_t;

  struct ContextStats {
    std::uint64_t total = 0;
    std::unordered_map<WordId, std::uint64_t> followers;
  };

  static std::string key(std::span<const WordId> ids);
  WordId id_of(std::string_view word) const;
  double prob_ids(std::span<const WordId> context, WordId word) const;

  friend double cross_entropy(const NGramLM& lm, std::span<const std::string> tokens);

  int order_ = 1;
  std::vector<std::string> words_;  // id -> word; 0 <s>, 1 </s>, 2 <unk>
  std::unordered_map<std::string, WordId> ids_;
  std::vector<std::string> predictable_;
  // stats_[k] maps a length-k context key to its follower counts.
  std::vector<std::unordered_map<std::string, ContextStats>> stats_;
};

// Per-token cross-entropy in bits: -(1/N) sum log2 P(w_i | history), with N
// counting the closing </s> event. Throws Error{EmptySentence}.
double cross_entropy(const NGramLM& lm, std::span<const std::string> tokens);

}  // namespace hfaug
