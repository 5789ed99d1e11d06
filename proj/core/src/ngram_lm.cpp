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

#include <algorithm>
#include <cmath>
#include <cstring>

#include "hfaug/error.hpp"

namespace hfaug {

namespace {

constexpr std::uint32_t kBosId = 0;
constexpr std::uint32_t kEosId = 1;
constexpr std::uint32_t kUnkId = 2;

}  // namespace

std::string NGramLM::key(std::span<const WordId> ids) {
  std::string k(ids.size() * sizeof(WordId), '\0');
  if (!ids.empty()) std::memcpy(k.data(), ids.data(), k.size());
  return k;
}

NGramLM NGramLM::train(std::span<const Sentence> corpus, int order, std::size_t min_count) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "LM order must be at least 1");
  if (corpus.empty()) throw Error(ErrorCode::EmptyCorpus, "LM training corpus is empty");

  std::unordered_map<std::string, std::size_t> freq;
  for (const auto& s : corpus)
    for (const auto& w : s) ++freq[w];

  NGramLM lm;
  lm.order_ = order;
  lm.words_ = {std::string(kBos), std::string(kEos), std::string(kUnk)};
  std::vector<std::string> kept;
  for (const auto& [w, c] : freq) {
    if (c >= min_count && w != kBos && w != kEos && w != kUnk) kept.push_back(w);
  }
  std::sort(kept.begin(), kept.end());
  for (auto& w : kept) lm.words_.push_back(std::move(w));
  for (WordId i = 0; i < lm.words_.size(); ++i) lm.ids_.emplace(lm.words_[i], i);
  lm.predictable_.assign(lm.words_.begin() + 1, lm.words_.end());
  std::sort(lm.predictable_.begin(), lm.predictable_.end());

  lm.stats_.resize(static_cast<std::size_t>(order));
  const auto pad = static_cast<std::size_t>(order - 1);
  std::vector<WordId> seq;
  for (const auto& s : corpus) {
    seq.assign(pad, kBosId);
    for (const auto& w : s) {
      const WordId id = lm.id_of(w);
      seq.push_back(id == kBosId ? kUnkId : id);
    }
    seq.push_back(kEosId);
    for (std::size_t i = pad; i < seq.size(); ++i) {
      for (std::size_t k = 0; k <= pad; ++k) {
        auto ctx = std::span<const WordId>(seq).subspan(i - k, k);
        auto& st = lm.stats_[k][key(ctx)];
        ++st.total;
        ++st.followers[seq[i]];
      }
    }
  }
  return lm;
}

NGramLM::WordId NGramLM::id_of(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnkId : it->second;
}

bool NGramLM::contains(std::string_view word) const { return ids_.contains(std::string(word)); }

std::uint64_t NGramLM::count(std::span<const std::string> context, std::string_view word) const {
  if (context.size() >= stats_.size()) return 0;
  std::vector<WordId> ids;
  for (const auto& w : context) {
    auto it = ids_.find(w);
    if (it == ids_.end()) return 0;
    ids.push_back(it->second);
  }
  auto wit = ids_.find(std::string(word));
  if (wit == ids_.end()) return 0;
  auto sit = stats_[context.size()].find(key(ids));
  if (sit == stats_[context.size()].end()) return 0;
  auto fit = sit->second.followers.find(wit->second);
  return fit == sit->second.followers.end() ? 0 : fit->second;
}

double NGramLM::prob_ids(std::span<const WordId> context, WordId word) const {
  double p = 1.0 / static_cast<double>(predictable_.size());
  for (std::size_t k = 0; k < stats_.size() && k <= context.size(); ++k) {
    auto ctx = context.subspan(context.size() - k, k);
    auto it = stats_[k].find(key(ctx));
    if (it == stats_[k].end() || it->second.total == 0) continue;
    const ContextStats& st = it->second;
    auto fit = st.followers.find(word);
    const double c = fit == st.followers.end() ? 0.0 : static_cast<double>(fit->second);
    const auto types = static_cast<double>(st.followers.size());
    p = (c + types * p) / (static_cast<double>(st.total) + types);
  }
  return p;
}

double NGramLM::prob(std::span<const std::string> context, std::string_view word) const {
  const auto pad = static_cast<std::size_t>(order_ - 1);
  std::vector<WordId> ids(pad, kBosId);
  const std::size_t take = std::min(pad, context.size());
  for (std::size_t i = 0; i < take; ++i) {
    ids[pad - take + i] = id_of(context[context.size() - take + i]);
  }
  const WordId w = id_of(word);
  if (w == kBosId) return 0.0;
  return prob_ids(ids, w);
}

double cross_entropy(const NGramLM& lm, std::span<const std::string> tokens) {
  if (tokens.empty()) throw Error(ErrorCode::EmptySentence, "cannot score an empty sentence");
  const auto pad = static_cast<std::size_t>(lm.order_ - 1);
  std::vector<NGramLM::WordId> seq(pad, kBosId);
  for (const auto& w : tokens) seq.push_back(lm.id_of(w));
  seq.push_back(kEosId);
  double bits = 0.0;
  for (std::size_t i = pad; i < seq.size(); ++i) {
    auto ctx = std::span<const NGramLM::WordId>(seq).subspan(i - pad, pad);
    // <s> inside a sentence is unpredictable; score it as <unk>.
    const auto w = seq[i] == kBosId ? kUnkId : seq[i];
    bits -= std::log2(lm.prob_ids(ctx, w));
  }
  return bits / static_cast<double>(tokens.size() + 1);
}

}  // namespace hfaug
