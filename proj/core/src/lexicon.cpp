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

#include "hfaug/lexicon.hpp"

#include <map>

#include "hfaug/error.hpp"

namespace hfaug {

std::string_view CascadeLexicon::lookup(std::string_view word) const {
  if (auto it = alignment_.find(word); it != alignment_.end()) return it->second;
  if (auto it = embedding_.find(word); it != embedding_.end()) return it->second;
  return word;
}

LexiconTier CascadeLexicon::tier_of(std::string_view word) const {
  if (alignment_.contains(word)) return LexiconTier::Alignment;
  if (embedding_.contains(word)) return LexiconTier::Embedding;
  return LexiconTier::Copy;
}

std::string translate_word(std::string_view word, const CascadeLexicon& lexicon) {
  return std::string(lexicon.lookup(word));
}

Sentence translate_sentence(std::span<const std::string> tokens, const CascadeLexicon& lexicon,
                            const std::set<std::string, std::less<>>& marker_tokens) {
  Sentence out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    out.push_back(marker_tokens.contains(t) ? t : translate_word(t, lexicon));
  }
  return out;
}

Dictionary extract_dictionary(const ParallelCorpus& corpus, std::span<const AlignmentLinks> links,
                              std::size_t min_count) {
  if (links.size() != corpus.size()) {
    throw Error(ErrorCode::InvalidArgument, "one link set per sentence pair is required");
  }
  std::map<std::string, std::map<std::string, std::size_t>, std::less<>> counts;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& pair = corpus.pairs[k];
    for (const auto& [i, j] : links[k]) {
      if (i >= pair.source.size() || j >= pair.target.size()) {
        throw Error(ErrorCode::InvalidArgument,
                    "link out of bounds in pair " + std::to_string(k));
      }
      ++counts[pair.target[j]][pair.source[i]];
    }
  }
  Dictionary dict;
  for (const auto& [target, sources] : counts) {
    const std::string* best = nullptr;
    std::size_t best_count = 0;
    // std::map iterates sources in lexicographic order, so strict > keeps the
    // smaller word on ties.
    for (const auto& [source, c] : sources) {
      if (c > best_count) {
        best = &source;
        best_count = c;
      }
    }
    if (best && best_count >= min_count) dict.emplace(target, *best);
  }
  return dict;
}

}  // namespace hfaug
