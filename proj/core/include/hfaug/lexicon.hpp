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
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "hfaug/corpus.hpp"
#include "hfaug/ibm1.hpp"

namespace hfaug {

enum class LexiconTier { Alignment, Embedding, Copy };

// Word-by-word translation table consulted alignment tier first, then the
// embedding tier, then copying the word through unchanged.
class CascadeLexicon {
 public:
  CascadeLexicon() = default;
  CascadeLexicon(Dictionary alignment_tier, Dictionary embedding_tier)
      : alignment_(std::move(alignment_tier)), embedding_(std::move(embedding_tier)) {}

  // The returned view refers either into the lexicon or to `word` itself.
  std::string_view lookup(std::string_view word) const;
  LexiconTier tier_of(std::string_view word) const;

  const Dictionary& alignment_tier() const noexcept { return alignment_; }
  const Dictionary& embedding_tier() const noexcept { return embedding_; }

 private:
  Dictionary alignment_;
  Dictionary embedding_;
};

std::string translate_word(std::string_view word, const CascadeLexicon& lexicon);

// Markers pass through untouched; output length equals input length.
Sentence translate_sentence(std::span<const std::string> tokens, const CascadeLexicon& lexicon,
                            const std::set<std::string, std::less<>>& marker_tokens = {});

// Counts, for every target word, the source words it is linked to across the
// corpus (links in (source, target) orientation) and keeps the most frequent
// one if it was seen at least `min_count` times. Count ties go to the
// lexicographically smaller source word.
Dictionary extract_dictionary(const ParallelCorpus& corpus, std::span<const AlignmentLinks> links,
                              std::size_t min_count);

}  // namespace hfaug
