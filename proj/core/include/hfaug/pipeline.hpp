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
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "hfaug/corpus.hpp"
#include "hfaug/head_rules.hpp"
#include "hfaug/lexicon.hpp"
#include "hfaug/reorder.hpp"

namespace hfaug {

struct PseudoOptions {
  ReorderConfig reorder;
  // ASCII-lowercase the tree yield before reordering (markers untouched).
  bool lowercase = false;
};

// Builds one pseudo pair from a head-resolved tree: the target is the tree's
// yield as-is (determiners kept) and the source is the word-by-word
// translation of its head-finalized yield. Throws Error{EmptySentence}
// when nothing is left on the source side.
SentencePair make_pseudo_pair(const ConstituencyTree& resolved, const PseudoOptions& options,
                              const CascadeLexicon& lexicon);

struct PseudoCorpus {
  ParallelCorpus corpus;
  std::vector<SkipEntry> skipped;
};

PseudoCorpus build_pseudo_corpus(std::istream& trees, const HeadRuleTable& rules,
                                 const PseudoOptions& options, const CascadeLexicon& lexicon);

// dup_factor copies of every real pair plus every pseudo pair, shuffled with
// a seeded Fisher-Yates pass. Throws Error{EmptyRealCorpus}.
ParallelCorpus assemble_training_set(const ParallelCorpus& real, const ParallelCorpus& pseudo,
                                     std::size_t dup_factor, std::uint64_t seed);

struct VocabSpec {
  std::size_t max_size = 10000;
  std::string unk_token = "<unk>";
  // Always in vocabulary and outside the size budget. unk_token is
  // implicitly protected.
  std::set<std::string, std::less<>> protected_tokens;
};

struct CappedCorpus {
  ParallelCorpus corpus;
  // Descending frequency, ties lexicographic; protected tokens included.
  std::vector<std::string> source_vocab;
  std::vector<std::string> target_vocab;
};

// Keeps the max_size most frequent unprotected tokens per side and replaces
// everything else with unk_token. Idempotent for fixed specs.
CappedCorpus cap_vocabulary(const ParallelCorpus& corpus, const VocabSpec& source_spec,
                            const VocabSpec& target_spec);

struct Subsample {
  ParallelCorpus selected;             // pairs in original order
  std::vector<Sentence> remainder;     // target sides of the unselected pairs
  std::vector<std::size_t> selected_indices;
  std::vector<std::size_t> remainder_indices;
};

// Seeded uniform sample of n pairs without replacement. Throws Error{SampleTooLarge}.
Subsample subsample_parallel(const ParallelCorpus& corpus, std::size_t n, std::uint64_t seed);

}  // namespace hfaug
