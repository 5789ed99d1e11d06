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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hfaug/corpus.hpp"

namespace hfaug {

// Reserved spelling of the empty (NULL) word in tables and TSV files.
inline constexpr std::string_view kNullWord = "<NULL>";

// Probability used for (e, f) combinations absent from the table.
inline constexpr double kUnseenFloor = 1e-12;

// Lexical translation table t(f | e). Rows are indexed by the conditioning
// word e (including NULL) and sum to one over the generated words f.
class TranslationTable {
 public:
  TranslationTable();

  // t(f | e); 0 when the pair is absent. Pass kNullWord as e for the NULL row.
  double prob(std::string_view f, std::string_view e) const;

  // Every (f, t(f|e)) of row e, sorted by f. Empty for an unknown e.
  std::vector<std::pair<std::string, double>> row(std::string_view e) const;
  double row_sum(std::string_view e) const;

  // Conditioning vocabulary without NULL, sorted.
  std::vector<std::string> given_words() const;
  std::size_t entry_count() const noexcept { return probs_.size(); }

  // "e<TAB>f<TAB>prob" lines sorted by e then f.
  void write_tsv(std::ostream& out) const;
  static TranslationTable read_tsv(std::istream& in);

 private:
  friend class Ibm1Trainer;

  std::uint32_t intern_given(std::string_view e);
  std::uint32_t intern_generated(std::string_view f);
  std::int64_t slot(std::uint32_t e, std::uint32_t f) const;
  std::int64_t slot(std::string_view f, std::string_view e) const;

  std::vector<std::string> given_;
  std::vector<std::string> generated_;
  std::unordered_map<std::string, std::uint32_t> given_ids_;
  std::unordered_map<std::string, std::uint32_t> generated_ids_;
  // CSR layout: row e owns cols_/probs_ in [offsets_[e], offsets_[e+1]),
  // with cols_ ascending inside a row.
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> cols_;
  std::vector<double> probs_;
};

struct Ibm1Options {
  int iterations = 5;
  // E-step workers; results match the single-threaded run up to
  // floating-point reassociation.
  unsigned threads = 1;
};

struct Ibm1Model {
  TranslationTable table;
  // log_likelihood[k] is the natural-log corpus likelihood after k EM
  // updates, so the vector holds iterations + 1 values.
  std::vector<double> log_likelihood;
};

// Trains IBM Model 1 with the target sentence (plus NULL) generating the
// source sentence, i.e. the table holds t(source word | target word). Use
// swap_sides() for the other direction. The table starts uniform over
// co-occurring words. Throws Error{EmptyCorpus} or Error{EmptySentence}.
Ibm1Model train_ibm1(const ParallelCorpus& corpus, const Ibm1Options& options = {});

// (i, j): position i in the first sentence, position j in the second.
using AlignmentLink = std::pair<std::size_t, std::size_t>;
using AlignmentLinks = std::set<AlignmentLink>;

// Links each generated word j to argmax_i t(generated[j] | given[i]). Ties
// go to the smallest i; NULL wins only when strictly more probable than
// every word, and NULL links are omitted. Missing entries score kUnseenFloor.
AlignmentLinks viterbi_align(std::span<const std::string> given,
                             std::span<const std::string> generated,
                             const TranslationTable& table);

AlignmentLinks transpose(const AlignmentLinks& links);

// fwd intersected with transpose(bwd).
AlignmentLinks intersect_alignments(const AlignmentLinks& fwd, const AlignmentLinks& bwd);

// Per-pair intersected links in corpus orientation (source position, target
// position). `source_given_target` holds t(source | target), as returned by
// train_ibm1(corpus); `target_given_source` comes from train_ibm1(swap_sides(corpus)).
std::vector<AlignmentLinks> intersected_alignments(const ParallelCorpus& corpus,
                                                   const TranslationTable& source_given_target,
                                                   const TranslationTable& target_given_source);

}  // namespace hfaug
