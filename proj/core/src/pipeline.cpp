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

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <unordered_map>

#include "hfaug/error.hpp"
#include "hfaug/random.hpp"

namespace hfaug {

namespace {

void lowercase_leaves(ConstituencyTree& t) {
  if (t.leaf) {
    t.leaf->surface = ascii_lower(t.leaf->surface);
    return;
  }
  for (auto& c : t.children) lowercase_leaves(c);
}

}  // namespace

SentencePair make_pseudo_pair(const ConstituencyTree& resolved, const PseudoOptions& options,
                              const CascadeLexicon& lexicon) {
  const ConstituencyTree* tree = &resolved;
  ConstituencyTree lowered;
  if (options.lowercase) {
    lowered = resolved;
    lowercase_leaves(lowered);
    tree = &lowered;
  }
  const std::set<std::string, std::less<>> markers = {options.reorder.subject_marker,
                                                      options.reorder.object_marker};
  SentencePair pair;
  pair.provenance = Provenance::Pseudo;
  pair.target = yield_surfaces(*tree);
  pair.source = translate_sentence(head_finalize(*tree, options.reorder).tokens, lexicon, markers);
  if (pair.source.empty()) {
    throw Error(ErrorCode::EmptySentence, "reordered sentence is empty after determiner removal");
  }
  return pair;
}

PseudoCorpus build_pseudo_corpus(std::istream& trees, const HeadRuleTable& rules,
                                 const PseudoOptions& options, const CascadeLexicon& lexicon) {
  options.reorder.validate();
  PseudoCorpus out;
  std::size_t line_number = 0;
  TreeLine tl;
  while (next_tree_line(trees, line_number, tl)) {
    try {
      auto tree = resolve_heads(parse_bracketed(tl.text), rules);
      out.corpus.pairs.push_back(make_pseudo_pair(tree, options, lexicon));
    } catch (const Error& e) {
      out.skipped.push_back({tl.line_number, e.what()});
    }
  }
  if (trees.bad()) throw Error(ErrorCode::Io, "read failed on tree stream");
  return out;
}

ParallelCorpus assemble_training_set(const ParallelCorpus& real, const ParallelCorpus& pseudo,
                                     std::size_t dup_factor, std::uint64_t seed) {
  if (real.empty()) throw Error(ErrorCode::EmptyRealCorpus, "no real parallel pairs to duplicate");
  if (dup_factor == 0) throw Error(ErrorCode::InvalidArgument, "duplication factor must be positive");
  ParallelCorpus out;
  out.pairs.reserve(dup_factor * real.size() + pseudo.size());
  for (std::size_t d = 0; d < dup_factor; ++d) {
    out.pairs.insert(out.pairs.end(), real.pairs.begin(), real.pairs.end());
  }
  out.pairs.insert(out.pairs.end(), pseudo.pairs.begin(), pseudo.pairs.end());
  SeededRng rng(seed);
  rng.shuffle(std::span<SentencePair>(out.pairs));
  return out;
}

namespace {

struct SideVocab {
  std::set<std::string, std::less<>> keep;
  std::vector<std::string> list;
};

SideVocab select_vocab(const std::unordered_map<std::string, std::size_t>& freq,
                       const VocabSpec& spec) {
  auto is_protected = [&](const std::string& w) {
    return w == spec.unk_token || spec.protected_tokens.contains(w);
  };
  std::vector<std::pair<std::string, std::size_t>> ranked;
  for (const auto& [w, c] : freq) {
    if (!is_protected(w)) ranked.emplace_back(w, c);
  }
  auto by_freq = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  std::sort(ranked.begin(), ranked.end(), by_freq);
  if (ranked.size() > spec.max_size) ranked.resize(spec.max_size);

  SideVocab v;
  std::vector<std::pair<std::string, std::size_t>> listed = ranked;
  std::set<std::string, std::less<>> guarded = spec.protected_tokens;
  guarded.insert(spec.unk_token);
  for (const auto& w : guarded) {
    auto it = freq.find(w);
    listed.emplace_back(w, it == freq.end() ? 0 : it->second);
  }
  std::sort(listed.begin(), listed.end(), by_freq);
  for (auto& [w, c] : listed) {
    v.keep.insert(w);
    v.list.push_back(w);
  }
  return v;
}

void apply_vocab(Sentence& s, const SideVocab& v, const std::string& unk) {
  for (auto& w : s) {
    if (!v.keep.contains(w)) w = unk;
  }
}

}  // namespace

CappedCorpus cap_vocabulary(const ParallelCorpus& corpus, const VocabSpec& source_spec,
                            const VocabSpec& target_spec) {
  for (const auto* spec : {&source_spec, &target_spec}) {
    if (spec->max_size == 0) throw Error(ErrorCode::InvalidArgument, "vocabulary size must be positive");
    if (spec->unk_token.empty()) throw Error(ErrorCode::InvalidArgument, "unk token must be non-empty");
  }
  std::unordered_map<std::string, std::size_t> src_freq, tgt_freq;
  for (const auto& p : corpus.pairs) {
    for (const auto& w : p.source) ++src_freq[w];
    for (const auto& w : p.target) ++tgt_freq[w];
  }
  const SideVocab src = select_vocab(src_freq, source_spec);
  const SideVocab tgt = select_vocab(tgt_freq, target_spec);

  CappedCorpus out;
  out.corpus = corpus;
  for (auto& p : out.corpus.pairs) {
    apply_vocab(p.source, src, source_spec.unk_token);
    apply_vocab(p.target, tgt, target_spec.unk_token);
  }
  out.source_vocab = src.list;
  out.target_vocab = tgt.list;
  return out;
}

Subsample subsample_parallel(const ParallelCorpus& corpus, std::size_t n, std::uint64_t seed) {
  if (n > corpus.size()) {
    throw Error(ErrorCode::SampleTooLarge, "requested " + std::to_string(n) + " pairs from a corpus of " +
                                               std::to_string(corpus.size()));
  }
  std::vector<std::size_t> idx(corpus.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  SeededRng rng(seed);
  rng.shuffle(std::span<std::size_t>(idx));

  Subsample out;
  out.selected_indices.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n));
  out.remainder_indices.assign(idx.begin() + static_cast<std::ptrdiff_t>(n), idx.end());
  std::sort(out.selected_indices.begin(), out.selected_indices.end());
  std::sort(out.remainder_indices.begin(), out.remainder_indices.end());
  for (auto i : out.selected_indices) out.selected.pairs.push_back(corpus.pairs[i]);
  for (auto i : out.remainder_indices) out.remainder.push_back(corpus.pairs[i].target);
  return out;
}

}  // namespace hfaug
