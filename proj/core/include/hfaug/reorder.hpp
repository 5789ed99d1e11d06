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
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hfaug/head_rules.hpp"
#include "hfaug/text.hpp"
#include "hfaug/treebank.hpp"

namespace hfaug {

// Selects argument phrases by their position relative to the parent's head.
// Labels are compared after base_label() stripping.
struct ArgumentPattern {
  enum class Side { BeforeHead, AfterHead };

  std::set<std::string, std::less<>> parent_labels;
  std::set<std::string, std::less<>> child_labels;
  Side side = Side::BeforeHead;

  bool matches(std::string_view parent_label, std::string_view child_label,
               std::size_t child_index, std::size_t head_index) const;
};

struct ReorderConfig {
  std::string subject_marker = "<sbj>";
  std::string object_marker = "<obj>";
  std::set<std::string, std::less<>> drop_determiner_labels = {"DT"};
  ArgumentPattern subject{{"S"}, {"NP"}, ArgumentPattern::Side::BeforeHead};
  ArgumentPattern object{{"VP"}, {"NP"}, ArgumentPattern::Side::AfterHead};

  // Throws Error{InvalidArgument} for empty, whitespace-bearing or equal markers.
  void validate() const;
};

// Label given to inserted marker leaves in head-finalized trees.
inline constexpr std::string_view kMarkerLabel = "-MARK-";

struct ReorderedSentence {
  Sentence tokens;
  std::size_t source_tree_id = 0;
};

// Head-finalizes a head-resolved tree: at every internal node the head
// child moves to the last position, non-head siblings keep their relative
// order, dropped-determiner leaves disappear (with any phrase left empty),
// and marker leaves follow each subject/object phrase. A marker is not
// added again when the phrase is already followed by the same marker, so
// the transform is idempotent on its own output. Returns nullopt when
// nothing survives the determiner drop. Throws Error{UnresolvedHead}.
std::optional<ConstituencyTree> head_finalize_tree(const ConstituencyTree& tree,
                                                   const ReorderConfig& cfg);

// Yield of head_finalize_tree().
ReorderedSentence head_finalize(const ConstituencyTree& tree, const ReorderConfig& cfg,
                                std::size_t tree_id = 0);

// True when every internal node's head is its last child.
bool is_head_final(const ConstituencyTree& tree);

struct SkipEntry {
  std::size_t line = 0;
  std::string error;
};

// Streams a tree file through parse -> resolve_heads -> head_finalize.
// Malformed trees are reported through `on_skip` and processing continues;
// source_tree_id is the 1-based line number.
void reorder_stream(std::istream& trees, const ReorderConfig& cfg, const HeadRuleTable& rules,
                    const std::function<void(ReorderedSentence&&)>& on_sentence,
                    const std::function<void(SkipEntry&&)>& on_skip);

struct ReorderCorpusResult {
  std::vector<ReorderedSentence> sentences;
  std::vector<SkipEntry> skipped;
};

ReorderCorpusResult reorder_corpus(std::istream& trees, const ReorderConfig& cfg,
                                   const HeadRuleTable& rules);

}  // namespace hfaug
