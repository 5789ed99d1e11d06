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

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfaug/treebank.hpp"

namespace hfaug {

enum class SearchDirection { Left, Right };

// Collins/Magerman-style percolation rule. For each priority level (in
// order) the children are scanned from the `direction` end and the first
// child whose base label is in that level wins. A level usually holds one
// category; several categories in one level share priority, which expresses
// Collins' "first noun from the right" NP rule. With no match, the first
// non-punctuation child from the `direction` end is the head.
struct HeadRule {
  SearchDirection direction = SearchDirection::Right;
  std::vector<std::vector<std::string>> priority;
};

class HeadRuleTable {
 public:
  explicit HeadRuleTable(HeadRule default_rule = {}) : default_(std::move(default_rule)) {}

  // Text format, one rule per line:
  //   LABEL<TAB>left|right<TAB>cat1,cat2,...
  // A level may join alternatives with '|' ("NN|NNS,NP"). The category list
  // may be omitted (direction-only rule). A
  // "DEFAULT<TAB>left|right" line is mandatory. Blank and '#' lines are
  // ignored. Throws Error{BadHeadRules}.
  static HeadRuleTable parse(std::string_view text);
  static HeadRuleTable load(const std::filesystem::path& path);

  void set_rule(std::string label, HeadRule rule);

  // Unknown labels fall back to the default rule.
  const HeadRule& rule_for(std::string_view label) const;
  const HeadRule& default_rule() const noexcept { return default_; }
  std::size_t size() const noexcept { return rules_.size(); }

  // Index of the head among children with the given labels; children must be non-empty.
  std::size_t select_head(std::string_view parent_label,
                          std::span<const std::string> child_labels) const;

 private:
  HeadRule default_;
  std::map<std::string, HeadRule, std::less<>> rules_;
};

// Returns a copy of `tree` with head_index set on every internal node.
// Yield, node count and child order are unchanged.
ConstituencyTree resolve_heads(ConstituencyTree tree, const HeadRuleTable& rules);

// True when every internal node carries a valid head_index.
bool heads_resolved(const ConstituencyTree& tree);

}  // namespace hfaug
