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

#include "hfaug/reorder.hpp"

#include <istream>

#include "hfaug/error.hpp"

namespace hfaug {

bool ArgumentPattern::matches(std::string_view parent_label, std::string_view child_label,
                              std::size_t child_index, std::size_t head_index) const {
  if (child_index == head_index) return false;
  if (side == Side::BeforeHead && child_index > head_index) return false;
  if (side == Side::AfterHead && child_index < head_index) return false;
  return parent_labels.contains(base_label(parent_label)) &&
         child_labels.contains(base_label(child_label));
}

void ReorderConfig::validate() const {
  for (const auto* m : {&subject_marker, &object_marker}) {
    if (m->empty() || split_whitespace(*m).size() != 1 || split_whitespace(*m)[0] != *m) {
      throw Error(ErrorCode::InvalidArgument, "marker token must be a single non-blank word");
    }
  }
  if (subject_marker == object_marker) {
    throw Error(ErrorCode::InvalidArgument, "subject and object markers must differ");
  }
}

namespace {

bool is_marker_leaf(const ConstituencyTree& t, std::string_view marker) {
  return t.leaf && t.label == kMarkerLabel && t.leaf->surface == marker;
}

ConstituencyTree marker_leaf(const std::string& marker) {
  ConstituencyTree t;
  t.label = std::string(kMarkerLabel);
  t.leaf = Token{marker, std::nullopt};
  return t;
}

std::optional<ConstituencyTree> transform(const ConstituencyTree& node, const ReorderConfig& cfg) {
  if (node.is_leaf()) {
    if (cfg.drop_determiner_labels.contains(base_label(node.label)) &&
        !is_punctuation_label(node.label)) {
      return std::nullopt;
    }
    return node;
  }
  if (!node.head_index || *node.head_index >= node.children.size()) {
    throw Error(ErrorCode::UnresolvedHead, "node '" + node.label + "' has no head");
  }
  const std::size_t head = *node.head_index;
  const std::size_t n = node.children.size();

  ConstituencyTree out;
  out.label = node.label;
  out.children.reserve(n + 2);
  std::optional<ConstituencyTree> head_out;

  for (std::size_t i = 0; i < n; ++i) {
    const ConstituencyTree& child = node.children[i];
    auto moved = transform(child, cfg);
    if (i == head) {
      head_out = std::move(moved);
      continue;
    }
    if (!moved) continue;
    out.children.push_back(std::move(*moved));

    for (const auto& [pattern, marker] :
         {std::pair{&cfg.subject, &cfg.subject_marker}, std::pair{&cfg.object, &cfg.object_marker}}) {
      if (!pattern->matches(node.label, child.label, i, head)) continue;
      if (i + 1 < n && is_marker_leaf(node.children[i + 1], *marker)) continue;
      out.children.push_back(marker_leaf(*marker));
      break;
    }
  }
  if (head_out) out.children.push_back(std::move(*head_out));
  if (out.children.empty()) return std::nullopt;
  // If the head itself was dropped the last survivor takes its place.
  out.head_index = out.children.size() - 1;
  return out;
}

}  // namespace

std::optional<ConstituencyTree> head_finalize_tree(const ConstituencyTree& tree,
                                                   const ReorderConfig& cfg) {
  return transform(tree, cfg);
}

ReorderedSentence head_finalize(const ConstituencyTree& tree, const ReorderConfig& cfg,
                                std::size_t tree_id) {
  ReorderedSentence out;
  out.source_tree_id = tree_id;
  if (auto t = transform(tree, cfg)) out.tokens = yield_surfaces(*t);
  return out;
}

bool is_head_final(const ConstituencyTree& tree) {
  bool ok = true;
  for_each_node(tree, [&](const ConstituencyTree& n) {
    if (!n.is_leaf() && (!n.head_index || *n.head_index + 1 != n.children.size())) ok = false;
  });
  return ok;
}

void reorder_stream(std::istream& trees, const ReorderConfig& cfg, const HeadRuleTable& rules,
                    const std::function<void(ReorderedSentence&&)>& on_sentence,
                    const std::function<void(SkipEntry&&)>& on_skip) {
  cfg.validate();
  std::size_t line_number = 0;
  TreeLine tl;
  while (next_tree_line(trees, line_number, tl)) {
    try {
      auto tree = resolve_heads(parse_bracketed(tl.text), rules);
      on_sentence(head_finalize(tree, cfg, tl.line_number));
    } catch (const Error& e) {
      on_skip(SkipEntry{tl.line_number, e.what()});
    }
  }
  if (trees.bad()) throw Error(ErrorCode::Io, "read failed on tree stream");
}

ReorderCorpusResult reorder_corpus(std::istream& trees, const ReorderConfig& cfg,
                                   const HeadRuleTable& rules) {
  ReorderCorpusResult result;
  reorder_stream(
      trees, cfg, rules, [&](ReorderedSentence&& s) { result.sentences.push_back(std::move(s)); },
      [&](SkipEntry&& s) { result.skipped.push_back(std::move(s)); });
  return result;
}

}  // namespace hfaug
