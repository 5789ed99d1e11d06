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
#include <string>
#include <string_view>
#include <vector>

#include "hfaug/text.hpp"

namespace hfaug {

// A word of the input sentence. `surface` is kept verbatim, so bracket
// escapes such as -LRB- stay escaped.
struct Token {
  std::string surface;
  std::optional<std::string> pos;

  friend bool operator==(const Token&, const Token&) = default;
};

// Phrase-structure tree. A node is either a leaf (a preterminal carrying a
// token) or an internal node with one or more children, never both.
// head_index is populated by resolve_heads() on internal nodes only.
struct ConstituencyTree {
  std::string label;
  std::vector<ConstituencyTree> children;
  std::optional<Token> leaf;
  std::optional<std::size_t> head_index;

  static ConstituencyTree make_leaf(std::string label, std::string surface);
  static ConstituencyTree make_node(std::string label, std::vector<ConstituencyTree> children);

  bool is_leaf() const noexcept { return leaf.has_value(); }

  friend bool operator==(const ConstituencyTree&, const ConstituencyTree&) = default;
};

// Parses one Penn-style bracketed tree. Throws Error with code
// UnbalancedBrackets, EmptyNode, TrailingInput or MalformedTree.
ConstituencyTree parse_bracketed(std::string_view text);

// Inverse of parse_bracketed; head annotations are not serialized.
std::string to_bracketed(const ConstituencyTree& tree);

std::vector<Token> yield_tokens(const ConstituencyTree& tree);
Sentence yield_surfaces(const ConstituencyTree& tree);

std::size_t node_count(const ConstituencyTree& tree);
std::size_t internal_node_count(const ConstituencyTree& tree);

// Pre-order traversal.
void for_each_node(const ConstituencyTree& tree,
                   const std::function<void(const ConstituencyTree&)>& visit);

// "NP-SBJ-1" -> "NP", "NP=2" -> "NP". Labels that start with '-' such as
// -LRB- or -NONE- are returned unchanged.
std::string_view base_label(std::string_view label) noexcept;

// Punctuation and empty-element preterminals; these never head a phrase.
bool is_punctuation_label(std::string_view label) noexcept;

// One record of a tree file: 1-based line number and the raw bracketed text.
struct TreeLine {
  std::size_t line_number;
  std::string text;
};

// Reads a tree file, skipping blank lines and lines starting with '#'.
std::vector<TreeLine> read_tree_lines(std::istream& in);

// Streaming variant; returns false at end of input.
bool next_tree_line(std::istream& in, std::size_t& line_number, TreeLine& out);

}  // namespace hfaug
