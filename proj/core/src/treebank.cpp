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

#include "hfaug/treebank.hpp"

#include <array>
#include <istream>

#include "hfaug/error.hpp"

namespace hfaug {

ConstituencyTree ConstituencyTree::make_leaf(std::string label, std::string surface) {
  ConstituencyTree t;
  t.leaf = Token{std::move(surface), label};
  t.label = std::move(label);
  return t;
}

ConstituencyTree ConstituencyTree::make_node(std::string label,
                                             std::vector<ConstituencyTree> children) {
  ConstituencyTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

namespace {

enum class LexKind { Open, Close, Atom, End };

struct Lexeme {
  LexKind kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Lexeme next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    if (pos_ >= text_.size()) return {LexKind::End, {}, pos_};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return {LexKind::Open, text_.substr(start, 1), start};
    }
    if (c == ')') {
      ++pos_;
      return {LexKind::Close, text_.substr(start, 1), start};
    }
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    return {LexKind::Atom, text_.substr(start, pos_ - start), start};
  }

 private:
  static bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail(ErrorCode code, std::string_view what, std::size_t offset) {
  throw Error(code, std::string(what) + " at offset " + std::to_string(offset));
}

// A node under construction. `word` is set once an atom follows the label.
struct Frame {
  ConstituencyTree node;
  bool label_seen = false;
  std::optional<std::string> word;
  std::size_t offset = 0;
};

ConstituencyTree finish(Frame&& frame, std::size_t close_offset) {
  if (frame.word) {
    return ConstituencyTree::make_leaf(std::move(frame.node.label), std::move(*frame.word));
  }
  if (frame.node.children.empty()) {
    fail(ErrorCode::EmptyNode,
         "node '" + frame.node.label + "' has neither children nor a word", close_offset);
  }
  return std::move(frame.node);
}

void serialize(const ConstituencyTree& t, std::string& out) {
  out.push_back('(');
  out.append(t.label);
  if (t.leaf) {
    out.push_back(' ');
    out.append(t.leaf->surface);
  } else {
    for (const auto& c : t.children) {
      out.push_back(' ');
      serialize(c, out);
    }
  }
  out.push_back(')');
}

}  // namespace

ConstituencyTree parse_bracketed(std::string_view text) {
  Lexer lex(text);
  Lexeme tok = lex.next();
  if (tok.kind == LexKind::End) fail(ErrorCode::MalformedTree, "empty input", 0);
  if (tok.kind == LexKind::Close) fail(ErrorCode::UnbalancedBrackets, "unexpected ')'", tok.offset);
  if (tok.kind != LexKind::Open) fail(ErrorCode::MalformedTree, "tree must start with '('", tok.offset);

  std::vector<Frame> stack;
  stack.push_back(Frame{{}, false, std::nullopt, tok.offset});
  std::optional<ConstituencyTree> root;

  while (!root) {
    tok = lex.next();
    Frame& top = stack.back();
    switch (tok.kind) {
      case LexKind::End:
        fail(ErrorCode::UnbalancedBrackets, "missing ')' for node opened", top.offset);
      case LexKind::Open:
        if (top.word) fail(ErrorCode::MalformedTree, "preterminal followed by a subtree", tok.offset);
        // An unlabeled node such as the outer "( (S ...) )" wrapper.
        top.label_seen = true;
        stack.push_back(Frame{{}, false, std::nullopt, tok.offset});
        break;
      case LexKind::Atom:
        if (!top.label_seen) {
          top.node.label = std::string(tok.text);
          top.label_seen = true;
        } else if (top.word || !top.node.children.empty()) {
          fail(ErrorCode::MalformedTree, "unexpected word '" + std::string(tok.text) + "'",
               tok.offset);
        } else {
          top.word = std::string(tok.text);
        }
        break;
      case LexKind::Close: {
        ConstituencyTree done = finish(std::move(stack.back()), tok.offset);
        stack.pop_back();
        if (stack.empty()) {
          root = std::move(done);
        } else {
          stack.back().node.children.push_back(std::move(done));
        }
        break;
      }
    }
  }

  tok = lex.next();
  if (tok.kind == LexKind::Close) fail(ErrorCode::UnbalancedBrackets, "unmatched ')'", tok.offset);
  if (tok.kind != LexKind::End) fail(ErrorCode::TrailingInput, "content after root", tok.offset);
  return std::move(*root);
}

std::string to_bracketed(const ConstituencyTree& tree) {
  std::string out;
  serialize(tree, out);
  return out;
}

std::vector<Token> yield_tokens(const ConstituencyTree& tree) {
  std::vector<Token> out;
  for_each_node(tree, [&](const ConstituencyTree& n) {
    if (n.leaf) out.push_back(*n.leaf);
  });
  return out;
}

Sentence yield_surfaces(const ConstituencyTree& tree) {
  Sentence out;
  for_each_node(tree, [&](const ConstituencyTree& n) {
    if (n.leaf) out.push_back(n.leaf->surface);
  });
  return out;
}

std::size_t node_count(const ConstituencyTree& tree) {
  std::size_t n = 0;
  for_each_node(tree, [&](const ConstituencyTree&) { ++n; });
  return n;
}

std::size_t internal_node_count(const ConstituencyTree& tree) {
  std::size_t n = 0;
  for_each_node(tree, [&](const ConstituencyTree& t) { n += t.is_leaf() ? 0 : 1; });
  return n;
}

void for_each_node(const ConstituencyTree& tree,
                   const std::function<void(const ConstituencyTree&)>& visit) {
  std::vector<const ConstituencyTree*> stack{&tree};
  while (!stack.empty()) {
    const ConstituencyTree* n = stack.back();
    stack.pop_back();
    visit(*n);
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) stack.push_back(&*it);
  }
}

std::string_view base_label(std::string_view label) noexcept {
  if (label.size() <= 1 || label.front() == '-') return label;
  const std::size_t cut = label.find_first_of("-=", 1);
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

bool is_punctuation_label(std::string_view label) noexcept {
  static constexpr std::array<std::string_view, 11> kPunct = {
      ".", ",", ":", "``", "''", "-LRB-", "-RRB-", "-NONE-", "HYPH", "NFP", "PU"};
  for (auto p : kPunct) {
    if (label == p) return true;
  }
  return false;
}

bool next_tree_line(std::istream& in, std::size_t& line_number, TreeLine& out) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    out.line_number = line_number;
    out.text = std::string(view);
    return true;
  }
  return false;
}

std::vector<TreeLine> read_tree_lines(std::istream& in) {
  std::vector<TreeLine> out;
  std::size_t line_number = 0;
  TreeLine tl;
  while (next_tree_line(in, line_number, tl)) out.push_back(tl);
  return out;
}

}  // namespace hfaug
